"""
Exact construction from rational lines.

Points and lines of the projective plane are homogeneous triples of
Fractions; the meet of two lines is their cross product. Points are
normalised (first nonzero coordinate 1) so equal points compare equal and
can key a dict. Nothing is ever merged by tolerance.
"""

from collections import defaultdict
from fractions import Fraction
from itertools import combinations, product
from typing import Dict, List, Sequence, Tuple

from opentelemetry import trace

from pseudoline_workbench.arrangement.models import Arrangement, LineSweep, RationalLine, WiringDiagram
from pseudoline_workbench.common.errors import DuplicateLineError, PencilError, WorkbenchError, WorkbenchInputError

tracer = trace.get_tracer("pseudoline_workbench.arrangement")

Point = Tuple[Fraction, Fraction, Fraction]

# coordinate range searched for a sweep chart
CHART_SEARCH_RANGE = 8


def _cross(u: Sequence[Fraction], v: Sequence[Fraction]) -> Point:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _normalise(point: Point) -> Point:
    pivot = next(value for value in point if value != 0)
    return (point[0] / pivot, point[1] / pivot, point[2] / pivot)


def _check_lines(lines: Sequence[RationalLine]) -> None:
    if len(lines) < 3:
        raise WorkbenchInputError(f"need at least 3 lines, got {len(lines)}")
    seen: Dict[Tuple[Fraction, Fraction, Fraction], int] = {}
    for index, line in enumerate(lines):
        key = line.coefficients()
        if key in seen:
            raise DuplicateLineError(f"lines {seen[key]} and {index} coincide ({line})")
        seen[key] = index


def intersection_points(lines: Sequence[RationalLine]) -> Dict[Point, List[int]]:
    """Map each intersection point to the sorted ids of the lines through it."""
    _check_lines(lines)
    incidences: Dict[Point, set] = defaultdict(set)
    for i, j in combinations(range(len(lines)), 2):
        point = _normalise(_cross(lines[i].coefficients(), lines[j].coefficients()))
        incidences[point].update((i, j))
    return {point: sorted(ids) for point, ids in incidences.items()}


def lines_to_arrangement(lines: Sequence[RationalLine]) -> Arrangement:
    """
    Incidence structure of a list of rational lines.

    Args:
        lines: At least three pairwise distinct lines

    Returns:
        Arrangement with vertices sorted lexicographically

    Raises:
        DuplicateLineError: two lines are proportional
        PencilError: all lines pass through one point
    """
    with tracer.start_as_current_span("lines_to_arrangement") as span:
        span.set_attribute("lines", len(lines))
        points = intersection_points(lines)
        n = len(lines)
        if len(points) == 1:
            raise PencilError(f"all {n} lines pass through one point")
        vertices = sorted(tuple(ids) for ids in points.values())
        span.set_attribute("vertices", len(vertices))
        return Arrangement(n=n, vertices=vertices)


def _sweep_chart(
    lines: Sequence[RationalLine], points: Sequence[Point]
) -> Tuple[Point, Point, Point]:
    """
    Pick affine coordinates X = u.P / w.P, Y = v.P / w.P such that no vertex
    lies on the chart's line at infinity w and no line passes through the
    sweep direction u x w. The search is deterministic.
    """
    v: Point = (Fraction(0), Fraction(1), Fraction(0))
    bound = CHART_SEARCH_RANGE
    candidates = sorted(product(range(bound), range(bound), range(1, bound)), key=lambda c: (sum(c), c))
    for p, q, s in candidates:
        u: Point = (Fraction(1), Fraction(s), Fraction(0))
        w: Point = (Fraction(p), Fraction(q), Fraction(1))
        if any(_dot(w, point) == 0 for point in points):
            continue
        direction = _cross(u, w)
        if any(_dot(line.coefficients(), direction) == 0 for line in lines):
            continue
        return u, v, w
    raise WorkbenchInputError(
        f"no generic sweep chart with coordinates below {CHART_SEARCH_RANGE} for these {len(lines)} lines"
    )


def lines_to_wiring(lines: Sequence[RationalLine]) -> LineSweep:
    """
    Realise a line arrangement as a wiring diagram by an exact sweep.

    Vertices are visited by increasing X (then Y); at each vertex the lines
    through it occupy a contiguous block of the current order and are
    reversed.

    Args:
        lines: At least three distinct, non-concurrent lines

    Returns:
        LineSweep whose wiring starts with wire i = line wire_lines[i]
    """
    with tracer.start_as_current_span("lines_to_wiring") as span:
        span.set_attribute("lines", len(lines))
        incidences = intersection_points(lines)
        if len(incidences) == 1:
            raise PencilError(f"all {len(lines)} lines pass through one point")

        u, v, w = _sweep_chart(lines, list(incidences))

        def chart(point: Point) -> Tuple[Fraction, Fraction]:
            scale = _dot(w, point)
            return (_dot(u, point) / scale, _dot(v, point) / scale)

        located = sorted((chart(point), ids) for point, ids in incidences.items())
        start = located[0][0][0] - 1
        vertical: Point = (u[0] - start * w[0], u[1] - start * w[1], u[2] - start * w[2])

        def height(line: RationalLine) -> Fraction:
            return chart(_cross(line.coefficients(), vertical))[1]

        order = sorted(range(len(lines)), key=lambda index: height(lines[index]))
        wire_lines = list(order)

        moves = []
        for _, ids in located:
            positions = sorted(order.index(line_id) for line_id in ids)
            a, b = positions[0], positions[-1]
            if b - a + 1 != len(ids):
                raise WorkbenchError(f"lines {ids} are not adjacent at their common vertex")
            order[a : b + 1] = order[a : b + 1][::-1]
            moves.append((a, b))

        span.set_attribute("moves", len(moves))
        return LineSweep(wiring=WiringDiagram(n=len(lines), moves=moves), wire_lines=wire_lines)
