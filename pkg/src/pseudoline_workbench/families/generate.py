"""
Generators for the named arrangements and the infinite families.

Every generator returns the t-vector. Rational realisations exist for the
near pencils, A(6,1), A(8,1), A(9,1), A(13,2) and Kelly-Moser; the other
R(1) and R(2) members are emitted at t-vector level only.
"""

from collections import Counter
from typing import Dict, List, Optional, Union

from opentelemetry import trace

from pseudoline_workbench.arrangement.incidence import t_vector
from pseudoline_workbench.arrangement.lines import lines_to_arrangement, lines_to_wiring
from pseudoline_workbench.arrangement.models import RationalLine, TVector
from pseudoline_workbench.common.errors import ParameterRangeError, WorkbenchError, WorkbenchInputError
from pseudoline_workbench.families.models import Family, FamilyTag, GeneratedFamily

tracer = trace.get_tracer("pseudoline_workbench.families")

FAMILY_NAMES = ("near-pencil", "r1", "r2", "coxeter", "a132", "kelly-moser")

COXETER_VECTORS: Dict[str, TVector] = {
    "A61": TVector.from_sequence(6, [3, 4]),
    "A91": TVector.from_sequence(9, [6, 4, 3]),
    "A151": TVector.from_sequence(15, [15, 10, 0, 6]),
}
A132_VECTOR = TVector.from_sequence(13, [12, 4, 9])
KELLY_MOSER_VECTOR = TVector.from_sequence(7, [3, 6])


def _line(a, b, c) -> RationalLine:
    return RationalLine.of(a, b, c)


def near_pencil_lines(n: int) -> List[RationalLine]:
    """n-1 lines through the origin plus x + y = 1."""
    pencil = [_line(0, 1, 0), _line(1, 0, 0)] + [_line(j, -1, 0) for j in range(1, n - 2)]
    return pencil + [_line(1, 1, -1)]


def a61_lines() -> List[RationalLine]:
    """Triangle (0,0), (2,0), (0,2) and its three medians."""
    return [_line(1, 0, 0), _line(0, 1, 0), _line(1, 1, -2), _line(1, -1, 0), _line(1, 2, -2), _line(2, 1, -2)]


def a81_lines() -> List[RationalLine]:
    """The square |x|, |y| <= 1 with its four symmetry axes."""
    square = [_line(1, 0, -1), _line(1, 0, 1), _line(0, 1, -1), _line(0, 1, 1)]
    return square + [_line(1, 0, 0), _line(0, 1, 0), _line(1, -1, 0), _line(1, 1, 0)]


def a91_lines() -> List[RationalLine]:
    return a81_lines() + [_line(0, 0, 1)]


def kelly_moser_lines() -> List[RationalLine]:
    """Coordinate triangle, x + y + z = 0 and the three two-term lines."""
    return [
        _line(1, 0, 0),
        _line(0, 1, 0),
        _line(0, 0, 1),
        _line(1, 1, 1),
        _line(1, 1, 0),
        _line(1, 0, 1),
        _line(0, 1, 1),
    ]


def a132_lines() -> List[RationalLine]:
    """
    The 3x3 grid: x = 0, 1, 2 and y = 0, 1, 2, the slope +1 diagonals
    y = x - 1, x, x + 1, the slope -1 diagonals x + y = 1, 2, 3, and the
    line at infinity.
    """
    verticals = [_line(1, 0, -k) for k in range(3)]
    horizontals = [_line(0, 1, -k) for k in range(3)]
    rising = [_line(1, -1, d) for d in (-1, 0, 1)]
    falling = [_line(1, 1, -s) for s in (1, 2, 3)]
    return verticals + horizontals + rising + falling + [_line(0, 0, 1)]


def r1_vector(m: int) -> TVector:
    """
    A(2m, 1): t2 = m, t3 = (m^2 - m)/2, t_m = 1; m = 3 gives A(6,1) = (3,4).
    """
    counts = Counter({2: m, 3: (m * m - m) // 2}) + Counter({m: 1})
    return TVector(n=2 * m, counts=dict(counts))


def r2_vector(k: int) -> TVector:
    """
    A(4k+1, 1), obtained from A(4k, 1) by adding the line at infinity:
    t2 = 3k, t3 = 2k^2 - 2k, t4 = k, t_{2k} = 1 (the last two merge for k = 2).
    """
    counts = Counter({2: 3 * k, 3: 2 * k * k - 2 * k, 4: k}) + Counter({2 * k: 1})
    return TVector(n=4 * k + 1, counts=dict(counts))


def near_pencil_vector(n: int) -> TVector:
    return TVector(n=n, counts={2: n - 1, n - 1: 1})


def _realised(tag: FamilyTag, t: TVector, lines: Optional[List[RationalLine]]) -> GeneratedFamily:
    if lines is None:
        return GeneratedFamily(tag=tag, n=t.n, t=t)
    realised = t_vector(lines_to_arrangement(lines))
    if realised != t:
        raise WorkbenchError(f"{tag} realisation has t={realised}, expected {t}")
    return GeneratedFamily(tag=tag, n=t.n, t=t, lines=lines, sweep=lines_to_wiring(lines))


def _int_parameter(family: str, parameter: Union[int, str, None], name: str) -> int:
    if parameter is None:
        raise ParameterRangeError(f"family {family} needs --{name}")
    try:
        return int(parameter)
    except (TypeError, ValueError):
        raise ParameterRangeError(f"family {family}: {name} must be an integer, got {parameter!r}") from None


def generate(family: str, parameter: Union[int, str, None] = None) -> GeneratedFamily:
    """
    Build a named arrangement or a family member.

    Args:
        family: One of "near-pencil" (parameter n >= 4), "r1" (m >= 3),
            "r2" (k >= 2, giving 4k + 1 lines), "coxeter" (A61, A91, A151),
            "a132", "kelly-moser"
        parameter: The family parameter, ignored by the sporadic ones

    Returns:
        GeneratedFamily with the t-vector and, where available, the lines and
        a wiring diagram swept from them

    Raises:
        ParameterRangeError: parameter missing or out of range
        WorkbenchInputError: unknown family

    Example:
        >>> str(generate("r1", 5).t)
        '(5,10,0,1)'
    """
    with tracer.start_as_current_span("generate") as span:
        span.set_attribute("family", family)
        span.set_attribute("parameter", str(parameter))

        if family == "near-pencil":
            n = _int_parameter(family, parameter, "n")
            if n < 4:
                raise ParameterRangeError(f"near pencil needs n >= 4, got {n}")
            return _realised(FamilyTag.of(Family.NEAR_PENCIL, n), near_pencil_vector(n), near_pencil_lines(n))

        if family == "r1":
            m = _int_parameter(family, parameter, "m")
            if m < 3:
                raise ParameterRangeError(f"R(1) needs m >= 3, got {m}")
            lines = {3: a61_lines(), 4: a81_lines()}.get(m)
            return _realised(FamilyTag.of(Family.R1, m), r1_vector(m), lines)

        if family == "r2":
            k = _int_parameter(family, parameter, "k")
            if k < 2:
                raise ParameterRangeError(f"R(2) needs k >= 2, got {k}")
            lines = a91_lines() if k == 2 else None
            return _realised(FamilyTag.of(Family.R2, 4 * k + 1), r2_vector(k), lines)

        if family == "coxeter":
            name = str(parameter or "")
            if name not in COXETER_VECTORS:
                raise ParameterRangeError(f"Coxeter name must be one of {', '.join(COXETER_VECTORS)}, got {name!r}")
            lines = {"A61": a61_lines(), "A91": a91_lines()}.get(name)
            return _realised(FamilyTag.of(Family.COXETER, name), COXETER_VECTORS[name], lines)

        if family == "a132":
            return _realised(FamilyTag.of(Family.A132), A132_VECTOR, a132_lines())

        if family == "kelly-moser":
            return _realised(FamilyTag.of(Family.KELLY_MOSER), KELLY_MOSER_VECTOR, kelly_moser_lines())

        raise WorkbenchInputError(f"unknown family {family!r}; known: {', '.join(FAMILY_NAMES)}")
