"""
Incidence-level invariants: validation, t-vector, f-vector and the
simplicial / near-pencil predicates.
"""

from collections import Counter
from itertools import combinations
from typing import Dict, Tuple

from opentelemetry import trace

from pseudoline_workbench.arrangement.models import Arrangement, FVector, TVector
from pseudoline_workbench.common.errors import InvalidArrangementError
from pseudoline_workbench.common.models import ValidationReport

tracer = trace.get_tracer("pseudoline_workbench.arrangement")


def validate_arrangement(arr: Arrangement) -> ValidationReport:
    """
    Check the incidence invariants of an arrangement.

    Every unordered pair of lines must lie in exactly one vertex, ids must be
    in range, vertices need at least two distinct lines, and no vertex may
    contain all lines (pencil). Violations are collected, never raised.

    Args:
        arr: The arrangement to validate

    Returns:
        ValidationReport listing every violation
    """
    issues = []
    n = arr.n
    if n < 3:
        issues.append(f"need at least 3 lines, got n={n}")

    coverage: Counter = Counter()
    for index, vertex in enumerate(arr.vertices):
        label = "{" + ",".join(str(i) for i in vertex) + "}"
        if len(vertex) < 2:
            issues.append(f"vertex {index} {label} has fewer than 2 lines")
        if len(set(vertex)) != len(vertex):
            issues.append(f"vertex {index} {label} repeats a line id")
        out_of_range = [i for i in vertex if i < 0 or i >= n]
        if out_of_range:
            issues.append(f"vertex {index} {label} has line ids outside [0,{n})")
        if n >= 1 and set(vertex) == set(range(n)):
            issues.append(f"pencil: vertex {index} contains all {n} lines")
        for pair in combinations(sorted(set(vertex)), 2):
            coverage[pair] += 1

    for i, j in combinations(range(max(n, 0)), 2):
        seen = coverage.get((i, j), 0)
        if seen == 0:
            issues.append(f"uncovered pair {{{i},{j}}}")
        elif seen > 1:
            issues.append(f"pair {{{i},{j}}} meets in {seen} vertices")

    return ValidationReport(subject="arrangement", n=n, issues=issues)


def require_valid_arrangement(arr: Arrangement) -> Arrangement:
    """Raise InvalidArrangementError with the first issues if arr is not valid."""
    report = validate_arrangement(arr)
    if not report.is_valid():
        raise InvalidArrangementError("invalid arrangement: " + "; ".join(report.issues[:5]))
    return arr


def t_vector(arr: Arrangement) -> TVector:
    """
    Count vertices by weight.

    Args:
        arr: A valid arrangement

    Returns:
        The t-vector (t_i = number of vertices on exactly i lines)
    """
    with tracer.start_as_current_span("t_vector") as span:
        span.set_attribute("n", arr.n)
        require_valid_arrangement(arr)
        t = TVector(n=arr.n, counts=dict(Counter(len(vertex) for vertex in arr.vertices)))
        span.set_attribute("t", str(t))
        return t


def f_vector(t: TVector) -> FVector:
    """
    Vertex, edge and chamber counts from the t-vector.

    f0 = sum t_i, f1 = sum i*t_i, f2 = 1 + sum (i-1)*t_i.

    Example:
        >>> f_vector(TVector.from_sequence(13, [12, 4, 9])).f2
        48
    """
    t.require_consistent()
    f0 = sum(t.counts.values())
    f1 = sum(weight * count for weight, count in t.counts.items())
    f2 = 1 + sum((weight - 1) * count for weight, count in t.counts.items())
    return FVector(f0=f0, f1=f1, f2=f2)


def melchior_excess(t: TVector) -> int:
    """t2 - 3 - sum_{i>=4} (i-3) t_i; never negative for a real arrangement."""
    return t.t(2) - 3 - sum((weight - 3) * count for weight, count in t.counts.items() if weight >= 4)


def is_simplicial(t: TVector) -> bool:
    """Equality in Melchior's inequality."""
    t.require_consistent()
    return melchior_excess(t) == 0


def is_near_pencil(t: TVector) -> bool:
    """Exactly n-1 double points and one vertex on n-1 lines."""
    n = t.n
    if n < 4:
        return False
    return t.counts == {2: n - 1, n - 1: 1}


def is_trivial(t: TVector) -> bool:
    """
    Near pencils and smaller: some vertex lies on n-1 or n lines. For n=3
    this is the triangle, whose double points lie on n-1 lines.
    """
    return t.t(t.n - 1) > 0 or t.t(t.n) > 0


def multiplicity(t: TVector) -> int:
    return t.multiplicity


def pair_weights(arr: Arrangement) -> Dict[Tuple[int, int], int]:
    """Weight of the vertex where lines i < j meet, for every pair."""
    weights: Dict[Tuple[int, int], int] = {}
    for vertex in arr.vertices:
        for pair in combinations(vertex, 2):
            weights[pair] = len(vertex)
    return weights
