"""
Characteristic polynomial from the intersection lattice.

The lattice of a rank 3 arrangement has four levels: the empty set, the
single lines, the vertices (as sets of lines) and the set of all lines.
Mobius values are computed by the defining recursion
mu(X) = -sum_{Y < X} mu(Y), and chi(t) = sum_X mu(X) t^(3 - rank X).
"""

from typing import Dict, FrozenSet, List

from opentelemetry import trace

from pseudoline_workbench.arrangement.incidence import require_valid_arrangement
from pseudoline_workbench.arrangement.models import Arrangement
from pseudoline_workbench.charpoly.models import CharPoly
from pseudoline_workbench.common.errors import WorkbenchError

tracer = trace.get_tracer("pseudoline_workbench.charpoly")

Flat = FrozenSet[int]


def intersection_lattice(arr: Arrangement) -> List[List[Flat]]:
    """Flats of each rank 0..3 (rank 2 flats are the vertices)."""
    n = arr.n
    return [
        [frozenset()],
        [frozenset({line}) for line in range(n)],
        [frozenset(vertex) for vertex in arr.vertices],
        [frozenset(range(n))],
    ]


def mobius_values(levels: List[List[Flat]]) -> Dict[Flat, int]:
    """mu(bottom, X) for every flat, rank by rank."""
    mu: Dict[Flat, int] = {}
    for rank, flats in enumerate(levels):
        for flat in flats:
            if rank == 0:
                mu[flat] = 1
                continue
            below = sum(mu[other] for lower in levels[:rank] for other in lower if other < flat)
            mu[flat] = -below
    return mu


def charpoly_from_lattice(arr: Arrangement) -> CharPoly:
    """
    chi(A, t) by Mobius inversion over the intersection lattice.

    Args:
        arr: A valid arrangement

    Returns:
        The CharPoly; its f2 is read off the linear coefficient

    Example:
        >>> from pseudoline_workbench.arrangement.models import Arrangement
        >>> str(charpoly_from_lattice(Arrangement(n=3, vertices=[(0, 1), (0, 2), (1, 2)])))
        't^3 - 3t^2 + 3t - 1'
    """
    with tracer.start_as_current_span("charpoly_from_lattice") as span:
        span.set_attribute("n", arr.n)
        require_valid_arrangement(arr)
        levels = intersection_lattice(arr)
        mu = mobius_values(levels)

        coefficients = [0, 0, 0, 0]
        for rank, flats in enumerate(levels):
            coefficients[rank] += sum(mu[flat] for flat in flats)

        leading, quadratic, linear, constant = coefficients
        n = arr.n
        if leading != 1 or quadratic != -n or constant != n - (linear + 1):
            raise WorkbenchError(f"lattice polynomial {coefficients} is not of rank 3 shape for n={n}")
        p = CharPoly(n=n, f2=linear + 1)
        span.set_attribute("chi", str(p))
        return p
