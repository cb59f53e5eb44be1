"""
Chamber graphs Gamma^C and the combinatorial Coxeter characterisation.

An arrangement is a spherical Coxeter arrangement exactly when every chamber
graph is isomorphic to one connected graph. That graph is then the path
l1 - l2 - l3 with edge weights 3 and x, and x in {3, 4, 5} picks A(6,1),
A(9,1) or A(15,1).
"""

from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Dict, List, Optional, Tuple

import networkx as nx  # type: ignore
import sympy  # type: ignore
from networkx.algorithms.isomorphism import numerical_edge_match  # type: ignore
from opentelemetry import trace

from pseudoline_workbench.arrangement.chambers import chambers
from pseudoline_workbench.arrangement.incidence import pair_weights
from pseudoline_workbench.arrangement.models import Chamber, TVector, WiringDiagram
from pseudoline_workbench.arrangement.wiring import wiring_to_arrangement
from pseudoline_workbench.common.errors import ChamberNotFoundError, ParameterRangeError
from pseudoline_workbench.common.exact import integer_sqrt_exact
from pseudoline_workbench.families.models import ChamberGraph, CoxeterResult, CoxSolution, Family, FamilyTag

tracer = trace.get_tracer("pseudoline_workbench.families")

COXETER_BY_X = {3: "A61", 4: "A91", 5: "A151"}

_weight_match = numerical_edge_match("weight", 0)


def _graph_of(chamber: Chamber, weights: Dict[Tuple[int, int], int]) -> ChamberGraph:
    edges = []
    for u, v in combinations(chamber.lines, 2):
        weight = weights[(u, v)]
        if weight >= 3:
            edges.append((u, v, weight))
    return ChamberGraph(chamber_id=chamber.id, lines=chamber.lines, edges=edges)


def chamber_graph(w: WiringDiagram, chamber: Chamber) -> ChamberGraph:
    """
    Gamma^C of one chamber of w.

    Two bounding lines are joined when they meet, anywhere in the
    arrangement, in a vertex of weight >= 3.

    Raises:
        ChamberNotFoundError: chamber is not one of chambers(w)
    """
    if chamber not in chambers(w):
        raise ChamberNotFoundError(f"chamber {chamber.id} with lines {chamber.lines} is not a chamber of this wiring")
    return _graph_of(chamber, pair_weights(wiring_to_arrangement(w)))


def chamber_graphs(w: WiringDiagram) -> List[ChamberGraph]:
    """Gamma^C for every chamber, in chamber order."""
    weights = pair_weights(wiring_to_arrangement(w))
    return [_graph_of(chamber, weights) for chamber in chambers(w)]


def _isomorphism_classes(graphs: List[ChamberGraph]) -> List[nx.Graph]:
    representatives: List[nx.Graph] = []
    for graph in graphs:
        candidate = graph.to_networkx()
        if not any(nx.is_isomorphic(candidate, known, edge_match=_weight_match) for known in representatives):
            representatives.append(candidate)
    return representatives


def coxeter_test(w: WiringDiagram) -> CoxeterResult:
    """
    Decide whether all chamber graphs are isomorphic to one connected graph.

    Args:
        w: A valid wiring diagram

    Returns:
        CoxeterResult; when uniform it carries x and the Coxeter tag
    """
    with tracer.start_as_current_span("coxeter_test") as span:
        graphs = chamber_graphs(w)
        classes = _isomorphism_classes(graphs)
        isomorphic = len(classes) == 1
        connected = all(graph.is_connected() for graph in graphs)
        span.set_attribute("chambers", len(graphs))
        span.set_attribute("classes", len(classes))
        span.set_attribute("connected", connected)

        if not isomorphic:
            reason = f"{len(classes)} non-isomorphic chamber graphs"
        elif not connected:
            reason = "chamber graphs are disconnected"
        else:
            reason = None
        result = CoxeterResult(
            chambers=len(graphs),
            classes=len(classes),
            isomorphic=isomorphic,
            connected=connected,
            graph=graphs[0] if isomorphic and graphs else None,
            reason=reason,
        )
        if not result.is_uniform():
            return result

        shape = graphs[0]
        weights = shape.edge_weights()
        if len(shape.lines) != 3 or len(weights) != 2 or weights[0] != 3:
            reason = f"uniform graph is not a 3-vertex path with a weight-3 edge: {shape.describe()}"
            return result.model_copy(update={"reason": reason})
        x = weights[1]
        name = COXETER_BY_X.get(x)
        span.set_attribute("x", x)
        tag = FamilyTag.of(Family.COXETER, name) if name else None
        return result.model_copy(update={"x": x, "tag": tag})


def _to_fraction(value) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def solve_cox_system(x: int) -> CoxSolution:
    """
    Solve the linear system forced by uniform chamber graphs with weight x.

    Unknowns t2, t3, t_x and C = C(n,2):
        t2 - (x-3) t_x = 3
        t2 + 3 t3 + C(x,2) t_x - C = 0
        2 t2 - 3 t3 = 0
        3 t3 - x t_x = 0

    Args:
        x: The second edge weight, at least 4

    Returns:
        CoxSolution; feasible only with positive integral counts and C a
        binomial coefficient C(n,2)

    Raises:
        ParameterRangeError: x < 4

    Example:
        >>> str(solve_cox_system(4).t)
        '(6,4,3)'
    """
    if x < 4:
        raise ParameterRangeError(f"solve_cox_system needs x >= 4, got {x}")

    system = sympy.Matrix(
        [
            [1, 0, -(x - 3), 0],
            [1, 3, comb(x, 2), -1],
            [2, -3, 0, 0],
            [0, 3, -x, 0],
        ]
    )
    rhs = sympy.Matrix([3, 0, 0, 0])
    if system.det() == 0:
        return CoxSolution(x=x, feasible=False, singular=True, reason="singular system")

    t2, t3, tx, total = (_to_fraction(value) for value in system.LUsolve(rhs))
    values = {"t2": t2, "t3": t3, "tx": tx, "pair_total": total}

    reason: Optional[str] = None
    n: Optional[int] = None
    if any(value <= 0 for value in (t2, t3, tx, total)):
        reason = "non-positive value"
    elif any(value.denominator != 1 for value in (t2, t3, tx, total)):
        reason = "non-integral value"
    else:
        root = integer_sqrt_exact(8 * int(total) + 1)
        if root is None or (1 + root) % 2:
            reason = f"C(n,2) = {total} is not a binomial coefficient"
        else:
            n = (1 + root) // 2

    if reason is not None or n is None:
        return CoxSolution(x=x, feasible=False, reason=reason, **values)
    t = TVector(n=n, counts={2: int(t2), 3: int(t3), x: int(tx)})
    return CoxSolution(x=x, feasible=True, n=n, t=t, **values)


def chambers_with_few_triple_points(w: WiringDiagram) -> List[int]:
    """
    Ids of chambers with at most one weight-3 vertex in their closure. A
    simplicial arrangement on n >= 8 lines always has one.
    """
    sizes = w.block_sizes()
    return [chamber.id for chamber in chambers(w) if sum(1 for v in chamber.vertices if sizes[v] == 3) <= 1]
