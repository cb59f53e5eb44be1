"""
Projective chambers of a wiring diagram.

The sweep keeps one open affine cell per gap between adjacent wires
(gap 0 below wire position 0, gap n above position n-1). A move on
positions a..b closes the cells in gaps a+1..b and opens new ones there;
the cells in gaps a and b+1 touch the new vertex and gain the wire that
now borders them.

Unbounded cells are glued through the line at infinity: the bottom and
top cells form one chamber, and the cell leaving to the left in gap k is
the same chamber as the cell leaving to the right in gap n-k (the wire
order at the right end is reversed). The gluing is done with networkx
connected components.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Set

import networkx as nx  # type: ignore
from opentelemetry import trace

from pseudoline_workbench.arrangement.models import Chamber, FVector, WiringDiagram
from pseudoline_workbench.arrangement.wiring import require_valid_wiring

tracer = trace.get_tracer("pseudoline_workbench.arrangement")


@dataclass
class _Cell:
    lines: Set[int]
    vertices: Set[int] = field(default_factory=set)
    left_gap: Optional[int] = None
    right_gap: Optional[int] = None


def _sweep_cells(w: WiringDiagram) -> List[_Cell]:
    n = w.n
    order = list(range(n))
    cells: List[_Cell] = []
    open_cells: List[int] = []

    for gap in range(n + 1):
        walls = set()
        if gap > 0:
            walls.add(order[gap - 1])
        if gap < n:
            walls.add(order[gap])
        cells.append(_Cell(lines=walls, left_gap=gap))
        open_cells.append(gap)

    for index, (a, b) in enumerate(w.moves):
        for gap in range(a + 1, b + 1):
            cells[open_cells[gap]].vertices.add(index)

        order[a : b + 1] = order[a : b + 1][::-1]

        for gap in range(a + 1, b + 1):
            cells.append(_Cell(lines={order[gap - 1], order[gap]}, vertices={index}))
            open_cells[gap] = len(cells) - 1

        below = cells[open_cells[a]]
        below.vertices.add(index)
        below.lines.add(order[a])
        above = cells[open_cells[b + 1]]
        above.vertices.add(index)
        above.lines.add(order[b])

    for gap in range(n + 1):
        cells[open_cells[gap]].right_gap = gap
    return cells


def chambers(w: WiringDiagram) -> List[Chamber]:
    """
    Extract the projective chambers of a wiring diagram.

    Args:
        w: A valid wiring diagram

    Returns:
        Chambers ordered by their first affine cell in sweep order; vertex
        ids are move indices. The count equals f2 of the t-vector.
    """
    with tracer.start_as_current_span("chambers") as span:
        require_valid_wiring(w)
        n = w.n
        cells = _sweep_cells(w)

        left = {cell.left_gap: index for index, cell in enumerate(cells) if cell.left_gap is not None}
        right = {cell.right_gap: index for index, cell in enumerate(cells) if cell.right_gap is not None}

        gluing = nx.Graph()
        gluing.add_nodes_from(range(len(cells)))
        for gap in range(n + 1):
            gluing.add_edge(left[gap], right[n - gap])

        components = sorted((sorted(component) for component in nx.connected_components(gluing)), key=lambda c: c[0])
        result = []
        for chamber_id, component in enumerate(components):
            lines: Set[int] = set()
            vertices: Set[int] = set()
            for index in component:
                lines |= cells[index].lines
                vertices |= cells[index].vertices
            result.append(
                Chamber(
                    id=chamber_id,
                    lines=tuple(sorted(lines)),
                    vertices=tuple(sorted(vertices)),
                    cells=len(component),
                )
            )

        span.set_attribute("n", n)
        span.set_attribute("chambers", len(result))
        return result


def measured_f_vector(w: WiringDiagram) -> FVector:
    """
    f-vector counted on the cell decomposition itself rather than from t.

    f0 is the number of moves, f1 sums the block sizes (a pseudoline through
    k vertices is cut into k edges) and f2 counts extracted chambers.
    """
    require_valid_wiring(w)
    return FVector(f0=len(w.moves), f1=sum(w.block_sizes()), f2=len(chambers(w)))
