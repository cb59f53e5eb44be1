"""
Wiring diagrams: validation, conversion to incidence form, neighbourhoods
along the pseudolines and a random generator for property tests.
"""

import random
from collections import Counter
from itertools import combinations
from typing import Dict, List, Set

from opentelemetry import trace

from pseudoline_workbench.arrangement.models import Arrangement, WiringDiagram
from pseudoline_workbench.common.errors import InvalidWiringError, ParameterRangeError, PencilError
from pseudoline_workbench.common.exact import pairs
from pseudoline_workbench.common.models import ValidationReport

tracer = trace.get_tracer("pseudoline_workbench.arrangement")


def validate_wiring(w: WiringDiagram) -> ValidationReport:
    """
    Replay the moves and check that every pair of wires crosses exactly once.

    Args:
        w: The wiring diagram

    Returns:
        ValidationReport with one entry per violated condition
    """
    issues = []
    n = w.n
    if n < 3:
        issues.append(f"need at least 3 wires, got n={n}")

    order = list(range(max(n, 0)))
    crossings: Counter = Counter()
    for index, (a, b) in enumerate(w.moves):
        if not (0 <= a < b < n):
            issues.append(f"move {index} {a}..{b} is not a block of >= 2 positions inside [0,{n})")
            continue
        if b - a + 1 == n:
            issues.append(f"pencil: move {index} crosses all {n} wires at once")
        block = order[a : b + 1]
        for pair in combinations(sorted(block), 2):
            crossings[pair] += 1
        order[a : b + 1] = block[::-1]

    total = sum(pairs(size) for size in w.block_sizes() if size >= 2)
    if total != pairs(n):
        issues.append(f"moves account for {total} crossings, expected C({n},2)={pairs(n)}")

    for pair in combinations(range(max(n, 0)), 2):
        seen = crossings.get(pair, 0)
        if seen != 1:
            issues.append(f"wires {pair[0]},{pair[1]} cross {seen} times")

    return ValidationReport(subject="wiring", n=n, issues=issues)


def require_valid_wiring(w: WiringDiagram) -> WiringDiagram:
    """Raise unless w is valid; a lone all-wire move raises PencilError."""
    report = validate_wiring(w)
    if report.is_valid():
        return w
    if any(issue.startswith("pencil") for issue in report.issues):
        raise PencilError(f"wiring on {w.n} wires is a pencil")
    raise InvalidWiringError("invalid wiring diagram: " + "; ".join(report.issues[:5]))


def wire_blocks(w: WiringDiagram) -> List[List[int]]:
    """Wire ids taking part in each move, in move order (positions bottom to top before the move)."""
    order = list(range(w.n))
    blocks = []
    for a, b in w.moves:
        block = order[a : b + 1]
        blocks.append(block)
        order[a : b + 1] = block[::-1]
    return blocks


def wiring_to_arrangement(w: WiringDiagram) -> Arrangement:
    """
    One vertex per move, holding the wires of the reversed block.

    Args:
        w: A valid wiring diagram

    Returns:
        The incidence form; vertex k is move k
    """
    with tracer.start_as_current_span("wiring_to_arrangement") as span:
        span.set_attribute("n", w.n)
        span.set_attribute("moves", len(w.moves))
        require_valid_wiring(w)
        return Arrangement(n=w.n, vertices=[tuple(sorted(block)) for block in wire_blocks(w)])


def wire_paths(w: WiringDiagram) -> Dict[int, List[int]]:
    """For each wire, the moves it takes part in, in sweep order."""
    paths: Dict[int, List[int]] = {wire: [] for wire in range(w.n)}
    for index, block in enumerate(wire_blocks(w)):
        for wire in block:
            paths[wire].append(index)
    return paths


def vertex_neighbours(w: WiringDiagram) -> Dict[int, Set[int]]:
    """
    Vertices adjacent along a pseudoline. Each pseudoline is closed in the
    projective plane, so its first and last vertices are neighbours too.
    """
    neighbours: Dict[int, Set[int]] = {index: set() for index in range(len(w.moves))}
    for path in wire_paths(w).values():
        if len(path) < 2:
            continue
        for position, vertex in enumerate(path):
            neighbours[vertex].add(path[position - 1])
            neighbours[vertex].add(path[(position + 1) % len(path)])
    for vertex in neighbours:
        neighbours[vertex].discard(vertex)
    return neighbours


def random_wiring(n: int, rng: random.Random, merge_probability: float = 0.5) -> WiringDiagram:
    """
    Random valid wiring diagram with occasional multi-wire crossings.

    At each step an adjacent uncrossed pair is picked and grown, with
    probability merge_probability per step, into a longer block of pairwise
    uncrossed wires. Blocks never span all n wires, so the result is never a
    pencil.

    Args:
        n: Number of wires (at least 3)
        rng: Seeded random source
        merge_probability: Chance of growing a block by one more wire

    Returns:
        A valid WiringDiagram
    """
    if n < 3:
        raise ParameterRangeError(f"random_wiring needs n >= 3, got {n}")

    order = list(range(n))
    moves = []
    while True:
        candidates = [k for k in range(n - 1) if order[k] < order[k + 1]]
        if not candidates:
            break
        k = rng.choice(candidates)
        a, b = k, k + 1
        while a > 0 and order[a - 1] < order[a] and rng.random() < merge_probability:
            a -= 1
        while b < n - 1 and order[b] < order[b + 1] and rng.random() < merge_probability:
            b += 1
        if b - a + 1 == n:
            if rng.random() < 0.5:
                a += 1
            else:
                b -= 1
        order[a : b + 1] = order[a : b + 1][::-1]
        moves.append((a, b))
    return WiringDiagram(n=n, moves=moves)


def has_double_point_with_triple_neighbours(w: WiringDiagram) -> bool:
    """
    True when some double point has only weight-3 vertices next to it along
    both of its pseudolines. Only A(6,1) and A(7,1) have such a vertex.
    """
    sizes = w.block_sizes()
    for vertex, around in vertex_neighbours(w).items():
        if sizes[vertex] == 2 and around and all(sizes[other] == 3 for other in around):
            return True
    return False
