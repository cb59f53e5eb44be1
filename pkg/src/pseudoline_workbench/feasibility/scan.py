"""
Scans over ranges of n and the probes built on them.

scan_bound runs one enumeration per n, either in order or concurrently over a
process pool (every n is independent). The rows always come back ordered by
n, so reports do not depend on the worker count.
"""

import asyncio
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Iterable, Iterator, List, Optional, Tuple

from opentelemetry import trace

from pseudoline_workbench.arrangement.models import TVector
from pseudoline_workbench.common.errors import ParameterRangeError
from pseudoline_workbench.common.exact import to_fraction
from pseudoline_workbench.feasibility.bounds import epsilon_bound, epsilon_ratio, stated_bound_for
from pseudoline_workbench.feasibility.enumerate import enumerate_feasible
from pseudoline_workbench.feasibility.models import (
    DiracProbe,
    FeasibilityQuery,
    RatioReport,
    RatioRow,
    ScanReport,
    ScanRow,
    StatedBound,
)
from pseudoline_workbench.families.generate import KELLY_MOSER_VECTOR, r1_vector

tracer = trace.get_tracer("pseudoline_workbench.feasibility")


def query_for(template: FeasibilityQuery, n: int) -> FeasibilityQuery:
    """The template moved to n lines, counting only, max_mult capped at n-1."""
    return template.model_copy(update={"n": n, "max_mult": min(template.max_mult, n - 1), "count_only": True})


def _scan_one(q: FeasibilityQuery) -> ScanRow:
    result = enumerate_feasible(q)
    return ScanRow(n=q.n, feasible=result.count, nodes=result.stats.nodes, pruned=result.stats.pruned)


async def _scan_parallel(queries: List[FeasibilityQuery], workers: int) -> List[ScanRow]:
    loop = asyncio.get_running_loop()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        tasks = [loop.run_in_executor(pool, _scan_one, q) for q in queries]
        return await asyncio.gather(*tasks)


def scan_bound(
    template: FeasibilityQuery,
    n_from: int,
    n_to: int,
    workers: int = 1,
    stated: Optional[StatedBound] = None,
    progress: bool = True,
) -> ScanReport:
    """
    Count feasible t-vectors of one profile for every n in [n_from, n_to].

    Args:
        template: The profile; its n is ignored
        n_from: First n (at least 3)
        n_to: Last n
        workers: Processes to spread the n values over (1 runs in order)
        stated: Closed-form bound to print next to the empirical cutoff
            (looked up from the profile when omitted)
        progress: Print one stderr line per finished n

    Returns:
        ScanReport with one row per n

    Raises:
        ParameterRangeError: empty range, n_from < 3 or workers < 1
    """
    # Validate the range before opening a span
    if n_from > n_to:
        raise ParameterRangeError(f"empty n range [{n_from},{n_to}]")
    if n_from < 3:
        raise ParameterRangeError(f"scans start at n >= 3, got {n_from}")
    if workers < 1:
        raise ParameterRangeError(f"workers must be at least 1, got {workers}")

    stated = stated or stated_bound_for(template)
    with tracer.start_as_current_span("scan_bound") as span:
        span.set_attribute("profile", template.profile())
        span.set_attribute("max_mult", template.max_mult)
        span.set_attribute("n_from", n_from)
        span.set_attribute("n_to", n_to)
        span.set_attribute("workers", workers)

        # Step 1: One counting query per n
        queries = [query_for(template, n) for n in range(n_from, n_to + 1)]

        # Step 2: Run them in order, or over the process pool
        if workers == 1:
            rows = []
            for q in queries:
                row = _scan_one(q)
                rows.append(row)
                if progress:
                    print(f"  ✅ n={row.n}: {row.feasible} feasible ({row.nodes} nodes)", file=sys.stderr)
        else:
            rows = asyncio.run(_scan_parallel(queries, workers))
            if progress:
                print(f"  ✅ {len(rows)} values of n scanned on {workers} workers", file=sys.stderr)

        # Step 3: Assemble the report ordered by n
        report = ScanReport(
            profile=template.profile(),
            max_mult=template.max_mult,
            n_from=n_from,
            n_to=n_to,
            rows=sorted(rows, key=lambda row: row.n),
            stated_bound=stated.bound if stated else None,
        )
        # Record the cutoff and warn when it passes the stated bound
        largest = report.largest_feasible()
        span.set_attribute("largest_feasible", -1 if largest is None else largest)
        if progress and not report.is_within_stated_bound():
            print(f"  ⚠️ feasible vectors beyond the stated bound: {report.summary()}", file=sys.stderr)
        return report


def epsilon_cross_check(eps, window: int = 2, workers: int = 1, progress: bool = True) -> ScanReport:
    """
    Scan the window of n just above epsilon_bound(eps).

    The profile is simplicial, splitting, m(A) <= 6 with t2 <= 24/(16+eps) t3
    and the two-sided double and triple point estimates; every row is
    expected to be empty.
    """
    bound = epsilon_bound(eps)
    template = FeasibilityQuery(
        n=bound.bound + 1,
        max_mult=6,
        require_simplicial=True,
        require_splits=True,
        require_four_t2_le_f2=True,
        extra=["sechser-13", "sechser-14"],
        t2_t3_ratio=epsilon_ratio(to_fraction(eps, name="eps")),
    )
    return scan_bound(template, bound.bound + 1, bound.bound + window, workers=workers, stated=bound, progress=progress)


def dirac_probe_query(n: int, t2_lower: Optional[int], t2_upper: int) -> FeasibilityQuery:
    """Real-rooted profile with the multiplicity cap and a window on t2."""
    return FeasibilityQuery(
        n=n,
        max_mult=n - 1,
        require_splits=True,
        extra=["mult-half"],
        count_bounds={2: (t2_lower, t2_upper)},
    )


def expected_dirac_equality(n: int) -> List[TVector]:
    """Known t-vectors with exactly floor(n/2) double points."""
    if n % 2 == 0 and n >= 6:
        return [r1_vector(n // 2)]
    if n == 7:
        return [KELLY_MOSER_VECTOR]
    return []


def dirac_motzkin_probe(n: int) -> DiracProbe:
    """
    Enumerate real-rooted t-vectors on n lines with t2 < floor(n/2) and with
    t2 = floor(n/2).

    Args:
        n: Number of lines, at least 3

    Returns:
        DiracProbe; consistent when the first set is empty and the second is
        exactly the R(1) vector (even n >= 6) or Kelly-Moser (n = 7)

    Raises:
        ParameterRangeError: n < 3
    """
    if n < 3:
        raise ParameterRangeError(f"dirac_motzkin_probe needs n >= 3, got {n}")
    half = n // 2
    with tracer.start_as_current_span("dirac_motzkin_probe") as span:
        span.set_attribute("n", n)
        # Vectors below the bound, then the ones meeting it
        below = enumerate_feasible(dirac_probe_query(n, None, half - 1)).vectors
        at = enumerate_feasible(dirac_probe_query(n, half, half)).vectors
        probe = DiracProbe(n=n, below=below, at=at, expected=expected_dirac_equality(n))
        span.set_attribute("consistent", probe.is_consistent())
        return probe


def ratio_envelope(n: int) -> Tuple[Fraction, Fraction]:
    """(lower, upper) bounds on t6 / n^2."""
    square = n * n
    return Fraction(square - 46 * n + 225, 48 * square), Fraction(square + 2 * n - 47, 48 * square)


def conjecture_ratio_check(vectors: Iterable[TVector]) -> RatioReport:
    """
    t6/n^2 for every vector against (n^2-46n+225)/(48n^2) and (n^2+2n-47)/(48n^2).

    Args:
        vectors: Feasible t-vectors, typically from sextuple_vectors

    Returns:
        RatioReport; rows outside the envelope are violations
    """
    rows = []
    for t in vectors:
        lower, upper = ratio_envelope(t.n)
        t6 = t.t(6)
        ratio = Fraction(t6, t.n * t.n)
        rows.append(RatioRow(n=t.n, t=t, t6=t6, ratio=ratio, lower=lower, upper=upper, within=lower <= ratio <= upper))
    return RatioReport(rows=rows)


def sextuple_query(n: int) -> FeasibilityQuery:
    return FeasibilityQuery(
        n=n,
        max_mult=min(6, n - 1),
        require_simplicial=True,
        require_splits=True,
        require_four_t2_le_f2=True,
    )


def sextuple_vectors(n_from: int, n_to: int) -> Iterator[TVector]:
    """Feasible simplicial, splitting t-vectors with m(A) <= 6, n by n."""
    for n in range(max(n_from, 3), n_to + 1):
        yield from enumerate_feasible(sextuple_query(n)).vectors
