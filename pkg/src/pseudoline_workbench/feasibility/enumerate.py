"""
Exhaustive enumeration of t-vectors satisfying a constraint profile.

The search runs once for every exact multiplicity m = 2..max_mult. Inside a
run it branches depth first over t_m, t_{m-1}, ..., t4 and finishes with an
arithmetic progression of t2 values; t3 follows from the pair count
identity, so t2 must be congruent to the remaining pair budget mod 3.

A catalogue constraint prunes when the profile guarantees its premise for
every vector of the run (for example four-t2-le-f2 once simpliciality is
required). Its linear forms then enter the run's system; when the forms are
exact no per-vector check is needed and a leaf only counts its progression.
Any other constraint is checked per vector through the catalogue.
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Deque, Dict, List, Optional, Set, Tuple

from opentelemetry import trace

from pseudoline_workbench.arrangement.models import TVector
from pseudoline_workbench.common.errors import ParameterRangeError
from pseudoline_workbench.common.exact import pairs
from pseudoline_workbench.feasibility.linear import Infeasible, IntForm, projections, substitute
from pseudoline_workbench.feasibility.models import EnumerationStats, FeasibilityQuery, FeasibleSet
from pseudoline_workbench.inequalities.catalogue import get_constraint
from pseudoline_workbench.inequalities.models import (
    ApplicabilityClass,
    ApplicabilityFlags,
    Constraint,
    LinearForm,
    Verdict,
)
from pseudoline_workbench.inequalities.suites import SUITES, check, resolve_flags

tracer = trace.get_tracer("pseudoline_workbench.feasibility")

# Largest Fourier-Motzkin system kept per projection level.
PROJECTION_CAP = 400
# Runs with more branching variables only eliminate t2.
FULL_PROJECTION_DEPTH = 6


def active_constraint_ids(q: FeasibilityQuery) -> List[str]:
    """
    Catalogue ids enforced by a query, in a stable order.

    Raises:
        UnknownConstraintError: an extra id is not in the catalogue
    """
    ids = list(SUITES["universal"])
    if q.require_simplicial:
        ids.append("melchior-equality")
    if q.require_splits:
        ids.append("f2-le-quarter")
    if q.require_four_t2_le_f2:
        ids.append("four-t2-le-f2")
    if q.include_external:
        ids.extend(["ext-shnu", "ext-shnu2"])
        if q.assume_stretchable:
            ids.append("ext-langer")
    ids.extend(q.extra)

    unique = []
    for cid in ids:
        get_constraint(cid)
        if cid not in unique:
            unique.append(cid)
    return unique


def query_flags(q: FeasibilityQuery) -> ApplicabilityFlags:
    """
    Caller facts for per-vector checks; simpliciality and splitting are derived.

    require_splits and require_simplicial are not passed as flags: they are
    checked on the derived facts, so a vector lacking them is rejected.
    """
    return ApplicabilityFlags(assume_external=q.include_external, stretchable=q.assume_stretchable)


def _premised_classes(q: FeasibilityQuery) -> Set[ApplicabilityClass]:
    classes = {ApplicabilityClass.ALL}
    if q.require_simplicial:
        classes.add(ApplicabilityClass.SIMPLICIAL_NONTRIVIAL)
    if q.require_splits:
        classes.add(ApplicabilityClass.SPLITS)
    if q.require_simplicial and q.require_splits:
        classes.add(ApplicabilityClass.SIMPLICIAL_AND_SPLITS)
    if q.include_external:
        classes.add(ApplicabilityClass.EXTERNAL)
    if q.assume_stretchable:
        classes.add(ApplicabilityClass.STRETCHABLE)
    return classes


def _sort_key(t: TVector, top: int) -> Tuple[int, ...]:
    return tuple(t.t(weight) for weight in range(top, 1, -1))


@dataclass
class _Bound:
    """A form seen from one depth: a * x_d + base + sum(fixed terms) >= 0."""
    a: int
    base: int
    fixed: List[Tuple[int, int]]


@dataclass
class _Run:
    """One exact multiplicity m."""
    q: FeasibilityQuery
    m: int
    constraints: List[Constraint]
    premised: Set[ApplicabilityClass]
    stats: EnumerationStats
    found: List[TVector] = field(default_factory=list)
    count: int = 0

    def __post_init__(self) -> None:
        self.n = self.q.n
        self.total = pairs(self.n)
        self.branch = list(range(self.m, 3, -1))
        self.flags = query_flags(self.q)
        self.leaf_checks: List[str] = []
        self.check_bounds = not self.q.prune

    # setup

    def _lower(self, weight: int) -> int:
        lower = 1 if weight == self.m and weight != 3 else 0
        bound = self.q.count_bounds.get(weight, (None, None))[0]
        if self.q.prune and bound is not None:
            lower = max(lower, bound)
        return lower

    def _base_forms(self) -> List[LinearForm]:
        forms = [
            LinearForm.of(0, {2: 1}),
            LinearForm.of(-1 if self.m == 3 else 0, {3: 1}),
        ]
        for weight in self.branch:
            forms.append(LinearForm.of(-self._lower(weight) if weight == self.m else 0, {weight: 1}))
        return forms

    def _profile_forms(self) -> Optional[List[LinearForm]]:
        """Forms of the bounds and of premised constraints; None when the run is empty."""
        forms: List[LinearForm] = []
        for weight, (lower, upper) in self.q.count_bounds.items():
            if weight > self.m:
                if lower is not None and lower > 0:
                    return None
                continue
            if lower is not None:
                forms.append(LinearForm.of(-lower, {weight: 1}))
            if upper is not None:
                forms.append(LinearForm.of(upper, {weight: -1}))
        if self.q.t2_t3_ratio is not None:
            forms.append(LinearForm.of(0, {3: self.q.t2_t3_ratio, 2: -1}))

        for constraint in self.constraints:
            if not all(cls in self.premised for cls in constraint.classes()):
                self.leaf_checks.append(constraint.id)
                continue
            if constraint.guard_reason(self.n, self.m):
                continue
            linear = constraint.linear_forms(self.n, self.m)
            if linear is None or not constraint.forms_exact:
                self.leaf_checks.append(constraint.id)
            forms.extend(linear or [])
        return forms

    def prepare(self) -> bool:
        """Build the integer system; False when the run is infeasible outright."""
        raw = self._base_forms()
        if self.q.prune:
            profile = self._profile_forms()
            if profile is None:
                return False
            raw.extend(profile)
        else:
            self.leaf_checks = [constraint.id for constraint in self.constraints]

        try:
            system = [form for form in (substitute(f, self.n, self.m) for f in raw) if form is not None]
            order = [2] + self.branch[::-1][:-1] if self.q.prune else []
            if len(self.branch) > FULL_PROJECTION_DEPTH:
                order = order[:1]
            levels = projections(system, order, PROJECTION_CAP)
        except Infeasible:
            return False

        self.leaf_forms = [(form.coefficients.get(2, 0), form) for form in levels[0]]
        pool: Dict[Tuple[Tuple[int, int], ...], IntForm] = {}
        for level in levels:
            for form in level:
                known = pool.get(form.key)
                if known is None or form.constant < known.constant:
                    pool[form.key] = form
        self.depth_bounds = [self._bounds_at(d, list(pool.values())) for d in range(len(self.branch))]
        return True

    def _bounds_at(self, depth: int, pool: List[IntForm]) -> List[_Bound]:
        variable = self.branch[depth]
        fixed = set(self.branch[:depth])
        bounds = []
        for form in pool:
            a = form.coefficients.get(variable, 0)
            if a == 0:
                continue
            base = form.constant
            terms = []
            usable = True
            for v, coefficient in form.coefficients.items():
                if v == variable:
                    continue
                if v in fixed:
                    terms.append((v, coefficient))
                elif coefficient > 0:
                    usable = False
                    break
                else:
                    base += coefficient * self._lower(v)
            if usable:
                bounds.append(_Bound(a=a, base=base, fixed=terms))
        return bounds

    # search

    def _interval(self, bounds: List[_Bound], values: Dict[int, int], lower: int) -> Tuple[int, Optional[int]]:
        upper: Optional[int] = None
        for bound in bounds:
            rest = bound.base + sum(a * values[v] for v, a in bound.fixed)
            if bound.a > 0:
                lower = max(lower, -(rest // bound.a))
            else:
                cap = rest // -bound.a
                upper = cap if upper is None else min(upper, cap)
        return lower, upper

    def _accepts(self, t: TVector) -> bool:
        if self.check_bounds:
            for weight, (lower, upper) in self.q.count_bounds.items():
                if (lower is not None and t.t(weight) < lower) or (upper is not None and t.t(weight) > upper):
                    return False
            if self.q.t2_t3_ratio is not None and t.t(2) > self.q.t2_t3_ratio * t.t(3):
                return False
        facts = resolve_flags(t, self.flags)
        # requested properties are hard predicates, not applicability premises
        if self.q.require_splits and not facts.splits:
            return False
        if self.q.require_simplicial and not facts.simplicial:
            return False
        for cid in self.leaf_checks:
            if check(cid, self.n, t, resolved=facts).verdict is Verdict.FAIL:
                return False
        return True

    def _leaf(self, values: Dict[int, int]) -> None:
        lower, upper = self._lower(2), None
        for a, form in self.leaf_forms:
            rest = form.constant + sum(c * values[v] for v, c in form.coefficients.items() if v != 2)
            if a == 0:
                if rest < 0:
                    self.stats.pruned += 1
                    return
            elif a > 0:
                lower = max(lower, -(rest // a))
            else:
                cap = rest // -a
                upper = cap if upper is None else min(upper, cap)
        if upper is None:
            raise ParameterRangeError(f"t2 is unbounded at n={self.n}, m={self.m}")

        budget = self.total - sum(pairs(weight) * value for weight, value in values.items())
        first = lower + (budget - lower) % 3
        if first > upper:
            self.stats.pruned += 1
            return

        exact = self.q.prune and not self.leaf_checks
        if exact and self.q.count_only:
            self.count += (upper - first) // 3 + 1
            return
        for t2 in range(first, upper + 1, 3):
            counts = dict(values)
            counts[2] = t2
            counts[3] = (budget - t2) // 3
            t = TVector(n=self.n, counts=counts)
            if not exact:
                self.stats.leaf_checks += 1
                if not self._accepts(t):
                    continue
            self.count += 1
            if not self.q.count_only:
                self.found.append(t)

    def search(self) -> None:
        self.stats.runs += 1
        stack: Deque[Dict[int, int]] = deque([{}])
        depth_count = len(self.branch)
        while stack:
            values = stack.pop()
            self.stats.nodes += 1
            depth = len(values)
            if depth == depth_count:
                self._leaf(values)
                continue
            variable = self.branch[depth]
            lower, upper = self._interval(self.depth_bounds[depth], values, self._lower(variable))
            if upper is None:
                raise ParameterRangeError(f"t{variable} is unbounded at n={self.n}, m={self.m}")
            if lower > upper:
                self.stats.pruned += 1
                continue
            for value in range(upper, lower - 1, -1):
                child = dict(values)
                child[variable] = value
                stack.append(child)

    def generic(self) -> None:
        """m = 2: only the vector with C(n,2) double points."""
        self.stats.runs += 1
        self.stats.nodes += 1
        self.stats.leaf_checks += 1
        t = TVector(n=self.n, counts={2: self.total})
        self.leaf_checks = [constraint.id for constraint in self.constraints]
        self.check_bounds = True
        if self._accepts(t):
            self.count += 1
            if not self.q.count_only:
                self.found.append(t)


def enumerate_feasible(q: FeasibilityQuery) -> FeasibleSet:
    """
    Every t-vector on q.n lines with multiplicity <= q.max_mult satisfying q.

    Args:
        q: The query

    Returns:
        FeasibleSet with vectors in lexicographic (t_max, ..., t2) order
        (empty list but a count when q.count_only)

    Raises:
        ParameterRangeError: max_mult > n - 1
        UnknownConstraintError: an extra id is not in the catalogue

    Example:
        >>> q = FeasibilityQuery(n=6, max_mult=3, require_simplicial=True, require_splits=True)
        >>> [str(t) for t in enumerate_feasible(q).vectors]
        ['(3,4)']
    """
    if q.max_mult > q.n - 1:
        raise ParameterRangeError(f"max_mult={q.max_mult} exceeds n-1={q.n - 1}")

    with tracer.start_as_current_span("enumerate_feasible") as span:
        span.set_attribute("n", q.n)
        span.set_attribute("max_mult", q.max_mult)
        span.set_attribute("profile", q.profile())

        constraints = [get_constraint(cid) for cid in active_constraint_ids(q)]
        excludes_trivial = any(constraint.excludes_trivial() for constraint in constraints)
        premised = _premised_classes(q)
        stats = EnumerationStats()
        vectors: List[TVector] = []
        count = 0

        for m in range(2, q.max_mult + 1):
            if excludes_trivial and m >= q.n - 1:
                continue
            run = _Run(q=q, m=m, constraints=constraints, premised=premised, stats=stats)
            if m == 2:
                run.generic()
            elif run.prepare():
                run.search()
            else:
                stats.runs += 1
                stats.pruned += 1
            vectors.extend(run.found)
            count += run.count

        vectors.sort(key=lambda t: _sort_key(t, q.max_mult))
        span.set_attribute("feasible", count)
        span.set_attribute("nodes", stats.nodes)
        span.set_attribute("pruned", stats.pruned)
        return FeasibleSet(query=q, vectors=vectors, count=count, stats=stats)
