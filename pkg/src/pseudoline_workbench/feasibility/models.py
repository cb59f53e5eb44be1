"""
Data models for t-vector feasibility enumeration and scans.
"""

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator

from pseudoline_workbench.arrangement.models import TVector
from pseudoline_workbench.common.exact import format_fraction, to_fraction
from pseudoline_workbench.common.models import ExactModel

CountBound = Tuple[Optional[int], Optional[int]]


class FeasibilityQuery(ExactModel):
    """
    A constraint profile for one line count.

    Every profile enforces the universal constraints (the identities and
    Melchior's inequality). The switches add: melchior-equality
    (require_simplicial), f2-le-quarter (require_splits), four-t2-le-f2
    (require_four_t2_le_f2), ext-shnu and ext-shnu2 (include_external, plus
    ext-langer with assume_stretchable). extra names further catalogue ids.

    count_bounds maps a weight to inclusive (lower, upper) bounds on t_weight;
    t2_t3_ratio enforces t2 <= ratio * t3. prune=False switches to the naive
    search that checks every vector of the pair budget through the catalogue.
    count_only skips materialising vectors when no per-vector check is needed.
    """
    n: int = Field(ge=3)
    max_mult: int = Field(ge=2)
    require_simplicial: bool = False
    require_splits: bool = False
    require_four_t2_le_f2: bool = False
    include_external: bool = False
    assume_stretchable: bool = False
    extra: List[str] = Field(default_factory=list)
    count_bounds: Dict[int, CountBound] = Field(default_factory=dict)
    t2_t3_ratio: Optional[Fraction] = None
    prune: bool = True
    count_only: bool = False

    @field_validator("t2_t3_ratio", mode="before")
    @classmethod
    def _exact_ratio(cls, value):
        return None if value is None else to_fraction(value, name="t2_t3_ratio")

    @field_validator("count_bounds")
    @classmethod
    def _ordered_bounds(cls, bounds: Dict[int, CountBound]) -> Dict[int, CountBound]:
        for weight, (lower, upper) in bounds.items():
            if weight < 2:
                raise ValueError(f"count bound for t_{weight}: weights start at 2")
            if lower is not None and upper is not None and lower > upper:
                raise ValueError(f"count bound for t_{weight}: lower {lower} exceeds upper {upper}")
        return bounds

    @field_serializer("t2_t3_ratio")
    def _serialize_ratio(self, ratio: Optional[Fraction]) -> Optional[str]:
        return None if ratio is None else format_fraction(ratio)

    def profile(self) -> str:
        """Short text form of the switches, e.g. "simplicial+splits+4t2<=f2"."""
        parts = []
        if self.require_simplicial:
            parts.append("simplicial")
        if self.require_splits:
            parts.append("splits")
        if self.require_four_t2_le_f2:
            parts.append("4t2<=f2")
        if self.include_external:
            parts.append("external")
        if self.assume_stretchable:
            parts.append("stretchable")
        parts.extend(self.extra)
        if self.t2_t3_ratio is not None:
            parts.append(f"t2<={format_fraction(self.t2_t3_ratio)}t3")
        for weight, (lower, upper) in sorted(self.count_bounds.items()):
            low = "" if lower is None else f"{lower}<="
            high = "" if upper is None else f"<={upper}"
            parts.append(f"{low}t{weight}{high}")
        return "+".join(parts) or "universal"


class EnumerationStats(BaseModel):
    """Search effort: nodes visited, nodes cut by a bound, per-vector catalogue checks."""
    nodes: int = 0
    pruned: int = 0
    leaf_checks: int = 0
    runs: int = 0

    def absorb(self, other: "EnumerationStats") -> None:
        self.nodes += other.nodes
        self.pruned += other.pruned
        self.leaf_checks += other.leaf_checks
        self.runs += other.runs


class FeasibleSet(BaseModel):
    """Every t-vector satisfying a query, in (t_max, ..., t2) lexicographic order."""
    model_config = ConfigDict(frozen=True)

    query: FeasibilityQuery
    vectors: List[TVector] = Field(default_factory=list)
    count: int = 0
    stats: EnumerationStats = Field(default_factory=EnumerationStats)

    def is_empty(self) -> bool:
        return self.count == 0


class ScanRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int
    feasible: int
    nodes: int
    pruned: int


class ScanReport(BaseModel):
    """Feasible-count profile of one constraint profile over a range of n."""
    model_config = ConfigDict(frozen=True)

    profile: str
    max_mult: int
    n_from: int
    n_to: int
    rows: List[ScanRow] = Field(default_factory=list)
    stated_bound: Optional[int] = None

    def feasible_ns(self) -> List[int]:
        return [row.n for row in self.rows if row.feasible > 0]

    def largest_feasible(self) -> Optional[int]:
        return max(self.feasible_ns(), default=None)

    def smallest_feasible(self) -> Optional[int]:
        return min(self.feasible_ns(), default=None)

    def is_within_stated_bound(self) -> bool:
        largest = self.largest_feasible()
        return self.stated_bound is None or largest is None or largest <= self.stated_bound

    def summary(self) -> str:
        largest = self.largest_feasible()
        found = "none" if largest is None else str(largest)
        line = f"largest feasible n in [{self.n_from},{self.n_to}]: {found}"
        if self.stated_bound is not None:
            line += f" (stated bound: n <= {self.stated_bound})"
        return line


class DiracProbe(BaseModel):
    """Real-rooted t-vectors with few double points on n lines."""
    model_config = ConfigDict(frozen=True)

    n: int
    below: List[TVector] = Field(default_factory=list)
    at: List[TVector] = Field(default_factory=list)
    expected: List[TVector] = Field(default_factory=list)

    def is_consistent(self) -> bool:
        """Nothing below floor(n/2), and the equality cases are exactly the known ones."""
        return not self.below and self.at == self.expected


class RatioRow(ExactModel):
    n: int
    t: TVector
    t6: int
    ratio: Fraction
    lower: Fraction
    upper: Fraction
    within: bool

    @field_serializer("ratio", "lower", "upper")
    def _serialize_fraction(self, value: Fraction) -> str:
        return format_fraction(value)


class RatioReport(BaseModel):
    """t6/n^2 of each vector against the envelope it must lie in."""
    model_config = ConfigDict(frozen=True)

    rows: List[RatioRow] = Field(default_factory=list)

    def violations(self) -> List[RatioRow]:
        return [row for row in self.rows if not row.within]

    def is_passing(self) -> bool:
        return not self.violations()


class StatedBound(ExactModel):
    """
    A closed-form bound n <= floor(root): root is the largest root of the
    quadratic a n^2 + b n + c that must be <= 0.
    """
    name: str
    statement: str
    coefficients: Tuple[Fraction, Fraction, Fraction]
    root: str
    bound: int
    note: Optional[str] = None

    @field_serializer("coefficients")
    def _serialize_coefficients(self, values: Tuple[Fraction, Fraction, Fraction]) -> List[str]:
        return [format_fraction(value) for value in values]
