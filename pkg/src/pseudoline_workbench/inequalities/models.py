"""
Data models for the constraint catalogue.

A constraint is a named statement about (n, t). Evaluating it yields one or
more parts (a composite statement such as a two-sided bound has two), each
with an exact slack oriented so that a satisfied inequality has slack >= 0.
Equality parts are satisfied exactly when their slack (lhs - rhs) is 0.
"""

from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_serializer

from pseudoline_workbench.arrangement.models import TVector
from pseudoline_workbench.common.exact import Rational, format_fraction
from pseudoline_workbench.common.models import ExactModel


class ApplicabilityClass(str, Enum):
    """Which arrangements a constraint is stated for."""
    ALL = "all"
    SIMPLICIAL_NONTRIVIAL = "simplicial-nontrivial"
    SPLITS = "splits-over-R"
    SIMPLICIAL_AND_SPLITS = "simplicial-and-splits"
    EXTERNAL = "external-assumed"
    STRETCHABLE = "stretchable-only"


class ConstraintKind(str, Enum):
    EQUALITY = "equality"
    INEQUALITY = "inequality"
    MODULAR = "modular"


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not-applicable"


class ApplicabilityFlags(BaseModel):
    """
    Facts supplied by the caller. None means "derive from the t-vector":
    simplicial is equality in Melchior's inequality, splits is
    (n+1)^2 >= 4 f2. Triviality (a vertex on n-1 or n lines) is always derived.
    """
    simplicial: Optional[bool] = None
    splits: Optional[bool] = None
    assume_external: bool = False
    stretchable: bool = False


class ResolvedFlags(BaseModel):
    """Applicability facts after derivation; what a check actually consults."""
    model_config = ConfigDict(frozen=True)

    simplicial: bool
    splits: bool
    trivial: bool
    external: bool
    stretchable: bool

    def satisfies(self, cls: ApplicabilityClass) -> bool:
        if cls is ApplicabilityClass.ALL:
            return True
        if cls is ApplicabilityClass.SIMPLICIAL_NONTRIVIAL:
            return self.simplicial and not self.trivial
        if cls is ApplicabilityClass.SPLITS:
            return self.splits
        if cls is ApplicabilityClass.SIMPLICIAL_AND_SPLITS:
            return self.simplicial and self.splits and not self.trivial
        if cls is ApplicabilityClass.EXTERNAL:
            return self.external
        return self.stretchable


class LinearForm(ExactModel):
    """
    constant + sum(coefficients[w] * t_w) >= 0, or > 0 when strict.

    Keys are vertex weights (2 for t2, 3 for t3, ...).
    """
    coefficients: Dict[int, Fraction] = Field(default_factory=dict)
    constant: Fraction = Fraction(0)
    strict: bool = False

    @classmethod
    def of(cls, constant: Rational, coefficients: Dict[int, Rational], strict: bool = False) -> "LinearForm":
        return cls(
            coefficients={w: Fraction(a) for w, a in coefficients.items() if a != 0},
            constant=Fraction(constant),
            strict=strict,
        )

    def value(self, t: TVector) -> Fraction:
        return self.constant + sum((a * t.t(w) for w, a in self.coefficients.items()), Fraction(0))

    def is_satisfied(self, t: TVector) -> bool:
        v = self.value(t)
        return v > 0 if self.strict else v >= 0

    def negated_equality(self) -> "LinearForm":
        """The reverse inequality, used to state an equality as two forms."""
        return LinearForm(
            coefficients={w: -a for w, a in self.coefficients.items()},
            constant=-self.constant,
            strict=self.strict,
        )


class PartSlack(ExactModel):
    """One evaluated comparison inside a constraint."""
    label: str
    relation: str
    lhs: Fraction
    rhs: Fraction
    slack: Fraction
    passed: bool

    def describe(self) -> str:
        return f"{self.label}: {format_fraction(self.lhs)} {self.relation} {format_fraction(self.rhs)}"


Evaluator = Callable[[int, TVector], List[PartSlack]]
Guard = Callable[[int, int], Optional[str]]
FormBuilder = Callable[[int, int], List[LinearForm]]


class Constraint(BaseModel):
    """
    A catalogue entry.

    citation locates the statement in the literature and label names it in
    words. evaluator computes the parts for (n, t). guard(n, m) returns a reason
    when the statement does not apply to multiplicity m on n lines.
    forms(n, m), when present, gives linear forms in the t-vector that are
    implied by the constraint for every applicable vector of multiplicity
    exactly m; forms_exact says they are also sufficient.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    id: str
    citation: str
    label: str
    statement: str
    applicability: ApplicabilityClass = ApplicabilityClass.ALL
    requires: Tuple[ApplicabilityClass, ...] = ()
    kind: ConstraintKind = ConstraintKind.INEQUALITY
    evaluator: Evaluator = Field(exclude=True)
    guard: Optional[Guard] = Field(default=None, exclude=True)
    forms: Optional[FormBuilder] = Field(default=None, exclude=True)
    forms_exact: bool = False

    def classes(self) -> Tuple[ApplicabilityClass, ...]:
        """Every class whose premise must hold."""
        return (self.applicability,) + self.requires

    def guard_reason(self, n: int, m: int) -> Optional[str]:
        return self.guard(n, m) if self.guard is not None else None

    def linear_forms(self, n: int, m: int) -> Optional[List[LinearForm]]:
        """Linear forms for multiplicity m, or None when the statement is not linear."""
        if self.forms is None:
            return None
        return self.forms(n, m)

    def excludes_trivial(self) -> bool:
        return any(
            cls in (ApplicabilityClass.SIMPLICIAL_NONTRIVIAL, ApplicabilityClass.SIMPLICIAL_AND_SPLITS)
            for cls in self.classes()
        )


class Certificate(ExactModel):
    """Exact outcome of one constraint on one (n, t)."""
    constraint: str
    citation: str
    label: str
    n: int
    t: Tuple[int, ...]
    verdict: Verdict
    slack: Optional[Fraction] = None
    binding: Optional[str] = None
    parts: List[PartSlack] = Field(default_factory=list)
    reason: Optional[str] = None

    @field_serializer("slack")
    def _serialize_slack(self, slack: Optional[Fraction]) -> Optional[str]:
        return None if slack is None else format_fraction(slack)

    def is_passing(self) -> bool:
        return self.verdict is Verdict.PASS

    def is_failure(self) -> bool:
        return self.verdict is Verdict.FAIL

    def is_applicable(self) -> bool:
        return self.verdict is not Verdict.NOT_APPLICABLE

    def slack_text(self) -> str:
        return "" if self.slack is None else format_fraction(self.slack)
