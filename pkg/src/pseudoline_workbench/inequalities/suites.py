"""
Checking constraints and suites.

check() evaluates one catalogue entry on (n, t) after resolving the
applicability facts; run_suite() evaluates a named group. A suite premises
its own class: running "real-rooted" treats the arrangement as splitting over
R unless the caller says otherwise, so a t-vector that does not split fails
f2-le-quarter instead of being skipped.
"""

from fractions import Fraction
from typing import Dict, List, Optional

from opentelemetry import trace

from pseudoline_workbench.arrangement.incidence import is_trivial, melchior_excess
from pseudoline_workbench.arrangement.models import FVector, TVector
from pseudoline_workbench.common.errors import UnknownSuiteError, WorkbenchInputError
from pseudoline_workbench.common.exact import format_fraction
from pseudoline_workbench.common.record_types import CertificateRecord
from pseudoline_workbench.inequalities.catalogue import compare, get_constraint
from pseudoline_workbench.inequalities.expressions import f0, f1, f2
from pseudoline_workbench.inequalities.models import (
    ApplicabilityFlags,
    Certificate,
    Constraint,
    PartSlack,
    ResolvedFlags,
    Verdict,
)

tracer = trace.get_tracer("pseudoline_workbench.inequalities")

SUITES: Dict[str, List[str]] = {
    "universal": ["rel-1", "rel-2", "rel-3", "rel-4", "melchior"],
    "simplicial": [
        "four-t2-le-f2",
        "simplicial-melchior",
        "t2-upper-seventh",
        "mult-half",
        "t2t3-chain",
        "t2t3-equality-mult6",
        "minmax",
        "maxquad-a",
        "maxquad-b",
    ],
    "real-rooted": ["f2-le-quarter", "t2-quad-lower", "dm-lower-bound", "notsimp-10", "notsimp-11", "notsimp-12"],
    "simplicial-real-rooted": [
        "t3-lower-simplicial",
        "sechser-13",
        "sechser-14",
        "sechser-15",
        "sechser-16",
        "sechser-17",
    ],
    "external": ["ext-shnu", "ext-shnu2", "ext-langer"],
}

# Flags a suite assumes when the caller leaves them open.
SUITE_PREMISES: Dict[str, Dict[str, bool]] = {
    "universal": {},
    "simplicial": {"simplicial": True},
    "real-rooted": {"splits": True},
    "simplicial-real-rooted": {"simplicial": True, "splits": True},
    "external": {"assume_external": True},
}

_MEASURED = {"rel-2": ("f2", f2), "rel-3": ("f0", f0), "rel-4": ("f1", f1)}


def suite_ids() -> List[str]:
    return list(SUITES)


def suite_constraints(suite_id: str) -> List[str]:
    """
    Raises:
        UnknownSuiteError: the suite is not known
    """
    try:
        return list(SUITES[suite_id])
    except KeyError:
        raise UnknownSuiteError(f"unknown suite {suite_id!r}; known: {', '.join(SUITES)}") from None


def resolve_flags(t: TVector, flags: Optional[ApplicabilityFlags] = None) -> ResolvedFlags:
    """Fill open flags from the t-vector itself."""
    flags = flags or ApplicabilityFlags()
    simplicial = flags.simplicial if flags.simplicial is not None else melchior_excess(t) == 0
    if flags.splits is not None:
        splits = flags.splits
    else:
        splits = (t.n + 1) ** 2 >= 4 * f2(max(t.multiplicity, 2)).at(t)
    return ResolvedFlags(
        simplicial=simplicial,
        splits=splits,
        trivial=is_trivial(t),
        external=flags.assume_external,
        stretchable=flags.stretchable,
    )


def premised_flags(suite_id: str, flags: Optional[ApplicabilityFlags] = None) -> ApplicabilityFlags:
    """The caller's flags with the suite's premises filled in where left open."""
    flags = flags or ApplicabilityFlags()
    premises = SUITE_PREMISES.get(suite_id, {})
    updates = {}
    for name, value in premises.items():
        if name == "assume_external":
            updates[name] = flags.assume_external or value
        elif getattr(flags, name) is None:
            updates[name] = value
    return flags.model_copy(update=updates)


def _binding_part(parts: List[PartSlack]) -> PartSlack:
    for part in parts:
        if not part.passed:
            return part
    ordered = [part for part in parts if part.relation != "!="] or parts
    return min(ordered, key=lambda part: part.slack)


def _not_applicable(constraint: Constraint, n: int, t: TVector, reason: str) -> Certificate:
    return Certificate(
        constraint=constraint.id,
        citation=constraint.citation,
        label=constraint.label,
        n=n,
        t=t.as_tuple(),
        verdict=Verdict.NOT_APPLICABLE,
        reason=reason,
    )


def check(
    constraint_id: str,
    n: int,
    t: TVector,
    flags: Optional[ApplicabilityFlags] = None,
    measured: Optional[FVector] = None,
    resolved: Optional[ResolvedFlags] = None,
) -> Certificate:
    """
    Evaluate one constraint exactly.

    Args:
        constraint_id: Catalogue id, e.g. "melchior"
        n: Line count
        t: The t-vector (its n must equal n)
        flags: Applicability facts; open ones are derived from t
        measured: f-vector counted on an actual cell decomposition; the
            identities rel-2..rel-4 compare against it when given
        resolved: Pre-resolved facts (skips derivation)

    Returns:
        Certificate with verdict, exact slack and the evaluated parts

    Example:
        >>> check("melchior", 13, TVector.from_sequence(13, [12, 4, 9])).slack
        Fraction(0, 1)
    """
    constraint = get_constraint(constraint_id)
    if t.n != n:
        raise WorkbenchInputError(f"t-vector is for n={t.n}, checked against n={n}")
    facts = resolved or resolve_flags(t, flags)

    for cls in constraint.classes():
        if not facts.satisfies(cls):
            return _not_applicable(constraint, n, t, f"requires {cls.value}")
    reason = constraint.guard_reason(n, max(t.multiplicity, 2))
    if reason:
        return _not_applicable(constraint, n, t, reason)

    if measured is not None and constraint.id in _MEASURED:
        name, expression = _MEASURED[constraint.id]
        value = expression(max(t.multiplicity, 2)).at(t)
        parts = [compare(f"{name} from t = measured {name}", value, "=", Fraction(getattr(measured, name)))]
    else:
        parts = constraint.evaluator(n, t)

    binding = _binding_part(parts)
    verdict = Verdict.PASS if all(part.passed for part in parts) else Verdict.FAIL
    return Certificate(
        constraint=constraint.id,
        citation=constraint.citation,
        label=constraint.label,
        n=n,
        t=t.as_tuple(),
        verdict=verdict,
        slack=binding.slack,
        binding=binding.describe(),
        parts=parts,
    )


def check_many(
    constraint_ids: List[str],
    n: int,
    t: TVector,
    flags: Optional[ApplicabilityFlags] = None,
    measured: Optional[FVector] = None,
) -> List[Certificate]:
    """Evaluate several constraints against the same resolved facts."""
    facts = resolve_flags(t, flags)
    return [check(cid, n, t, measured=measured, resolved=facts) for cid in constraint_ids]


def run_suite(
    suite_id: str,
    n: int,
    t: TVector,
    flags: Optional[ApplicabilityFlags] = None,
    measured: Optional[FVector] = None,
) -> List[Certificate]:
    """
    Evaluate every constraint of a suite.

    Args:
        suite_id: One of "universal", "simplicial", "real-rooted",
            "simplicial-real-rooted", "external"
        n: Line count
        t: The t-vector
        flags: Caller facts; the suite's premises fill the open ones
        measured: Optional counted f-vector for the identities

    Returns:
        Certificates in suite order
    """
    ids = suite_constraints(suite_id)
    with tracer.start_as_current_span("run_suite") as span:
        span.set_attribute("suite", suite_id)
        span.set_attribute("n", n)
        span.set_attribute("t", str(t))
        certificates = check_many(ids, n, t, premised_flags(suite_id, flags), measured)
        span.set_attribute("failed", sum(1 for c in certificates if c.is_failure()))
        return certificates


def certificate_record(certificate: Certificate) -> CertificateRecord:
    """Structured record with the slack as exact decimal strings."""
    slack = certificate.slack
    return CertificateRecord(
        kind="certificate",
        constraint=certificate.constraint,
        citation=certificate.citation,
        label=certificate.label,
        n=certificate.n,
        t=list(certificate.t),
        verdict=certificate.verdict.value,
        slack=None if slack is None else format_fraction(slack),
        slack_numerator=None if slack is None else str(slack.numerator),
        slack_denominator=None if slack is None else str(slack.denominator),
        reason=certificate.reason,
    )
