"""
The constraint catalogue.

Each entry is a named statement over (n, t). Linear statements are written
once as comparisons of affine expressions (see expressions.py) and give both
the evaluator and the linear forms used for pruning. Statements with a max,
a min or a residue condition have hand-written evaluators.

The multiplicity m used inside a statement is m(A) of the vector being
checked; the enumerator asks for forms at a fixed m.
"""

from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from pseudoline_workbench.arrangement.models import TVector
from pseudoline_workbench.common.errors import UnknownConstraintError
from pseudoline_workbench.common.exact import pairs
from pseudoline_workbench.inequalities.expressions import Linear, f0, f1, f2, pair_sum, tw, weighted_sum
from pseudoline_workbench.inequalities.models import (
    ApplicabilityClass,
    Constraint,
    ConstraintKind,
    Guard,
    LinearForm,
    PartSlack,
)

Comparison = Tuple[str, Linear, str, Linear]
ComparisonBuilder = Callable[[int, int], List[Comparison]]

ALL = ApplicabilityClass.ALL
SIMPLICIAL = ApplicabilityClass.SIMPLICIAL_NONTRIVIAL
SPLITS = ApplicabilityClass.SPLITS
SIMPLICIAL_SPLITS = ApplicabilityClass.SIMPLICIAL_AND_SPLITS
EXTERNAL = ApplicabilityClass.EXTERNAL
STRETCHABLE = ApplicabilityClass.STRETCHABLE


def compare(label: str, lhs: Fraction, relation: str, rhs: Fraction) -> PartSlack:
    """Evaluate one comparison; slack is oriented so that >= 0 means satisfied."""
    if relation in ("<=", "<"):
        slack = rhs - lhs
    else:
        slack = lhs - rhs
    if relation == "=":
        passed = slack == 0
    elif relation in ("<", ">"):
        passed = slack > 0
    else:
        passed = slack >= 0
    return PartSlack(label=label, relation=relation, lhs=lhs, rhs=rhs, slack=slack, passed=passed)


def residue_part(label: str, value: int, modulus: int, forbidden: int) -> PartSlack:
    """value mod modulus must differ from forbidden; slack is the residue."""
    r = value % modulus
    return PartSlack(
        label=f"{label} mod {modulus}",
        relation="!=",
        lhs=Fraction(r),
        rhs=Fraction(forbidden),
        slack=Fraction(r),
        passed=r != forbidden,
    )


def comparison_forms(comparisons: List[Comparison]) -> List[LinearForm]:
    forms = []
    for _, lhs, relation, rhs in comparisons:
        if relation in ("<=", "<"):
            forms.append((rhs - lhs).nonnegative(strict=relation == "<"))
        elif relation in (">=", ">"):
            forms.append((lhs - rhs).nonnegative(strict=relation == ">"))
        else:
            forms.append((lhs - rhs).nonnegative())
            forms.append((rhs - lhs).nonnegative())
    return forms


def _evaluation_m(t: TVector) -> int:
    return max(t.multiplicity, 2)


def _linear_entry(
    id: str,
    name: str,
    statement: str,
    build: ComparisonBuilder,
    applicability: ApplicabilityClass = ALL,
    requires: Tuple[ApplicabilityClass, ...] = (),
    kind: ConstraintKind = ConstraintKind.INEQUALITY,
    guard: Optional[Guard] = None,
) -> Constraint:
    def evaluate(n: int, t: TVector) -> List[PartSlack]:
        return [compare(label, lhs.at(t), rel, rhs.at(t)) for label, lhs, rel, rhs in build(n, _evaluation_m(t))]

    return Constraint(
        id=id,
        citation=CITATIONS[id],
        label=name,
        statement=statement,
        applicability=applicability,
        requires=requires,
        kind=kind,
        evaluator=evaluate,
        guard=guard,
        forms=lambda n, m: comparison_forms(build(n, m)),
        forms_exact=True,
    )


def _const(value) -> Linear:
    return Linear(Fraction(value))


# guards


def _needs_n_at_least(bound: int) -> Guard:
    def guard(n: int, m: int) -> Optional[str]:
        return f"needs n >= {bound}, got n={n}" if n < bound else None

    return guard


def _needs_m_at_most(bound: int) -> Guard:
    def guard(n: int, m: int) -> Optional[str]:
        return f"needs m(A) <= {bound}, got m(A)={m}" if m > bound else None

    return guard


def _all_of(*guards: Guard) -> Guard:
    def guard(n: int, m: int) -> Optional[str]:
        for g in guards:
            reason = g(n, m)
            if reason:
                return reason
        return None

    return guard


def _quad_lower_guard(n: int, m: int) -> Optional[str]:
    if n < 4:
        return f"needs n >= 4, got n={n}"
    if m <= 2:
        return "undefined for m(A)=2"
    return None


def _not_near_pencil(n: int, m: int) -> Optional[str]:
    return "near pencil excluded" if m >= n - 1 else None


def _half_multiplicity(n: int, m: int) -> Optional[str]:
    return f"needs 2 m(A) <= n, got m(A)={m}" if 2 * m > n else None


# linear statements


def _rel_1(n: int, m: int) -> List[Comparison]:
    return [("sum C(i,2) t_i = C(n,2)", pair_sum(m), "=", _const(pairs(n)))]


def _rel_f2(n: int, m: int) -> List[Comparison]:
    return [("1 + sum (i-1) t_i = f2", f2(m), "=", f2(m))]


def _rel_f0(n: int, m: int) -> List[Comparison]:
    return [("sum t_i = f0", f0(m), "=", f0(m))]


def _rel_f1(n: int, m: int) -> List[Comparison]:
    return [("sum i t_i = f1", f1(m), "=", f1(m))]


def _melchior_rhs(m: int) -> Linear:
    return 3 + weighted_sum(m, lambda i: i - 3, start=4)


def _melchior(n: int, m: int) -> List[Comparison]:
    return [("t2 >= 3 + sum_{i>=4} (i-3) t_i", tw(2), ">=", _melchior_rhs(m))]


def _melchior_equality(n: int, m: int) -> List[Comparison]:
    return [("t2 = 3 + sum_{i>=4} (i-3) t_i", tw(2), "=", _melchior_rhs(m))]


def _four_t2(n: int, m: int) -> List[Comparison]:
    return [("4 t2 <= f2", 4 * tw(2), "<=", f2(m))]


def _simplicial_melchior(n: int, m: int) -> List[Comparison]:
    return [("t3 >= 4 + sum_{i>=5} (i-4) t_i", tw(3), ">=", 4 + weighted_sum(m, lambda i: i - 4, start=5))]


def _t2_seventh(n: int, m: int) -> List[Comparison]:
    return [("t2 <= (C(n,2)+6)/7", tw(2), "<=", _const(Fraction(pairs(n) + 6, 7)))]


def _mult_half_caps(n: int) -> bool:
    half = n // 2
    return 3 * half - 3 > n


def _mult_half(n: int, m: int) -> List[Comparison]:
    half = n // 2
    above = weighted_sum(m, lambda i: 1, start=half + 1)
    comparisons: List[Comparison] = [(f"sum_{{i>{half}}} t_i = 0", above, "<=", _const(0))]
    if _mult_half_caps(n):
        comparisons.append((f"t{half} <= 1", tw(half), "<=", _const(1)))
    return comparisons


def _t2t3_sum(n: int) -> Tuple[Linear, Linear]:
    return 2 * tw(2) + tw(3) + tw(4) / 3, _const(Fraction(pairs(n), 3) + 5)


def _t2t3_chain(n: int, m: int) -> List[Comparison]:
    lhs, rhs = _t2t3_sum(n)
    return [
        ("2 (t2 + 2) <= 2 t2 + t3", 2 * (tw(2) + 2), "<=", 2 * tw(2) + tw(3)),
        ("2 t2 + t3 + t4/3 <= C(n,2)/3 + 5", lhs, "<=", rhs),
    ]


def _t2t3_equality(n: int, m: int) -> List[Comparison]:
    lhs, rhs = _t2t3_sum(n)
    return [("2 t2 + t3 + t4/3 = C(n,2)/3 + 5", lhs, "=", rhs)]


def _f2_quarter(n: int, m: int) -> List[Comparison]:
    return [("4 f2 <= (n+1)^2", 4 * f2(m), "<=", _const((n + 1) ** 2))]


def _t2_quad_lower(n: int, m: int) -> List[Comparison]:
    bound = 3 + Fraction((n - 5) ** 2 - 4, 4 * m - 8)
    return [("t2 >= 3 + ((n-5)^2-4)/(4m-8)", tw(2), ">=", _const(bound))]


def _t3_lower(n: int, m: int) -> List[Comparison]:
    lhs = tw(3) + (2 * tw(4) + tw(5)) / m
    return [("t3 + (2 t4 + t5)/m >= 4 + ((n-5)^2-4)/(4m)", lhs, ">=", _const(4 + Fraction((n - 5) ** 2 - 4, 4 * m)))]


def _dirac_motzkin(n: int, m: int) -> List[Comparison]:
    return [("t2 >= floor(n/2)", tw(2), ">=", _const(n // 2))]


def _notsimp_10(n: int, m: int) -> List[Comparison]:
    return [("t4/3 + t5 >= ((n-5)^2-4)/24", tw(4) / 3 + tw(5), ">=", _const(Fraction((n - 5) ** 2 - 4, 24)))]


def _notsimp_11(n: int, m: int) -> List[Comparison]:
    return [("t2 >= (n^2-46n+233)/8 + 2 t4", tw(2), ">=", Fraction(n * n - 46 * n + 233, 8) + 2 * tw(4))]


def _sechser_13(n: int, m: int) -> List[Comparison]:
    return [
        ("t2 >= ((n-5)^2+44)/16", tw(2), ">=", _const(Fraction((n - 5) ** 2 + 44, 16))),
        ("t2 <= (n+1)^2/16", tw(2), "<=", _const(Fraction((n + 1) ** 2, 16))),
    ]


def _sechser_14(n: int, m: int) -> List[Comparison]:
    return [
        ("t3 >= (n^2-22n+185)/24", tw(3), ">=", _const(Fraction(n * n - 22 * n + 185, 24))),
        ("t3 <= (n^2+116n-597)/24", tw(3), "<=", _const(Fraction(n * n + 116 * n - 597, 24))),
    ]


def _sechser_15(n: int, m: int) -> List[Comparison]:
    return [("t4 + t5 <= 3n/2 - 17/2", tw(4) + tw(5), "<=", _const(Fraction(3 * n - 17, 2)))]


def _sechser_16(n: int, m: int) -> List[Comparison]:
    return [
        ("t6 >= (n^2-46n+225)/48", tw(6), ">=", _const(Fraction(n * n - 46 * n + 225, 48))),
        ("t6 <= (n^2+2n-47)/48", tw(6), "<=", _const(Fraction(n * n + 2 * n - 47, 48))),
    ]


def _sechser_17(n: int, m: int) -> List[Comparison]:
    lower = Fraction(n * n, 48) - Fraction(5 * n, 24) + Fraction(7, 16) - tw(5) / 2 - tw(4) / 6
    upper = Fraction(n * n, 48) + Fraction(n, 24) - tw(4) / 3 - 2 * tw(5) / 3 - Fraction(47, 48)
    return [
        ("t6 >= n^2/48 - 5n/24 + 7/16 - t5/2 - t4/6", tw(6), ">=", lower),
        ("t6 <= n^2/48 + n/24 - t4/3 - 2 t5/3 - 47/48", tw(6), "<=", upper),
    ]


def _ext_shnu(n: int, m: int) -> List[Comparison]:
    bound = Fraction(2 * n * n - 2 * n + 4 * m, m + 3)
    return [("f2 >= (2n^2-2n+4m)/(m+3)", f2(m), ">=", _const(bound))]


def _ext_shnu2(n: int, m: int) -> List[Comparison]:
    return [("t2 + 3 t3/2 >= 8 + t4/2 + 5 t5/2", tw(2) + Fraction(3, 2) * tw(3), ">=", 8 + tw(4) / 2 + Fraction(5, 2) * tw(5))]


def _ext_langer(n: int, m: int) -> List[Comparison]:
    return [("f1 >= (n^2+3n)/3", f1(m), ">=", _const(Fraction(n * n + 3 * n, 3)))]


# statements with a max, a min or a residue


def _t2t3_equality_with_residue(n: int, t: TVector) -> List[PartSlack]:
    lhs, rhs = _t2t3_sum(n)
    return [
        compare("2 t2 + t3 + t4/3 = C(n,2)/3 + 5", lhs.at(t), "=", rhs.at(t)),
        residue_part("t4", t.t(4), 3, 2),
    ]


def _minmax(n: int, t: TVector) -> List[PartSlack]:
    t2, t3 = t.t(2), t.t(3)
    chambers = f2(_evaluation_m(t)).at(t)
    return [
        compare("min(t2,t3) <= (n^2-n+30)/18", Fraction(min(t2, t3)), "<=", Fraction(n * n - n + 30, 18)),
        compare("max(t2,t3) > f2/6", Fraction(max(t2, t3)), ">", chambers / 6),
    ]


def _maxquad_a(n: int, t: TVector) -> List[PartSlack]:
    m = _evaluation_m(t)
    bound = Fraction(n * n - n + 2 * m, 3 * (m + 3))
    return [compare("max(t2,t3) > (n^2-n+2m)/(3(m+3))", Fraction(max(t.t(2), t.t(3))), ">", bound)]


def _maxquad_b(n: int, t: TVector) -> List[PartSlack]:
    return [compare("max(t2,t3) > (n^2+3n)/27", Fraction(max(t.t(2), t.t(3))), ">", Fraction(n * n + 3 * n, 27))]


def _notsimp_12(n: int, t: TVector) -> List[PartSlack]:
    return [
        compare("max(t4,t5) >= (n^2-10n+21)/32", Fraction(max(t.t(4), t.t(5))), ">=", Fraction(n * n - 10 * n + 21, 32))
    ]


_NOTSIMP_GUARD = _all_of(_needs_n_at_least(8), _needs_m_at_most(5))
_SECHSER_GUARD = _needs_m_at_most(6)

# where each statement is stated, or used in a proof, in the literature
CITATIONS: Dict[str, str] = {
    "rel-1": "Lemma 2.3, Eq. (1)",
    "rel-2": "Lemma 2.3, Eq. (2)",
    "rel-3": "Lemma 2.3, Eq. (3)",
    "rel-4": "Lemma 2.3, Eq. (4)",
    "melchior": "Lemma 2.3, Eq. (5)",
    "melchior-equality": "Remark 2.4",
    "four-t2-le-f2": 'Lemma "near pencil lemma" b)',
    "simplicial-melchior": 'Corollary "simplicial melchior"',
    "t2-upper-seventh": 'Prop. "2er bound"',
    "mult-half": 'Prop. "inf series prop"',
    "t2t3-chain": 'Lemma "t2+t3" a)',
    "t2t3-equality-mult6": 'Lemma "t2+t3" b)',
    "minmax": 'Corollary "min max bound"',
    "maxquad-a": 'Theorem "t2 t3 quadratisch" a)',
    "maxquad-b": 'Theorem "t2 t3 quadratisch" b)',
    "f2-le-quarter": 'Lemma "poly lemma"',
    "t2-quad-lower": 'Theorem "t_2 quadratisch fuer faktorisierende arrangements"',
    "t3-lower-simplicial": 'Remark "lower bound t3 remark"',
    "dm-lower-bound": 'Theorem "dirac theorem" a)',
    "notsimp-10": 'Lemma "not simp", Eq. (10)',
    "notsimp-11": 'Lemma "not simp", Eq. (11)',
    "notsimp-12": 'Lemma "not simp", Eq. (12)',
    "sechser-13": 'Theorem "sechser struc", Eq. (13)',
    "sechser-14": 'Theorem "sechser struc", Eq. (14)',
    "sechser-15": 'Theorem "sechser struc", Eq. (15)',
    "sechser-16": 'Theorem "sechser struc", Eq. (16)',
    "sechser-17": 'Theorem "sechser struc", proof, Eq. (17)',
    "ext-shnu": 'Theorem "no simp theo", proof',
    "ext-shnu2": 'Lemma "not simp", proof',
    "ext-langer": 'Theorem "t2 t3 quadratisch" b), proof',
}


def _build() -> Dict[str, Constraint]:
    entries = [
        _linear_entry("rel-1", "pair count identity", "sum C(i,2) t_i = C(n,2)", _rel_1, kind=ConstraintKind.EQUALITY),
        _linear_entry("rel-2", "chamber count identity", "1 + sum (i-1) t_i = f2", _rel_f2, kind=ConstraintKind.EQUALITY),
        _linear_entry("rel-3", "vertex count identity", "sum t_i = f0", _rel_f0, kind=ConstraintKind.EQUALITY),
        _linear_entry("rel-4", "edge count identity", "sum i t_i = f1", _rel_f1, kind=ConstraintKind.EQUALITY),
        _linear_entry("melchior", "Melchior's inequality", "t2 >= 3 + sum_{i>=4} (i-3) t_i", _melchior),
        _linear_entry(
            "melchior-equality",
            "equality in Melchior's inequality characterises simplicial arrangements",
            "t2 = 3 + sum_{i>=4} (i-3) t_i",
            _melchior_equality,
            kind=ConstraintKind.EQUALITY,
        ),
        _linear_entry(
            "four-t2-le-f2",
            "each chamber closure holds at most one double point",
            "4 t2 <= f2",
            _four_t2,
            applicability=SIMPLICIAL,
        ),
        _linear_entry(
            "simplicial-melchior",
            "Melchior analogue for triple points",
            "t3 >= 4 + sum_{i>=5} (i-4) t_i",
            _simplicial_melchior,
            applicability=SIMPLICIAL,
        ),
        _linear_entry(
            "t2-upper-seventh", "tight upper bound on double points", "t2 <= (C(n,2)+6)/7", _t2_seventh, applicability=SIMPLICIAL
        ),
        _linear_entry(
            "mult-half",
            "multiplicity bound for simplicial arrangements",
            "t_i = 0 for i > floor(n/2); t_floor(n/2) <= 1 when 3 floor(n/2) - 3 > n",
            _mult_half,
            applicability=SIMPLICIAL,
        ),
        _linear_entry(
            "t2t3-chain",
            "double and triple point chain",
            "2(t2+2) <= 2 t2 + t3 and 2 t2 + t3 + t4/3 <= C(n,2)/3 + 5",
            _t2t3_chain,
            applicability=SIMPLICIAL,
        ),
        Constraint(
            id="t2t3-equality-mult6",
            citation=CITATIONS["t2t3-equality-mult6"],
            label="double and triple point identity for multiplicity at most six",
            statement="if m(A) <= 6: 2 t2 + t3 + t4/3 = C(n,2)/3 + 5 and t4 != 2 (mod 3)",
            applicability=SIMPLICIAL,
            kind=ConstraintKind.MODULAR,
            evaluator=_t2t3_equality_with_residue,
            guard=_SECHSER_GUARD,
            forms=lambda n, m: comparison_forms(_t2t3_equality(n, m)),
            forms_exact=False,
        ),
        Constraint(
            id="minmax",
            citation=CITATIONS["minmax"],
            label="min/max bound on double and triple points",
            statement="min(t2,t3) <= (n^2-n+30)/18 and max(t2,t3) > f2/6",
            applicability=SIMPLICIAL,
            evaluator=_minmax,
        ),
        Constraint(
            id="maxquad-a",
            citation=CITATIONS["maxquad-a"],
            label="quadratic growth of max(t2,t3)",
            statement="max(t2,t3) > (n^2-n+2m)/(3(m+3))",
            applicability=SIMPLICIAL,
            evaluator=_maxquad_a,
        ),
        Constraint(
            id="maxquad-b",
            citation=CITATIONS["maxquad-b"],
            label="quadratic growth of max(t2,t3) for stretchable arrangements",
            statement="max(t2,t3) > (n^2+3n)/27",
            applicability=STRETCHABLE,
            requires=(SIMPLICIAL,),
            evaluator=_maxquad_b,
        ),
        _linear_entry(
            "f2-le-quarter", "real roots of the characteristic polynomial", "4 f2 <= (n+1)^2", _f2_quarter, applicability=SPLITS
        ),
        _linear_entry(
            "t2-quad-lower",
            "quadratic lower bound on double points",
            "t2 >= 3 + ((n-5)^2-4)/(4m-8)",
            _t2_quad_lower,
            applicability=SPLITS,
            guard=_quad_lower_guard,
        ),
        _linear_entry(
            "t3-lower-simplicial",
            "quadratic lower bound on triple points",
            "t3 + (2 t4 + t5)/m >= 4 + ((n-5)^2-4)/(4m)",
            _t3_lower,
            applicability=SIMPLICIAL_SPLITS,
        ),
        _linear_entry(
            "dm-lower-bound", "Dirac-Motzkin bound", "t2 >= floor(n/2)", _dirac_motzkin, applicability=SPLITS
        ),
        _linear_entry(
            "notsimp-10",
            "multiplicity five structure, weighted high points",
            "t4/3 + t5 >= ((n-5)^2-4)/24",
            _notsimp_10,
            applicability=SPLITS,
            requires=(EXTERNAL,),
            guard=_NOTSIMP_GUARD,
        ),
        _linear_entry(
            "notsimp-11",
            "multiplicity five structure, double points",
            "t2 >= (n^2-46n+233)/8 + 2 t4",
            _notsimp_11,
            applicability=SPLITS,
            requires=(EXTERNAL,),
            guard=_NOTSIMP_GUARD,
        ),
        Constraint(
            id="notsimp-12",
            citation=CITATIONS["notsimp-12"],
            label="multiplicity five structure, high points",
            statement="max(t4,t5) >= (n^2-10n+21)/32",
            applicability=SPLITS,
            requires=(EXTERNAL,),
            evaluator=_notsimp_12,
            guard=_NOTSIMP_GUARD,
        ),
        _linear_entry(
            "sechser-13",
            "multiplicity six structure, double points",
            "((n-5)^2+44)/16 <= t2 <= (n+1)^2/16",
            _sechser_13,
            applicability=SIMPLICIAL_SPLITS,
            guard=_SECHSER_GUARD,
        ),
        _linear_entry(
            "sechser-14",
            "multiplicity six structure, triple points",
            "(n^2-22n+185)/24 <= t3 <= (n^2+116n-597)/24",
            _sechser_14,
            applicability=SIMPLICIAL_SPLITS,
            guard=_SECHSER_GUARD,
        ),
        _linear_entry(
            "sechser-15",
            "multiplicity six structure, quadruple and quintuple points",
            "t4 + t5 <= 3n/2 - 17/2",
            _sechser_15,
            applicability=SIMPLICIAL_SPLITS,
            guard=_SECHSER_GUARD,
        ),
        _linear_entry(
            "sechser-16",
            "multiplicity six structure, sextuple points",
            "(n^2-46n+225)/48 <= t6 <= (n^2+2n-47)/48",
            _sechser_16,
            applicability=SIMPLICIAL_SPLITS,
            guard=_SECHSER_GUARD,
        ),
        _linear_entry(
            "sechser-17",
            "multiplicity six structure, sextuple points against t4 and t5",
            "n^2/48 - 5n/24 + 7/16 - t5/2 - t4/6 <= t6 <= n^2/48 + n/24 - t4/3 - 2 t5/3 - 47/48",
            _sechser_17,
            applicability=SIMPLICIAL_SPLITS,
            guard=_SECHSER_GUARD,
        ),
        _linear_entry(
            "ext-shnu",
            "assumed external chamber bound",
            "f2 >= (2n^2-2n+4m)/(m+3)",
            _ext_shnu,
            applicability=EXTERNAL,
        ),
        _linear_entry(
            "ext-shnu2",
            "assumed external double and triple point bound",
            "t2 + 3 t3/2 >= 8 + t4/2 + 5 t5/2",
            _ext_shnu2,
            applicability=EXTERNAL,
            guard=_all_of(_needs_n_at_least(8), _not_near_pencil),
        ),
        _linear_entry(
            "ext-langer",
            "assumed external edge bound for stretchable arrangements",
            "f1 >= (n^2+3n)/3",
            _ext_langer,
            applicability=EXTERNAL,
            requires=(STRETCHABLE,),
            guard=_half_multiplicity,
        ),
    ]
    return {entry.id: entry for entry in entries}


CATALOGUE: Dict[str, Constraint] = _build()


def get_constraint(constraint_id: str) -> Constraint:
    """
    Look up a catalogue entry.

    Raises:
        UnknownConstraintError: the id is not in the catalogue
    """
    try:
        return CATALOGUE[constraint_id]
    except KeyError:
        raise UnknownConstraintError(
            f"unknown constraint {constraint_id!r}; known: {', '.join(CATALOGUE)}"
        ) from None


def constraint_ids() -> List[str]:
    return list(CATALOGUE)
