from fractions import Fraction

import pytest

from pseudoline_workbench.arrangement.incidence import t_vector
from pseudoline_workbench.arrangement.models import FVector, TVector
from pseudoline_workbench.arrangement.wiring import wiring_to_arrangement
from pseudoline_workbench.common.errors import UnknownConstraintError, UnknownSuiteError, WorkbenchInputError
from pseudoline_workbench.inequalities.catalogue import CATALOGUE, constraint_ids, get_constraint
from pseudoline_workbench.inequalities.models import ApplicabilityFlags, Verdict
from pseudoline_workbench.inequalities.suites import (
    SUITES,
    certificate_record,
    check,
    premised_flags,
    resolve_flags,
    run_suite,
    suite_constraints,
)

A132 = TVector.from_sequence(13, [12, 4, 9])
KELLY_MOSER = TVector.from_sequence(7, [3, 6])
A151 = TVector.from_sequence(15, [15, 10, 0, 6])
GENERIC_6 = TVector(n=6, counts={2: 15})
FANO = TVector.from_sequence(7, [0, 7])


def _by_id(certificates):
    return {c.constraint: c for c in certificates}


def test_every_suite_member_is_catalogued():
    for ids in SUITES.values():
        for cid in ids:
            assert cid in CATALOGUE
    assert "melchior" in constraint_ids()
    with pytest.raises(UnknownConstraintError):
        get_constraint("no-such-bound")
    with pytest.raises(UnknownSuiteError):
        suite_constraints("everything")


def test_melchior_is_tight_on_a132():
    certificate = check("melchior", 13, A132)
    assert certificate.verdict is Verdict.PASS
    assert certificate.slack == 0
    assert certificate.binding == "t2 >= 3 + sum_{i>=4} (i-3) t_i: 12 >= 12"


def test_melchior_fails_on_the_fano_plane():
    certificate = check("melchior", 7, FANO)
    assert certificate.is_failure()
    assert certificate.slack == -3


def test_universal_suite_on_a132():
    certificates = run_suite("universal", 13, A132)
    assert [c.constraint for c in certificates] == SUITES["universal"]
    assert all(c.is_passing() for c in certificates)


def test_measured_f_vector_is_compared():
    certificate = check("rel-2", 13, A132, measured=FVector(f0=25, f1=72, f2=47))
    assert certificate.is_failure()
    assert certificate.slack == 1
    assert check("rel-2", 13, A132, measured=FVector(f0=25, f1=72, f2=48)).is_passing()


def test_simplicial_suite_on_a132():
    certificates = _by_id(run_suite("simplicial", 13, A132))
    for cid in ("four-t2-le-f2", "simplicial-melchior", "t2-upper-seventh", "t2t3-chain", "t2t3-equality-mult6"):
        assert certificates[cid].is_passing(), cid
        assert certificates[cid].slack == 0, cid
    assert certificates["mult-half"].is_passing()
    assert certificates["minmax"].is_passing()
    assert certificates["maxquad-a"].is_passing()
    assert certificates["maxquad-b"].verdict is Verdict.NOT_APPLICABLE
    assert certificates["maxquad-b"].reason == "requires stretchable-only"


def test_stretchable_flag_enables_maxquad_b():
    certificate = check("maxquad-b", 13, A132, ApplicabilityFlags(stretchable=True))
    assert certificate.is_passing()
    assert certificate.slack == 12 - Fraction(208, 27)


def test_fractional_slack_is_exact():
    assert check("t2-upper-seventh", 15, A151).slack == Fraction(6, 7)


def test_real_rooted_suite_on_kelly_moser():
    certificates = _by_id(run_suite("real-rooted", 7, KELLY_MOSER))
    for cid in ("f2-le-quarter", "t2-quad-lower", "dm-lower-bound"):
        assert certificates[cid].is_passing(), cid
        assert certificates[cid].slack == 0, cid
    for cid in ("notsimp-10", "notsimp-11", "notsimp-12"):
        assert certificates[cid].verdict is Verdict.NOT_APPLICABLE
        assert certificates[cid].reason == "requires external-assumed"


def test_real_rooted_premise_makes_generic_vector_fail():
    certificates = _by_id(run_suite("real-rooted", 6, GENERIC_6))
    assert certificates["f2-le-quarter"].is_failure()
    assert certificates["f2-le-quarter"].slack == -15
    skipped = check("f2-le-quarter", 6, GENERIC_6)
    assert skipped.verdict is Verdict.NOT_APPLICABLE


def test_explicit_flag_beats_suite_premise():
    flags = premised_flags("real-rooted", ApplicabilityFlags(splits=False))
    assert flags.splits is False
    assert premised_flags("real-rooted").splits is True
    assert premised_flags("external").assume_external is True
    assert premised_flags("simplicial-real-rooted").simplicial is True


def test_trivial_vectors_are_excluded_from_simplicial_statements():
    near_pencil = TVector(n=6, counts={2: 5, 5: 1})
    facts = resolve_flags(near_pencil)
    assert facts.trivial
    certificate = check("four-t2-le-f2", 6, near_pencil, ApplicabilityFlags(simplicial=True))
    assert certificate.verdict is Verdict.NOT_APPLICABLE


def test_guard_reports_multiplicity():
    t = TVector(n=9, counts={2: 3, 3: 4, 7: 1})
    flags = ApplicabilityFlags(simplicial=True, splits=True)
    certificate = check("sechser-13", 9, t, flags)
    assert certificate.verdict is Verdict.NOT_APPLICABLE
    assert certificate.reason == "needs m(A) <= 6, got m(A)=7"


def test_t4_residue_two_is_refused():
    t = TVector(n=9, counts={2: 6, 3: 6, 4: 2})
    certificate = check("t2t3-equality-mult6", 9, t, ApplicabilityFlags(simplicial=True))
    assert certificate.is_failure()
    residue = certificate.parts[1]
    assert residue.label == "t4 mod 3"
    assert not residue.passed


def test_n_must_match_the_vector():
    with pytest.raises(WorkbenchInputError):
        check("melchior", 12, A132)


def test_certificate_record_is_exact_text():
    record = certificate_record(run_suite("real-rooted", 6, GENERIC_6)[0])
    assert record["verdict"] == "fail"
    assert record["slack"] == "-15"
    assert record["slack_numerator"] == "-15"
    assert record["slack_denominator"] == "1"
    record = certificate_record(check("t2-upper-seventh", 15, A151))
    assert (record["slack"], record["slack_denominator"]) == ("6/7", "7")
    record = certificate_record(check("maxquad-b", 13, A132))
    assert record["verdict"] == "not-applicable" and record["slack"] is None


def test_every_constraint_has_a_location_and_a_label():
    for constraint in CATALOGUE.values():
        assert constraint.citation.split()[0] in {"Lemma", "Remark", "Corollary", "Prop.", "Theorem"}, constraint.id
        assert constraint.label and constraint.label != constraint.citation
    assert get_constraint("rel-1").citation == "Lemma 2.3, Eq. (1)"
    assert get_constraint("melchior").citation == "Lemma 2.3, Eq. (5)"
    assert get_constraint("melchior").label == "Melchior's inequality"
    assert get_constraint("t2-upper-seventh").citation == 'Prop. "2er bound"'
    assert get_constraint("notsimp-11").citation == 'Lemma "not simp", Eq. (11)'


def test_certificates_carry_location_and_label():
    record = certificate_record(check("dm-lower-bound", 13, A132))
    assert record["citation"] == 'Theorem "dirac theorem" a)'
    assert record["label"] == "Dirac-Motzkin bound"
    record = certificate_record(check("maxquad-b", 13, A132))
    assert record["citation"] == 'Theorem "t2 t3 quadratisch" b)'
    assert record["verdict"] == "not-applicable"


def test_linear_forms_agree_with_evaluators(random_wirings):
    vectors = [t_vector(wiring_to_arrangement(w)) for w in random_wirings] + [A132, KELLY_MOSER, A151, FANO]
    for constraint in CATALOGUE.values():
        if not constraint.forms_exact:
            continue
        for t in vectors:
            m = max(t.multiplicity, 2)
            if constraint.guard_reason(t.n, m):
                continue
            parts = constraint.evaluator(t.n, t)
            forms = constraint.linear_forms(t.n, m)
            assert all(p.passed for p in parts) == all(f.is_satisfied(t) for f in forms), (constraint.id, str(t))
