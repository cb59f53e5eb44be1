from fractions import Fraction

import pytest
from opentelemetry.sdk.trace.export.in_memory_span_exporter import InMemorySpanExporter

from pseudoline_workbench.arrangement.models import TVector
from pseudoline_workbench.common.errors import ParameterRangeError
from pseudoline_workbench.common.tracing import setup_tracing
from pseudoline_workbench.families.generate import KELLY_MOSER_VECTOR, r1_vector
from pseudoline_workbench.feasibility import scan
from pseudoline_workbench.feasibility.bounds import stated_bound
from pseudoline_workbench.feasibility.models import FeasibilityQuery
from pseudoline_workbench.feasibility.scan import (
    conjecture_ratio_check,
    dirac_motzkin_probe,
    epsilon_cross_check,
    expected_dirac_equality,
    query_for,
    ratio_envelope,
    scan_bound,
    sextuple_vectors,
)

MAX_MULT_4 = FeasibilityQuery(n=3, max_mult=4, require_simplicial=True, require_splits=True, require_four_t2_le_f2=True)
MAX_MULT_5 = MAX_MULT_4.model_copy(update={"max_mult": 5})
NO_SIMP_B = FeasibilityQuery(n=3, max_mult=5, require_splits=True, include_external=True)


def test_query_for_caps_the_multiplicity():
    q = query_for(MAX_MULT_5, 5)
    assert (q.n, q.max_mult, q.count_only) == (5, 4, True)
    assert query_for(MAX_MULT_5, 20).max_mult == 5


def test_scan_stays_within_the_stated_bound():
    report = scan_bound(MAX_MULT_4, 6, 18, progress=False)
    assert [row.n for row in report.rows] == list(range(6, 19))
    assert report.stated_bound == 16
    assert 13 in report.feasible_ns()
    assert report.smallest_feasible() == 6
    assert report.largest_feasible() <= 16
    assert report.is_within_stated_bound()
    assert report.summary().endswith("(stated bound: n <= 16)")


def test_parallel_scan_matches_sequential():
    sequential = scan_bound(MAX_MULT_4, 9, 14, progress=False)
    parallel = scan_bound(MAX_MULT_4, 9, 14, workers=2, progress=False)
    assert parallel.rows == sequential.rows


def test_scan_records_its_range_and_cutoff_on_a_span(monkeypatch):
    exporter = InMemorySpanExporter()
    provider = setup_tracing("pseudoline-workbench-test", exporter=exporter)
    monkeypatch.setattr(scan, "tracer", provider.get_tracer("test"))
    report = scan_bound(MAX_MULT_4, 12, 14, progress=False)
    [span] = [s for s in exporter.get_finished_spans() if s.name == "scan_bound"]
    assert (span.attributes["n_from"], span.attributes["n_to"], span.attributes["workers"]) == (12, 14, 1)
    assert span.attributes["largest_feasible"] == report.largest_feasible()
    assert report.largest_feasible() is not None


def test_scan_flags_vectors_beyond_a_bound():
    report = scan_bound(MAX_MULT_4, 12, 13, stated=stated_bound("no-simp-a-m3"), progress=False)
    assert report.stated_bound == 7
    assert not report.is_within_stated_bound()


@pytest.mark.parametrize("n_from,n_to,workers", [(10, 9, 1), (2, 9, 1), (5, 9, 0)])
def test_scan_parameter_ranges(n_from, n_to, workers):
    with pytest.raises(ParameterRangeError):
        scan_bound(MAX_MULT_4, n_from, n_to, workers=workers, progress=False)


@pytest.mark.parametrize("n", range(3, 13))
def test_dirac_motzkin_probe(n):
    probe = dirac_motzkin_probe(n)
    assert probe.below == []
    assert probe.at == probe.expected
    assert probe.is_consistent()


def test_expected_equality_cases():
    assert expected_dirac_equality(7) == [KELLY_MOSER_VECTOR]
    assert expected_dirac_equality(12) == [r1_vector(6)]
    assert expected_dirac_equality(9) == []
    assert expected_dirac_equality(4) == []
    with pytest.raises(ParameterRangeError):
        dirac_motzkin_probe(2)


def test_ratio_envelope():
    lower, upper = ratio_envelope(24)
    assert lower == Fraction(576 - 1104 + 225, 48 * 576)
    assert upper == Fraction(576 + 48 - 47, 48 * 576)


def test_ratio_check_passes_on_small_arrangements():
    report = conjecture_ratio_check(sextuple_vectors(6, 16))
    assert report.rows
    assert report.is_passing()
    assert any(row.t == TVector.from_sequence(13, [12, 4, 9]) for row in report.rows)


def test_ratio_check_reports_violations():
    crowded = TVector(n=10, counts={2: 3, 6: 3})
    report = conjecture_ratio_check([crowded])
    assert not report.is_passing()
    row = report.violations()[0]
    assert row.t6 == 3
    assert row.ratio == Fraction(3, 100)
    assert row.ratio > row.upper


@pytest.mark.slow
def test_multiplicity_four_scan_is_empty_beyond_sixteen():
    report = scan_bound(MAX_MULT_4, 17, 60, progress=False)
    assert report.largest_feasible() is None


@pytest.mark.slow
def test_multiplicity_five_scan_is_empty_beyond_forty():
    report = scan_bound(MAX_MULT_5, 41, 100, workers=2, progress=False)
    assert report.stated_bound == 40
    assert report.largest_feasible() is None


@pytest.mark.slow
def test_external_scan_is_empty_beyond_the_stated_bound():
    report = scan_bound(NO_SIMP_B, 186, 250, workers=2, progress=False)
    assert report.stated_bound == 185
    assert report.largest_feasible() is None


@pytest.mark.slow
@pytest.mark.parametrize("n", range(13, 31))
def test_dirac_motzkin_probe_up_to_thirty(n):
    assert dirac_motzkin_probe(n).is_consistent()


@pytest.mark.slow
def test_epsilon_window_is_empty():
    report = epsilon_cross_check(8, window=2, progress=False)
    assert [row.n for row in report.rows] == [257, 258]
    assert report.stated_bound == 256
    assert report.largest_feasible() is None


@pytest.mark.slow
def test_ratio_check_up_to_forty():
    assert conjecture_ratio_check(sextuple_vectors(6, 40)).is_passing()
