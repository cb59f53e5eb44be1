from fractions import Fraction

import pytest
from opentelemetry.sdk.trace.export.in_memory_span_exporter import InMemorySpanExporter

from pseudoline_workbench.common.config import load_settings
from pseudoline_workbench.common.errors import ParseError, ParameterRangeError, WorkbenchInputError
from pseudoline_workbench.common.exact import (
    format_fraction,
    fraction_ceil,
    fraction_floor,
    integer_sqrt_exact,
    pairs,
    to_fraction,
)
from pseudoline_workbench.common.fixtures import fixture_names, get_data_file_path
from pseudoline_workbench.common.models import ValidationReport
from pseudoline_workbench.common.tables import render_frame, rows_to_frame
from pseudoline_workbench.common.tracing import enable_tracing_for_command, setup_tracing


@pytest.mark.parametrize(
    "value,expected",
    [(3, Fraction(3)), ("-3/4", Fraction(-3, 4)), (" 7 ", Fraction(7)), (Fraction(1, 3), Fraction(1, 3))],
)
def test_to_fraction_accepts_exact_input(value, expected):
    assert to_fraction(value) == expected


@pytest.mark.parametrize("value", [0.5, "0.5", "1e3", "", "x/2", "1/0", None])
def test_to_fraction_rejects_inexact_or_malformed_input(value):
    with pytest.raises(WorkbenchInputError):
        to_fraction(value, name="eps")


def test_input_errors_are_value_errors():
    assert issubclass(ParameterRangeError, ValueError)
    error = ParseError("bad row", "a.wd", 4)
    assert str(error) == "a.wd:4: bad row"
    assert error.line == 4


def test_rounding_and_rendering():
    assert fraction_floor(Fraction(-7, 2)) == -4
    assert fraction_ceil(Fraction(-7, 2)) == -3
    assert fraction_floor(Fraction(84, 7)) == 12
    assert format_fraction(Fraction(6, 3)) == "2"
    assert format_fraction(Fraction(-13, 16)) == "-13/16"
    assert pairs(13) == 78
    assert integer_sqrt_exact(196) == 14
    assert integer_sqrt_exact(195) is None
    assert integer_sqrt_exact(-4) is None


def test_validation_report_summary():
    ok = ValidationReport(subject="wiring", n=6)
    bad = ValidationReport(subject="arrangement", n=4, issues=["uncovered pair {0,1}"])
    assert ok.is_valid() and ok.summary() == "wiring on 6 lines: valid"
    assert not bad.is_valid()
    assert bad.summary() == "arrangement on 4 lines: invalid (1 issue(s))"


def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv("PSEUDOLINE_RECORDS", "/tmp/out.jsonl")
    monkeypatch.setenv("PSEUDOLINE_TRACING", "TRUE")
    monkeypatch.setenv("PSEUDOLINE_SCAN_WORKERS", "4")
    settings = load_settings()
    assert settings.records_path == "/tmp/out.jsonl"
    assert settings.tracing is True
    assert settings.trace_console is False
    assert settings.scan_workers == 4


def test_settings_ignore_bad_worker_count(monkeypatch):
    monkeypatch.setenv("PSEUDOLINE_SCAN_WORKERS", "many")
    monkeypatch.delenv("PSEUDOLINE_TRACING", raising=False)
    settings = load_settings()
    assert settings.scan_workers == 1
    assert enable_tracing_for_command("scan", settings) is None


def test_setup_tracing_exports_spans():
    exporter = InMemorySpanExporter()
    provider = setup_tracing("pseudoline-workbench-test", exporter=exporter)
    with provider.get_tracer("test").start_as_current_span("sweep") as span:
        span.set_attribute("n", 7)
    finished = exporter.get_finished_spans()
    assert [s.name for s in finished] == ["sweep"]
    assert finished[0].attributes["n"] == 7


def test_tables_render_in_column_order():
    frame = rows_to_frame([{"b": 2, "a": "x"}, {"a": "y"}], ["a", "b"])
    assert list(frame.columns) == ["a", "b"]
    text = render_frame(frame)
    assert text.splitlines()[0].split() == ["a", "b"]
    assert render_frame(rows_to_frame([], ["n", "feasible"])) == "n  feasible\n(no rows)"


def test_fixture_files_are_shipped():
    names = fixture_names()
    for name in ("a13_2.lines", "a6_1.wd", "kelly_moser.tvec", "near_pencil_5.wd", "triangle.arr"):
        assert name in names
        assert get_data_file_path(name).is_file()
