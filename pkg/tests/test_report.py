import io
import json

from pseudoline_workbench.report import Report, report_emit, write_records


def test_summary_lines_render_booleans():
    report = Report(verb="invariants")
    report.line("splits", True)
    report.line("near pencil", False)
    report.line("n", 13)
    assert report.render() == "splits: true\nnear pencil: false\nn: 13\n"


def test_tables_follow_the_summary():
    report = Report(verb="scan")
    report.line("profile", "universal")
    report.table(["n", "feasible"], [{"n": 6, "feasible": 2}, {"n": 7, "feasible": 0}], heading="rows")
    report.table(["issue"], [])
    blocks = report.render().split("\n\n")
    assert blocks[0] == "profile: universal"
    assert blocks[1].splitlines()[0] == "rows"
    assert blocks[1].splitlines()[1].split() == ["n", "feasible"]
    assert blocks[2] == "issue\n(no rows)\n"


def test_emit_writes_sorted_json_lines(tmp_path):
    report = Report(verb="check", failed=True)
    report.record({"kind": "certificate", "slack": "-15", "constraint": "f2-le-quarter"})
    report.record({"kind": "certificate", "slack": None, "constraint": "notsimp-10"})
    out = io.StringIO()
    path = tmp_path / "records.jsonl"
    assert report_emit(report, out, str(path)) == 1
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == '{"constraint": "f2-le-quarter", "kind": "certificate", "slack": "-15"}'
    assert json.loads(lines[1])["slack"] is None


def test_emit_without_records(tmp_path):
    report = Report(verb="detect")
    report.line("families", "A132")
    out = io.StringIO()
    assert report_emit(report, out) == 0
    assert out.getvalue() == "families: A132\n"


def test_write_records_empty(tmp_path):
    path = tmp_path / "empty.jsonl"
    write_records([], str(path))
    assert path.read_text(encoding="utf-8") == ""
