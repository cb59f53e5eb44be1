"""
Report assembly and the two output sinks.

A Report holds summary lines, tables and structured records. report_emit
renders the summary and tables to a text stream and writes the records as
JSON lines with sorted keys; every rational in a record is already a
decimal string, so the stream never carries a float.
"""

import json
import sys
from typing import Any, Dict, List, Optional, Sequence, TextIO

from pydantic import BaseModel, Field

from pseudoline_workbench.common.tables import render_frame, rows_to_frame


class ReportTable(BaseModel):
    """One table of a report: a heading, a column order and row dicts."""
    heading: Optional[str] = None
    columns: List[str]
    rows: List[Dict[str, Any]] = Field(default_factory=list)


class Report(BaseModel):
    """Everything one CLI verb produces."""
    verb: str
    summary: List[str] = Field(default_factory=list)
    tables: List[ReportTable] = Field(default_factory=list)
    records: List[Dict[str, Any]] = Field(default_factory=list)
    failed: bool = False

    def line(self, key: str, value: Any) -> None:
        """Append a "key: value" summary line; booleans print as true/false."""
        if isinstance(value, bool):
            value = "true" if value else "false"
        self.summary.append(f"{key}: {value}")

    def table(self, columns: Sequence[str], rows: Sequence[Dict[str, Any]], heading: Optional[str] = None) -> None:
        self.tables.append(ReportTable(heading=heading, columns=list(columns), rows=list(rows)))

    def record(self, record: Any) -> None:
        self.records.append(dict(record))

    def exit_code(self) -> int:
        return 1 if self.failed else 0

    def render(self) -> str:
        """The human-readable text, identical for identical reports."""
        blocks = []
        if self.summary:
            blocks.append("\n".join(self.summary))
        for table in self.tables:
            text = render_frame(rows_to_frame(table.rows, table.columns))
            blocks.append(f"{table.heading}\n{text}" if table.heading else text)
        return "\n\n".join(blocks) + "\n"


def write_records(records: List[Dict[str, Any]], path: str) -> None:
    """Write one JSON object per line, keys sorted."""
    with open(path, "w", encoding="utf-8") as f:
        for record in records:
            f.write(json.dumps(record, sort_keys=True, ensure_ascii=False) + "\n")


def report_emit(report: Report, out: Optional[TextIO] = None, records_path: Optional[str] = None) -> int:
    """
    Send a report to both sinks.

    Args:
        report: The assembled report
        out: Text stream for the table (stdout by default)
        records_path: File for the JSON-lines records; skipped when None

    Returns:
        The exit code the report implies (0 or 1)
    """
    out = out or sys.stdout
    out.write(report.render())
    if records_path:
        write_records(report.records, records_path)
        print(f"✅ {len(report.records)} records written to {records_path}", file=sys.stderr)
    return report.exit_code()
