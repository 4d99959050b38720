"""
Rendering of tables and verification reports for the terminal.
"""

import io
import csv
from dataclasses import dataclass, field
from typing import Any, List, Sequence, Tuple

from tabulate import tabulate

from models.models import VerificationReport

FORMATS = ("text", "json", "csv")


@dataclass(frozen=True)
class Table:
    """
    style  "arrow"  two columns printed as "key → value"
           "words"  cells joined by single spaces, no header
           "grid"   tabulate plain layout with headers
    """

    name: str
    headers: Tuple[str, ...]
    rows: Tuple[Tuple[Any, ...], ...]
    style: str = "grid"
    note: str = ""

    def cell(self, row: int, column: int) -> Any:
        return self.rows[row][column]

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "kind": "table",
            "name": self.name,
            "headers": list(self.headers),
            "rows": [list(r) for r in self.rows],
        }


def render_text(table: Table) -> str:
    if table.style == "arrow":
        lines = [f"{a} → {b}" for a, b in table.rows]
    elif table.style == "words":
        lines = [" ".join(str(c) for c in row) for row in table.rows]
    else:
        lines = tabulate(table.rows, headers=table.headers, tablefmt="plain", disable_numparse=True).splitlines()
    return "\n".join(lines) + "\n"


def render_csv(table: Table) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(table.headers)
    writer.writerows(table.rows)
    return buffer.getvalue()


def render_report(report: VerificationReport) -> str:
    """Human summary: one line per check, then the verdict."""
    rows: List[Sequence[str]] = []
    for c in report.checks:
        rows.append(("PASS" if c.passed else "FAIL", f"{c.check_id} = {_short(c.actual)}", _short(c.expected)))
    body = tabulate(rows, headers=("", "check", "expected"), tablefmt="simple", disable_numparse=True)
    verdict = "ok" if report.ok else f"{len(report.failed)} failed"
    return f"== {report.suite}: {len(report.checks)} checks, {verdict}\n{body}\n"


def _short(value: Any, width: int = 60) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    text = str(value)
    return text if len(text) <= width else text[: width - 1] + "…"
