"""Tabular results and their CSV/JSON serializations.

CSV output is deterministic byte-for-byte: '#'-prefixed notes first, then
the header row, then data rows with floats printed to 9 significant digits.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field


@dataclass
class Table:
    """Columns, rows, and a free-form notes block that precedes the data."""

    columns: list[str]
    rows: list[list]
    notes: list[str] = field(default_factory=list)


def format_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.9g}"
    return str(value)


def to_csv(table: Table) -> str:
    buffer = io.StringIO()
    for note in table.notes:
        buffer.write(f"# {note}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([format_value(v) for v in row])
    return buffer.getvalue()


def to_json(table: Table) -> str:
    payload = {
        "notes": table.notes,
        "columns": table.columns,
        "rows": [[None if v is None else v for v in row] for row in table.rows],
    }
    return json.dumps(payload, indent=2) + "\n"


def write_table(table: Table, stream, fmt: str = "csv") -> None:
    if fmt == "csv":
        stream.write(to_csv(table))
    elif fmt == "json":
        stream.write(to_json(table))
    else:
        raise ValueError(f"unknown output format {fmt!r}; expected 'csv' or 'json'")
