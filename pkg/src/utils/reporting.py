"""
Deterministic text rendering of reports and complexity tables.
"""

import csv
import io
import json
from typing import Any, List
from src.models.experiment import ComplexityRow, OutputFormat

TABLE_FIELDS = ["mode", "query_set", "relation", "measured", "observed", "bound", "pass", "note"]


def dump_json(report: Any) -> str:
    """Render a report as indented JSON with sorted keys and a trailing newline."""
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _pairs(values: dict) -> str:
    return ";".join(f"{key}={_number(value)}" for key, value in values.items())


def _number(value: float) -> str:
    return str(int(value)) if float(value).is_integer() else f"{value:.4f}"


def _bound_cell(row: ComplexityRow) -> str:
    if row.relation == "impossible":
        return "not possible"
    sign = "<=" if row.relation == "upper" else ">="
    return ";".join(f"{key}{sign}{_number(bound)}" for key, bound in row.bounds.items())


def emit_table(rows: List[ComplexityRow], output_format: OutputFormat = OutputFormat.CSV) -> str:
    """
    Render complexity-table rows.

    Args:
        rows: Non-empty list of rows
        output_format: CSV (one line per row after the header) or JSON (array of row objects)

    Returns:
        The rendered table
    """
    if not rows:
        raise ValueError("emit_table needs at least one row")
    if output_format == OutputFormat.JSON:
        return dump_json([row.model_dump(mode="json") for row in rows])

    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=TABLE_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(
            {
                "mode": row.mode,
                "query_set": row.query_set,
                "relation": row.relation,
                "measured": _pairs({kind.value: n for kind, n in row.measured.counts.items()}),
                "observed": _pairs(row.observed),
                "bound": _bound_cell(row),
                "pass": str(row.passed).lower(),
                "note": row.note,
            }
        )
    return buffer.getvalue()
