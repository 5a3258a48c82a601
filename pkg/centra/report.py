"""Rendering of reports, profiles and the catalog as json, text or csv."""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Sequence
from typing import Any

from .catalog import Catalog
from .const import FORMAT_CSV, FORMAT_JSON
from .groups import CentProfile, format_spec
from .suite import ExperimentReport
from .theorems import TheoremReport

REPORT_COLUMNS = ("theorem_id", "instances", "passed", "failed", "skipped")
CATALOG_COLUMNS = ("name", "spec", "order", "alias", "note")


def _json(payload: Any) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def _csv(columns: Sequence[str], rows: list[dict[str, Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(
        buffer, fieldnames=columns, extrasaction="ignore", lineterminator="\n"
    )
    writer.writeheader()
    writer.writerows(rows)
    return buffer.getvalue()


def _table(columns: Sequence[str], rows: list[dict[str, Any]]) -> str:
    """Left-aligned columns padded to the widest cell."""
    cells = [[str(c) for c in columns]] + [
        ["" if row[c] is None else str(row[c]) for c in columns]
        for row in rows
    ]
    widths = [max(len(cell) for cell in column) for column in zip(*cells)]
    return "".join(
        "  ".join(cell.ljust(width) for cell, width in zip(line, widths))
        .rstrip()
        + "\n"
        for line in cells
    )


def render_reports(reports: Sequence[TheoremReport], fmt: str) -> str:
    if fmt == FORMAT_JSON:
        return _json([report.as_dict() for report in reports])
    rows = [
        {column: getattr(report, column) for column in REPORT_COLUMNS}
        for report in reports
    ]
    if fmt == FORMAT_CSV:
        return _csv(REPORT_COLUMNS, rows)
    lines = [_table(REPORT_COLUMNS, rows)]
    for report in reports:
        for item in report.counterexamples:
            lines.append(
                f"FAIL {report.theorem_id} {item.instance}: "
                f"expected {item.expected}, got {item.got}\n"
            )
    return "".join(lines)


def render_profiles(profiles: Sequence[CentProfile], fmt: str) -> str:
    rows = [profile.as_dict() for profile in profiles]
    if fmt == FORMAT_JSON:
        return _json(rows)
    columns = list(rows[0]) if rows else []
    if fmt == FORMAT_CSV:
        return _csv(columns, rows)
    return _table(columns, rows)


def catalog_rows(catalog: Catalog) -> list[dict[str, Any]]:
    return [
        {
            "name": entry.name,
            "spec": format_spec(entry.spec),
            "order": catalog.order(entry.name),
            "alias": catalog.alias_of(entry.name),
            "note": entry.note,
        }
        for entry in catalog
    ]


def render_catalog(catalog: Catalog, fmt: str) -> str:
    rows = catalog_rows(catalog)
    if fmt == FORMAT_JSON:
        return _json(rows)
    if fmt == FORMAT_CSV:
        return _csv(CATALOG_COLUMNS, rows)
    return _table(CATALOG_COLUMNS, rows)


def render_experiment(report: ExperimentReport, fmt: str) -> str:
    if fmt == FORMAT_JSON:
        return _json(report.as_dict())
    rows = [
        {"name": name, "n_2cent": value}
        for name, value in report.values.items()
    ] + [
        {"name": name, "n_2cent": f"duplicate of {same}"}
        for name, same in report.duplicates.items()
    ]
    if fmt == FORMAT_CSV:
        return _csv(("name", "n_2cent"), rows)
    verdict = "distinct" if report.pairwise_distinct else "NOT distinct"
    return _table(("name", "n_2cent"), rows) + f"pairwise {verdict}\n"


def parse_reports(text: str) -> list[TheoremReport]:
    return [TheoremReport.from_dict(item) for item in json.loads(text)]


def diff_reports(
    a: Sequence[TheoremReport], b: Sequence[TheoremReport]
) -> list[str]:
    """Theorem ids whose reports differ, in order of first appearance."""
    left = {report.theorem_id: report.as_dict() for report in a}
    right = {report.theorem_id: report.as_dict() for report in b}
    ids = list(left) + [t for t in right if t not in left]
    return [t for t in ids if left.get(t) != right.get(t)]
