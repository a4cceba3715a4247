"""Report and catalog rendering: JSON documents, CSV, markdown comparison.

Exact rationals go out in their canonical encoding; every displayed number
additionally ships as a two-decimal half-up string and as a float so
clients can render without doing index arithmetic themselves.
"""

from __future__ import annotations

import csv
import io
from fractions import Fraction

from .catalog import Catalog
from .rational import encode_rational, format_decimal, format_signed
from .scoring import IndexReport

UNASSESSED_MARK = "-"


def _triplet(value: Fraction) -> dict:
    return {
        "exact": encode_rational(value),
        "value": float(value),
        "display": format_decimal(value),
    }


def report_to_dict(report: IndexReport) -> dict:
    return {
        "library": {
            "name": report.library.name,
            "version": report.library.version,
            "language": report.library.language,
            "source_url": report.library.source_url,
        },
        "library_id": report.library.library_id,
        "catalog_version": report.catalog_version,
        "weights": {
            str(a): encode_rational(w) for a, w in report.weights_used.weights.items()
        },
        "rows": [
            {
                "attribute_id": row.attribute_id,
                "name": row.name,
                "assessed": row.assessed,
                "assessed_count": row.assessed_count,
                "ratings": {cid: encode_rational(v) for cid, v in row.ratings},
                "mean": _triplet(row.mean) if row.mean is not None else None,
                "weight": _triplet(row.weight),
                "contribution": _triplet(row.contribution),
            }
            for row in report.rows
        ],
        "total": _triplet(report.total),
        "achievable_min": _triplet(report.achievable_min),
        "achievable_max": _triplet(report.achievable_max),
    }


def report_to_csv(report: IndexReport) -> str:
    """One row per attribute plus footer rows for total and bounds."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["attribute", "m", "mean", "weight", "contribution"])
    for row in report.rows:
        writer.writerow(
            [
                row.attribute_id,
                row.assessed_count,
                format_decimal(row.mean) if row.mean is not None else "",
                format_decimal(row.weight),
                format_decimal(row.contribution) if row.assessed else "",
            ]
        )
    writer.writerow(["total", "", "", "", format_decimal(report.total)])
    writer.writerow(["achievable_min", "", "", "", format_decimal(report.achievable_min)])
    writer.writerow(["achievable_max", "", "", "", format_decimal(report.achievable_max)])
    return buffer.getvalue()


def reports_to_markdown(reports: list[IndexReport], catalog: Catalog) -> str:
    """Side-by-side comparison: attribute rows in bold, criterion rows below."""
    if not reports:
        return ""
    names = [f"{r.library.name} {r.library.version}".strip() for r in reports]
    lines = []
    lines.append("| Nr | Attribute | " + " | ".join(names) + " |")
    lines.append("|---|---|" + "---|" * len(reports))
    rows_by_attribute = [
        {row.attribute_id: row for row in report.rows} for report in reports
    ]
    for attribute in catalog.attributes:
        means = []
        for per_report in rows_by_attribute:
            row = per_report.get(attribute.id)
            if row is None or row.mean is None:
                means.append(UNASSESSED_MARK)
            else:
                means.append(format_signed(row.mean))
        lines.append(
            f"| {attribute.id} | **{attribute.name}** | " + " | ".join(means) + " |"
        )
        for criterion in attribute.criteria:
            cells = []
            any_rated = False
            for per_report in rows_by_attribute:
                row = per_report.get(attribute.id)
                rated = dict(row.ratings) if row is not None else {}
                if criterion.id in rated:
                    any_rated = True
                    cells.append(format_signed(rated[criterion.id]))
                else:
                    cells.append(UNASSESSED_MARK)
            if any_rated:
                lines.append(
                    f"| {criterion.id} | {criterion.name} | " + " | ".join(cells) + " |"
                )
    totals = " | ".join(format_decimal(r.total) for r in reports)
    bounds = " | ".join(
        f"[{format_decimal(r.achievable_min)}, {format_decimal(r.achievable_max)}]"
        for r in reports
    )
    lines.append(f"|  | **Index** | {totals} |")
    lines.append(f"|  | Achievable bounds | {bounds} |")
    return "\n".join(lines) + "\n"


def catalog_to_text(catalog: Catalog) -> str:
    """Human-readable rubric listing for the CLI."""
    lines = [f"Catalog {catalog.version}: {catalog.n} attributes"]
    for attribute in catalog.attributes:
        lines.append("")
        lines.append(f"{attribute.id}. {attribute.name}")
        lines.append(f"   {attribute.description}")
        if not attribute.criteria:
            lines.append("   (no evaluation criteria)")
        for criterion in attribute.criteria:
            rubric = criterion.rubric
            if rubric.anchors:
                scale = ", ".join(
                    f"{format_signed(value)}={label}" for label, value in rubric.anchors
                )
            else:
                scale = "default percentage thresholds"
            lines.append(f"   {criterion.id} {criterion.name} [{scale}]")
    return "\n".join(lines) + "\n"
