"""Render evaluation reports as a table, delimited text or JSON.

All formats are deterministic: fixed float formatting, stable ordering,
no timestamps, so identical inputs give byte-identical output.
"""

from __future__ import annotations

import csv
import io
import json

from .pipeline import (EvaluationReport, Method, UniquenessSummary,
                       numeric_key)
from .vocabulary import FEEDBACK_COLUMNS

_METHOD_TITLES = {
    Method.EXTENSION_PRINCIPLE: "Extension principle",
    Method.SYMBOLIC: "Symbolic",
    Method.TWO_TUPLE: "2-tuple",
    Method.PERCEPTUAL: "Perceptual",
}


def _cell_numeric(cell, method: Method, verbose: bool) -> str:
    if cell.error is not None:
        return "!"
    rec = cell.recommendation
    if verbose and method is Method.PERCEPTUAL:
        return repr(float(rec.details["centroid_mean"]))
    return numeric_key(rec)


def _cell_word(cell) -> str:
    if cell.error is not None:
        return "failed"
    return cell.recommendation.linguistic.code


def render_table(report: EvaluationReport, verbose: bool = False) -> str:
    """Fixed-width table: one row per student, two columns per method."""
    header = ["student"] + list(FEEDBACK_COLUMNS)
    for method in report.methods:
        title = _METHOD_TITLES[method]
        header += [f"{title} numeric", f"{title} word"]
    table = [header]
    for row in report.rows:
        cells = [row.student_id]
        cells += list(row.codes) if row.codes else ["?"] * len(FEEDBACK_COLUMNS)
        for method in report.methods:
            if row.error is not None:
                cells += ["!", "failed"]
            else:
                cell = row.cells[method]
                cells += [_cell_numeric(cell, method, verbose), _cell_word(cell)]
        table.append(cells)
    widths = [max(len(r[i]) for r in table) for i in range(len(header))]
    lines = []
    for r in table:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
    errors = [f"# {row.student_id}: {row.error}" for row in report.rows if row.error]
    return "\n".join(lines + errors) + "\n"


def render_csv(report: EvaluationReport, verbose: bool = False) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = ["student_id"] + list(FEEDBACK_COLUMNS)
    for method in report.methods:
        header += [f"{method.value}_numeric", f"{method.value}_word"]
    header.append("error")
    writer.writerow(header)
    for row in report.rows:
        cells = [row.student_id]
        cells += list(row.codes) if row.codes else [""] * len(FEEDBACK_COLUMNS)
        for method in report.methods:
            if row.error is not None:
                cells += ["", ""]
            else:
                cell = row.cells[method]
                if cell.error is not None:
                    cells += ["", ""]
                else:
                    cells += [_cell_numeric(cell, method, verbose), _cell_word(cell)]
        cells.append(row.error or "")
        writer.writerow(cells)
    return buf.getvalue()


def _row_payload(row, methods, verbose: bool) -> dict:
    payload: dict[str, object] = {"student_id": row.student_id}
    payload["words"] = dict(zip(FEEDBACK_COLUMNS, row.codes)) if row.codes else None
    if row.error is not None:
        payload["error"] = row.error
        return payload
    method_payload = {}
    for method in methods:
        cell = row.cells[method]
        if cell.error is not None:
            method_payload[method.value] = {"error": cell.error}
            continue
        rec = cell.recommendation
        entry: dict[str, object] = {
            "numeric": numeric_key(rec),
            "word": rec.linguistic.code,
            "label": rec.linguistic.label,
        }
        if method is Method.PERCEPTUAL:
            interval = rec.details["centroid"]
            entry["centroid"] = [interval.c_l, interval.c_r]
            if verbose:
                entry["centroid_mean"] = float(rec.details["centroid_mean"])
                entry["similarities"] = [float(s) for s in rec.details["similarities"]]
        if method is Method.TWO_TUPLE:
            pair = rec.details["two_tuple"]
            entry["two_tuple"] = [pair.term_index, pair.alpha]
        if method is Method.EXTENSION_PRINCIPLE:
            entry["aggregate"] = list(rec.details["aggregate"].as_tuple())
        method_payload[method.value] = entry
    payload["methods"] = method_payload
    return payload


def render_json(report: EvaluationReport, verbose: bool = False,
                uniqueness: UniquenessSummary | None = None) -> str:
    document: dict[str, object] = {
        "metadata": dict(report.metadata),
        "rows": [_row_payload(row, report.methods, verbose) for row in report.rows],
    }
    if uniqueness is not None:
        document["uniqueness"] = {
            "note": uniqueness.note,
            "groups": {
                method.value: [
                    {
                        "numeric": grp.numeric,
                        "word": grp.word,
                        "students": list(grp.students),
                        "distinct_feedback": grp.distinct_feedback,
                    }
                    for grp in groups
                ]
                for method, groups in uniqueness.groups.items()
            },
        }
    return json.dumps(document, indent=2) + "\n"


def render_uniqueness(summary: UniquenessSummary) -> str:
    lines = ["uniqueness summary", f"note: {summary.note}"]
    for method, groups in summary.groups.items():
        title = _METHOD_TITLES[method]
        if not groups:
            lines.append(f"{title}: all recommendations unique")
            continue
        lines.append(f"{title}: {len(groups)} duplicate group(s)")
        for grp in groups:
            lines.append(
                f"  ({grp.numeric}, {grp.word}) shared by {len(grp.students)} students "
                f"[{', '.join(grp.students)}] "
                f"({grp.distinct_feedback} distinct feedback vectors)"
            )
    return "\n".join(lines) + "\n"


def render_ranking(ranking, method: Method) -> str:
    title = _METHOD_TITLES[Method(method)]
    lines = [f"ranking by {title}"]
    for position, (student_id, score) in enumerate(ranking, start=1):
        lines.append(f"{position:3d}. student {student_id:8s} score {score:.4f}")
    return "\n".join(lines) + "\n"
