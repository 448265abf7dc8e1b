import csv
import io
import json

from cwwkit import Method, evaluate_batch, uniqueness_report
from cwwkit.reporting import (render_csv, render_json, render_ranking,
                              render_table, render_uniqueness)
from cwwkit.pipeline import rank_students
from cwwkit.vocabulary import TIME_TAKEN, RawFeedback


def test_table_is_deterministic(full_report):
    assert render_table(full_report) == render_table(full_report)


def test_table_contains_cells(full_report):
    text = render_table(full_report)
    lines = text.splitlines()
    assert lines[0].startswith("student")
    assert len(lines) == 26
    row1 = lines[1].split()
    assert row1[0] == "1"
    assert "{0.25,0.5,0.75}" in row1
    assert "SSA" in row1


def test_table_verbose_full_precision(full_report):
    text = render_table(full_report, verbose=True)
    # full-precision perceptual scores have more than two decimals
    assert "4.963" in text


def test_csv_parses_back(full_report):
    text = render_csv(full_report)
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0][0] == "student_id"
    assert rows[0][-1] == "error"
    assert len(rows) == 26
    header = rows[0]
    assert "perceptual_numeric" in header
    first = dict(zip(header, rows[1]))
    assert first["student_id"] == "1"
    assert first["two_tuple_numeric"] == "2"
    assert first["error"] == ""


def test_csv_flags_failed_rows(sample_rows, codebook):
    bad = RawFeedback("99", {**sample_rows[0].words, TIME_TAKEN: "Tiny"})
    report = evaluate_batch(list(sample_rows) + [bad], cb=codebook)
    rows = list(csv.reader(io.StringIO(render_csv(report))))
    last = dict(zip(rows[0], rows[-1]))
    assert last["student_id"] == "99"
    assert "Tiny" in last["error"]


def test_json_structure(full_report):
    data = json.loads(render_json(full_report))
    assert data["metadata"]["students"] == 25
    assert len(data["rows"]) == 25
    row = data["rows"][0]
    assert row["student_id"] == "1"
    assert row["methods"]["symbolic"]["numeric"] == "2"
    assert row["methods"]["perceptual"]["word"] == "SSA"
    assert "centroid" in row["methods"]["perceptual"]
    assert "centroid_mean" not in row["methods"]["perceptual"]


def test_json_verbose_exposes_full_precision(full_report):
    data = json.loads(render_json(full_report, verbose=True))
    cell = data["rows"][0]["methods"]["perceptual"]
    assert abs(cell["centroid_mean"] - 4.963515) < 1e-4
    assert len(cell["similarities"]) == 5


def test_json_with_uniqueness(full_report):
    summary = uniqueness_report(full_report)
    data = json.loads(render_json(full_report, uniqueness=summary))
    assert "uniqueness" in data
    ep_groups = data["uniqueness"]["groups"]["extension_principle"]
    assert max(len(g["students"]) for g in ep_groups) == 17


def test_uniqueness_text(full_report):
    summary = uniqueness_report(full_report)
    text = render_uniqueness(summary)
    assert "uniqueness summary" in text
    assert "Perceptual: all recommendations unique" in text
    assert "shared by 17 students" in text


def test_ranking_text(full_report):
    ranking = rank_students(full_report, Method.PERCEPTUAL)
    text = render_ranking(ranking, Method.PERCEPTUAL)
    lines = text.splitlines()
    assert lines[0] == "ranking by Perceptual"
    assert lines[1].startswith("  1. student 3")
