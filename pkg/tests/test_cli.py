import json

import pytest

from cwwkit.cli import main
from cwwkit.codebook import default_feedback_path, dumps_codebook


@pytest.fixture()
def sample_feedback(tmp_path):
    path = tmp_path / "feedback.csv"
    path.write_text(default_feedback_path().read_text("utf-8"))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCodebookValidate:
    def test_default_codebook_passes(self, capsys):
        code, out, _ = run(capsys, "codebook", "validate")
        assert code == 0
        assert "all entries pass" in out

    def test_zero_tolerance_fails(self, capsys):
        code, out, _ = run(capsys, "codebook", "validate", "--tolerance", "0")
        assert code == 2
        assert "FAIL" in out

    def test_bad_height_reported(self, capsys, tmp_path, codebook):
        lines = dumps_codebook(codebook).splitlines()
        cells = lines[2].split(",")
        cells[11] = "1.5"  # lower-bound height of the second word
        lines[2] = ",".join(cells)
        path = tmp_path / "broken.csv"
        path.write_text("\n".join(lines) + "\n")
        code, _, err = run(capsys, "codebook", "validate", "--codebook", str(path))
        assert code == 2
        assert "height exceeds 1" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "codebook", "validate", "--codebook", "/no/such.csv")
        assert code == 1
        assert "not found" in err


class TestEvaluate:
    def test_default_run(self, capsys, sample_feedback):
        code, out, _ = run(capsys, "evaluate", "--feedback", sample_feedback)
        assert code == 0
        assert out.splitlines()[0].startswith("student")
        assert len(out.splitlines()) == 26

    def test_builtin_sample_is_default(self, capsys):
        code, out, _ = run(capsys, "evaluate")
        assert code == 0
        assert len(out.splitlines()) == 26

    def test_single_method_columns(self, capsys, sample_feedback):
        code, out, _ = run(capsys, "evaluate", "--feedback", sample_feedback,
                           "--methods", "perceptual", "--format", "csv")
        assert code == 0
        header = out.splitlines()[0].split(",")
        assert "perceptual_numeric" in header
        assert "symbolic_numeric" not in header

    def test_unknown_method_is_usage_error(self, capsys, sample_feedback):
        code, _, err = run(capsys, "evaluate", "--feedback", sample_feedback,
                           "--methods", "bogus")
        assert code == 1
        assert "unknown method" in err

    def test_byte_identical_runs(self, capsys, sample_feedback):
        _, first, _ = run(capsys, "evaluate", "--feedback", sample_feedback,
                          "--format", "json")
        _, second, _ = run(capsys, "evaluate", "--feedback", sample_feedback,
                           "--format", "json")
        assert first == second

    def test_coarse_grid_is_not_an_error(self, capsys, sample_feedback):
        code, out, _ = run(capsys, "evaluate", "--feedback", sample_feedback,
                           "--grid", "11")
        assert code == 0
        assert len(out.splitlines()) == 26

    def test_bad_word_sets_data_exit(self, capsys, tmp_path):
        path = tmp_path / "feedback.csv"
        lines = default_feedback_path().read_text("utf-8").splitlines()
        lines[1] = "1,Tiny,SLA,AM,PM"
        path.write_text("\n".join(lines) + "\n")
        code, out, _ = run(capsys, "evaluate", "--feedback", str(path))
        assert code == 2
        assert "failed" in out

    def test_out_file(self, capsys, tmp_path, sample_feedback):
        out_path = tmp_path / "report.json"
        code, out, _ = run(capsys, "evaluate", "--feedback", sample_feedback,
                           "--format", "json", "--out", str(out_path))
        assert code == 0
        assert out == ""
        data = json.loads(out_path.read_text())
        assert len(data["rows"]) == 25

    def test_verbose_precision(self, capsys, sample_feedback):
        code, out, _ = run(capsys, "evaluate", "--feedback", sample_feedback,
                           "--verbose-precision")
        assert code == 0
        assert "4.963" in out

    def test_missing_feedback_file(self, capsys):
        code, _, err = run(capsys, "evaluate", "--feedback", "/no/such.csv")
        assert code == 1
        assert "not found" in err

    def test_env_var_codebook(self, capsys, sample_feedback, tmp_path, monkeypatch, codebook):
        path = tmp_path / "cb.csv"
        path.write_text(dumps_codebook(codebook))
        monkeypatch.setenv("CWWKIT_CODEBOOK", str(path))
        code, out, _ = run(capsys, "evaluate", "--feedback", sample_feedback)
        assert code == 0
        monkeypatch.setenv("CWWKIT_CODEBOOK", "/no/such.csv")
        code, _, err = run(capsys, "evaluate", "--feedback", sample_feedback)
        assert code == 1
        assert "not found" in err


class TestRank:
    def test_perceptual_ranking(self, capsys, sample_feedback):
        code, out, _ = run(capsys, "rank", "--feedback", sample_feedback,
                           "--method", "perceptual")
        assert code == 0
        assert out.splitlines()[1].startswith("  1. student 3")

    def test_single_student(self, capsys, tmp_path):
        path = tmp_path / "one.csv"
        lines = default_feedback_path().read_text("utf-8").splitlines()
        path.write_text("\n".join(lines[:2]) + "\n")
        code, out, _ = run(capsys, "rank", "--feedback", str(path),
                           "--method", "symbolic")
        assert code == 0
        assert len(out.splitlines()) == 2

    def test_bogus_method(self, capsys, sample_feedback):
        code, _, err = run(capsys, "rank", "--feedback", sample_feedback,
                           "--method", "bogus")
        assert code == 1
        assert "unknown method" in err


class TestCompare:
    def test_appends_uniqueness(self, capsys, sample_feedback):
        code, out, _ = run(capsys, "compare", "--feedback", sample_feedback)
        assert code == 0
        assert "uniqueness summary" in out
        assert "shared by 17 students" in out

    def test_json_compare(self, capsys, sample_feedback):
        code, out, _ = run(capsys, "compare", "--feedback", sample_feedback,
                           "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert "uniqueness" in data


class TestUsage:
    def test_no_arguments_is_usage_error(self, capsys):
        code, _, err = run(capsys, )
        assert code == 1

    def test_unknown_subcommand(self, capsys):
        code, _, _ = run(capsys, "frobnicate")
        assert code == 1
