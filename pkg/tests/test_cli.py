"""End-to-end CLI runs: JSON shapes, exit codes, error channels."""

from __future__ import annotations

import json

import pytest

from boolfn.cli import main

MAJ5 = "00000001000101110001011101111111"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestAnalyze:
    def test_sharpness_example(self, capsys):
        code, out, _ = run(capsys, "analyze", "--tt", "00010011")
        assert code == 0
        report = json.loads(out)
        assert report["weight"] == 3
        assert report["nonlinearity"] == 1
        assert report["degree"] == 3
        assert report["anf"] == "x1x2x3 + x1x2 + x2x3"
        assert report["weight_equals_nonlinearity"] == "not-applicable"

    def test_zero_table(self, capsys):
        code, out, _ = run(capsys, "analyze", "--tt", "0000")
        report = json.loads(out)
        assert code == 0
        assert (report["weight"], report["nonlinearity"], report["degree"]) == (0, 0, 0)
        assert report["balanced"] is False
        assert report["max_abs_walsh"] == 4 and report["max_abs_walsh_at"] == 0

    def test_hex_input(self, capsys):
        code, out, _ = run(capsys, "analyze", "--tt", "0x0117177f", "--n", "5")
        assert code == 0
        assert json.loads(out)["weight"] == 16

    def test_variable_count_mismatch(self, capsys):
        code, out, err = run(capsys, "analyze", "--tt", "0x17", "--n", "4")
        assert code == 2 and out == ""
        assert "3 variables, expected 4" in err

    def test_parse_error_names_position(self, capsys):
        code, _, err = run(capsys, "analyze", "--tt", "0120")
        assert code == 2
        assert "position 2" in err

    def test_explicit_format_overrides_sniffing(self, capsys):
        code, _, err = run(capsys, "analyze", "--tt", "0x16", "--format", "binary")
        assert code == 2
        assert "invalid character" in err

    def test_text_mode(self, capsys):
        code, out, _ = run(capsys, "analyze", "--tt", "00010011", "--text")
        assert code == 0
        lines = dict(line.split(": ", 1) for line in out.strip().splitlines())
        assert lines["weight"] == "3" and lines["nonlinearity"] == "1"

    def test_spectrum_flag(self, capsys):
        _, out, _ = run(capsys, "analyze", "--tt", "0110", "--spectrum")
        report = json.loads(out)
        assert report["walsh_spectrum"] == [0, 0, 0, 4]

    def test_consistency_invariant(self, capsys):
        _, out, _ = run(capsys, "analyze", "--tt", MAJ5)
        report = json.loads(out)
        assert report["nonlinearity"] == (1 << (report["n"] - 1)) - report["max_abs_walsh"] // 2


class TestMajority:
    def test_table_output(self, capsys):
        code, out, _ = run(capsys, "majority", "5")
        assert code == 0 and out.strip() == MAJ5

    def test_runlength_output(self, capsys):
        code, out, _ = run(capsys, "majority", "5", "--runlength")
        assert code == 0
        assert out.strip() == "0_7 1 0_3 1 0 1_3 0_3 1 0 1_3 0 1_7"

    def test_report_output(self, capsys):
        code, out, _ = run(capsys, "majority", "6", "--report")
        assert code == 0
        report = json.loads(out)
        assert report["nonlinearity"] == 22
        assert all(item["pass"] for item in report["identities"])

    def test_zero_is_an_error(self, capsys):
        code, out, err = run(capsys, "majority", "0")
        assert code == 2 and out == "" and "error" in err

    def test_runlength_cap(self, capsys):
        code, _, err = run(capsys, "majority", "10", "--runlength")
        assert code == 2 and "1..9" in err

    def test_report_range(self, capsys):
        code, _, err = run(capsys, "majority", "3", "--report")
        assert code == 2 and "4..24" in err


class TestVerify:
    def test_small_sweep(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-k", "6")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 4  # k=4,5,6 plus the summary
        assert all("PASS" in line for line in lines[:3])
        assert "all identities hold" in lines[-1]

    def test_json_stream(self, capsys):
        code, out, _ = run(capsys, "verify", "--max-k", "5", "--json")
        assert code == 0
        lines = [json.loads(line) for line in out.strip().splitlines()]
        assert [rec["k"] for rec in lines[:-1]] == [4, 5]
        assert lines[-1]["summary"]["all_passed"] is True
        assert lines[-1]["summary"]["failed_k"] == []

    def test_low_bound_usage_error(self, capsys):
        code, _, err = run(capsys, "verify", "--max-k", "3")
        assert code == 2 and "4..24" in err


class TestBench:
    def test_reports_timing(self, capsys):
        code, out, _ = run(capsys, "bench", "8", "--reps", "3", "--seed", "1")
        assert code == 0
        report = json.loads(out)
        assert report["n"] == 8 and report["reps"] == 3
        assert 0 <= report["min_seconds"] <= report["median_seconds"] <= report["max_seconds"]

    def test_degenerate_size(self, capsys):
        code, out, _ = run(capsys, "bench", "0")
        assert code == 0
        assert json.loads(out)["median_seconds"] < 0.1

    def test_cap(self, capsys):
        code, _, err = run(capsys, "bench", "31")
        assert code == 2 and "outside 0..30" in err

    def test_reps_guard(self, capsys):
        code, _, err = run(capsys, "bench", "4", "--reps", "0")
        assert code == 2 and "positive" in err


class TestParser:
    def test_missing_subcommand_exits_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_unknown_flag_exits_two(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["analyze", "--tt", "0110", "--bogus"])
        assert exc.value.code == 2
