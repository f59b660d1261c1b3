"""CLI contract tests: exit codes, exact serialisation, determinism."""

import csv
import io
import json
from fractions import Fraction

import pytest

import multsidon.pair_sidon
from multsidon.cli import main
from multsidon.rational import format_rational, parse_rational, truncated_decimal


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


class TestRationalHelpers:
    def test_format_includes_unit_denominator(self):
        assert format_rational(Fraction(1)) == "1/1"
        assert format_rational(Fraction(2, 3)) == "2/3"

    def test_parse_roundtrip(self):
        for value in (Fraction(2, 3), Fraction(125, 288), Fraction(7)):
            assert parse_rational(format_rational(value)) == value

    def test_truncation(self):
        assert truncated_decimal(Fraction(2, 3), 4) == "0.6666"
        assert truncated_decimal(Fraction(1, 4), 2) == "0.25"
        assert truncated_decimal(Fraction(5), 0) == "5"
        assert truncated_decimal(Fraction(1, 1000), 2) == "0.00"


class TestPairDensity:
    def test_double_free(self, capsys):
        report = run_json(capsys, "pair-density", "--a", "1", "--b", "2")
        assert report["density"] == "2/3"
        assert report["g"] == 1

    def test_two_three(self, capsys):
        report = run_json(capsys, "pair-density", "--a", "2", "--b", "3")
        assert report["density"] == "3/4"
        assert parse_rational(report["density"]) == Fraction(3, 4)

    def test_equal_pair_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "pair-density", "--a", "3", "--b", "3")
        assert code == 2
        assert err


class TestPairConstruct:
    def test_cardinality(self, capsys):
        report = run_json(capsys, "pair-construct", "--a", "2", "--b", "3", "--n", "10")
        assert report["cardinality"] == 8
        assert report["members"] == [1, 2, 4, 5, 7, 8, 9, 10]

    def test_verify_reduced_pair(self, capsys):
        report = run_json(
            capsys, "pair-construct", "--a", "2", "--b", "4", "--n", "10", "--verify"
        )
        assert report["verified"] is True
        other = run_json(capsys, "pair-construct", "--a", "1", "--b", "2", "--n", "10")
        assert report["members"] == other["members"]

    def test_zero_n_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["pair-construct", "--a", "2", "--b", "3", "--n", "0"])
        assert exc.value.code == 2

    def test_broken_invariant_exits_3(self, capsys, monkeypatch):
        monkeypatch.setattr(multsidon.pair_sidon, "path_alpha", lambda d: -1)
        code, _, err = run_cli(
            capsys, "pair-construct", "--a", "2", "--b", "3", "--n", "10", "--verify"
        )
        assert code == 3
        assert "verification failed" in err

    def test_plain_format_reports_cardinality(self, capsys):
        code, out, _ = run_cli(
            capsys, "pair-construct", "--a", "2", "--b", "3", "--n", "10",
            "--format", "plain",
        )
        assert code == 0
        assert "cardinality 8" in out


class TestTripleDensity:
    def test_certified_two_three_five(self, capsys):
        report = run_json(
            capsys, "triple-density", "--a", "2", "--b", "3", "--c", "5",
            "--eps", "5e-5",
        )
        lower = parse_rational(report["lower"])
        upper = parse_rational(report["upper"])
        assert lower <= upper <= lower + Fraction(1, 20000)
        assert parse_rational(report["delta_complete"]) == Fraction(125, 288)
        assert upper - lower == parse_rational(report["tail_bound"])

    def test_converge_mode(self, capsys):
        report = run_json(
            capsys, "triple-density", "--a", "2", "--b", "3", "--c", "5",
            "--mode", "converge", "--digits", "4",
        )
        assert report["decimal"] == "0.7292"
        assert report["d"] >= 1

    def test_forced_cutoff(self, capsys):
        report = run_json(
            capsys, "triple-density", "--a", "2", "--b", "3", "--c", "5", "--d", "8"
        )
        assert report["d"] == 8

    def test_non_coprime_exits_2(self, capsys):
        code, _, err = run_cli(
            capsys, "triple-density", "--a", "2", "--b", "4", "--c", "5",
            "--eps", "1e-3",
        )
        assert code == 2
        assert err

    def test_certified_without_eps_exits_2(self, capsys):
        code, _, _ = run_cli(
            capsys, "triple-density", "--a", "2", "--b", "3", "--c", "5"
        )
        assert code == 2


class TestTripleTable:
    def test_rows_and_values(self, capsys):
        code, out, _ = run_cli(capsys, "triple-table", "--format", "csv")
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 10
        by_triple = {(int(r["a"]), int(r["b"]), int(r["c"])): r for r in rows}
        assert by_triple[(2, 5, 7)]["estimate"] == "0.8235"
        assert by_triple[(3, 5, 8)]["estimate"] == "0.8212"
        assert by_triple[(2, 5, 9)]["estimate"] == "0.8187"
        for row in rows:
            lower = parse_rational(row["lower"])
            upper = parse_rational(row["upper"])
            assert upper - lower <= Fraction(1, 20000)

    def test_byte_identical_reruns(self, capsys):
        _, first, _ = run_cli(capsys, "triple-table", "--format", "json")
        _, second, _ = run_cli(capsys, "triple-table", "--format", "json")
        assert first == second


class TestEmpirical:
    def test_n_one(self, capsys):
        report = run_json(
            capsys, "empirical", "--a", "2", "--b", "3", "--c", "5", "--n", "1"
        )
        assert report["ratio"] == "1/1"

    def test_verified_run(self, capsys):
        report = run_json(
            capsys, "empirical", "--a", "2", "--b", "3", "--c", "5",
            "--n", "1000", "--verify-upto", "5000",
        )
        assert report["verified"] is True
        assert report["alpha"] == 728
        assert parse_rational(report["ratio"]) == Fraction(728, 1000)


class TestCheckSet:
    def write(self, tmp_path, lines):
        path = tmp_path / "set.txt"
        path.write_text("".join(f"{line}\n" for line in lines), encoding="ascii")
        return str(path)

    def test_valid_set(self, capsys, tmp_path):
        path = self.write(tmp_path, [1, 4, 9])
        report = run_json(capsys, "check-set", "--A", "2", "--B", "3,5",
                          "--set-file", path)
        assert report["multiplicative"] is True
        assert report["witness"] is None

    def test_violation(self, capsys, tmp_path):
        path = self.write(tmp_path, [3, 2])
        report = run_json(capsys, "check-set", "--A", "2", "--B", "3,5",
                          "--set-file", path)
        assert report["multiplicative"] is False
        assert report["witness"] == {"a": 2, "b": 3, "x": 3, "y": 2}

    def test_empty_file(self, capsys, tmp_path):
        path = self.write(tmp_path, [])
        report = run_json(capsys, "check-set", "--A", "2", "--B", "3,5",
                          "--set-file", path)
        assert report["multiplicative"] is True

    def test_malformed_line_exits_2(self, capsys, tmp_path):
        path = self.write(tmp_path, [1, "noise", 9])
        code, _, err = run_cli(capsys, "check-set", "--A", "2", "--B", "3,5",
                               "--set-file", path)
        assert code == 2
        assert "noise" in err

    def test_nonpositive_value_exits_2(self, capsys, tmp_path):
        path = self.write(tmp_path, [1, 0])
        code, _, _ = run_cli(capsys, "check-set", "--A", "2", "--B", "3,5",
                             "--set-file", path)
        assert code == 2

    def test_missing_file_exits_2(self, capsys, tmp_path):
        code, _, _ = run_cli(capsys, "check-set", "--A", "2", "--B", "3,5",
                             "--set-file", str(tmp_path / "missing.txt"))
        assert code == 2


class TestJsonRoundTrip:
    def test_every_rational_field_parses_back(self, capsys):
        report = run_json(
            capsys, "triple-density", "--a", "3", "--b", "5", "--c", "7",
            "--eps", "1/1000",
        )
        for key in ("eps", "delta_complete", "delta_small", "tail_bound",
                    "lower", "upper"):
            value = parse_rational(report[key])
            assert format_rational(value) == report[key]
