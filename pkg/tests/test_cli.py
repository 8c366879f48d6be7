"""End-to-end command tests driven through run() in process."""

import json

import pytest

from gpfree.checks import CheckResult
from gpfree.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr().out
    return code, out


def invoke_json(capsys, *argv):
    code, out = invoke(capsys, *argv)
    return code, json.loads(out)


class TestCount:
    def test_single_norm(self, capsys):
        code, payload = invoke_json(capsys, "count", "--norm", "7")
        assert code == 0
        assert payload["count"] == 192
        assert payload["norm"] == 7
        assert payload["provenance"] == "odd-divisor-formula"

    def test_upto(self, capsys):
        code, payload = invoke_json(capsys, "count", "--upto", "100")
        assert code == 0
        assert payload["total"] == 99336

    def test_table_json(self, capsys):
        code, payload = invoke_json(capsys, "count", "--table", "3")
        assert code == 0
        assert payload["rows"] == [
            {"norm": 1, "count": 24, "cumulative": 24},
            {"norm": 2, "count": 24, "cumulative": 48},
            {"norm": 3, "count": 96, "cumulative": 144},
        ]

    def test_table_csv(self, capsys):
        code, out = invoke(capsys, "count", "--table", "3", "--emit", "csv")
        assert code == 0
        assert out == "norm,count,cumulative\n1,24,24\n2,24,48\n3,96,144\n"

    def test_modes_mutually_exclusive(self, capsys):
        with pytest.raises(SystemExit) as exc:
            run(["count", "--norm", "3", "--upto", "5"])
        assert exc.value.code == 2


class TestEnumerate:
    def test_json(self, capsys):
        code, payload = invoke_json(capsys, "enumerate", "--norm", "2")
        assert code == 0
        assert payload["count"] == 24
        assert len(payload["elements"]) == 24
        assert payload["elements"][0] == "(-2,-2,0,0)/2"

    def test_text(self, capsys):
        code, out = invoke(capsys, "enumerate", "--norm", "1", "--emit", "text")
        assert code == 0
        lines = out.strip().split("\n")
        assert len(lines) == 24
        assert "(1,1,1,1)/2" in lines


class TestBounds:
    def test_default_terms(self, capsys):
        code, payload = invoke_json(capsys, "bounds")
        assert code == 0
        assert payload["lower"]["rational"] == "17665627/18662400"
        assert payload["upper"]["rational"] == "20/21"
        assert payload["lower"]["decimal"].startswith("0.9465892")
        assert payload["terms"] == "inf"

    def test_two_terms(self, capsys):
        code, payload = invoke_json(capsys, "bounds", "--terms", "2")
        assert code == 0
        assert payload["upper"]["rational"] == "3901/4096"

    def test_deterministic_bytes(self, capsys):
        _, first = invoke(capsys, "bounds")
        _, second = invoke(capsys, "bounds")
        assert first == second


class TestRankin:
    def test_small_truncation(self, capsys):
        code, payload = invoke_json(
            capsys, "rankin", "--max-prime", "100", "--max-exponent", "12"
        )
        assert code == 0
        assert payload["value"].startswith("0.7726480999")
        assert payload["monotone_direction"] == "over"
        assert payload["truncation"] == {"max_exponent": 12, "max_prime": 100}


class TestAnnuli:
    def test_passes_at_block_size(self, capsys):
        code, payload = invoke_json(capsys, "annuli-check", "--max-norm", "2304")
        assert code == 0
        assert payload["progression_free"] is True


class TestGreedyHur:
    def test_json_shape(self, capsys):
        code, payload = invoke_json(capsys, "greedy-hur", "--max-norm", "8")
        assert code == 0
        total_excluded = len(payload["excluded"])
        assert payload["included_total"] + total_excluded == 624
        assert payload["included_per_norm"]["1"][0] == "(-2,0,0,0)/2"
        witness = payload["excluded"][0]["witness"]
        assert set(witness) == {"a", "b", "ratio"}

    def test_csv_header(self, capsys):
        code, out = invoke(capsys, "greedy-hur", "--max-norm", "4", "--emit", "csv")
        assert code == 0
        assert out.startswith("element,norm,status,witness_a,witness_b,witness_ratio\n")
        rows = out.strip().split("\n")[1:]
        assert len(rows) == 168


class TestFreegroup:
    def test_greedy_words(self, capsys):
        code, payload = invoke_json(capsys, "freegroup", "greedy", "--max-len", "6")
        assert code == 0
        assert payload["included"] == ["I", "xy", "yxyx", "xyxyxy"]
        assert payload["count"] == 4

    def test_density(self, capsys):
        code, payload = invoke_json(capsys, "freegroup", "density", "--n", "1")
        assert code == 0
        assert payload["integers"]["rational"] == "4/7"
        assert payload["words"]["rational"] == "4/13"

    def test_witness_excluded(self, capsys):
        code, payload = invoke_json(capsys, "freegroup", "witness", "--n", "95")
        assert code == 0
        assert payload["member"] is False
        assert payload["ternary"] == "10112"
        assert payload["witness"]["a"] == 55
        assert payload["witness"]["b"] == 75
        assert payload["witness"]["ratio"] == 20

    def test_witness_member(self, capsys):
        code, payload = invoke_json(capsys, "freegroup", "witness", "--n", "-6")
        assert code == 0
        assert payload["member"] is True
        assert payload["witness"] is None


class TestOutputTargets:
    def test_output_flag_writes_file(self, tmp_path, capsys):
        target = tmp_path / "bounds.json"
        code = run(["--output", str(target), "bounds"])
        assert code == 0
        assert capsys.readouterr().out == ""
        assert json.loads(target.read_text())["upper"]["rational"] == "20/21"

    def test_output_dir_env(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("GPFREE_OUTPUT_DIR", str(tmp_path))
        code = run(["freegroup", "density", "--n", "0"])
        assert code == 0
        assert capsys.readouterr().out == ""
        written = tmp_path / "freegroup-density.json"
        assert json.loads(written.read_text())["integers"]["rational"] == "2/3"


class TestVerifyAll:
    def test_reports_and_exit_code(self, capsys, monkeypatch):
        fake = [
            CheckResult("alpha", True, "fine", 0.01),
            CheckResult("beta-long-name", False, "broke", 0.02),
        ]
        monkeypatch.setattr("gpfree.cli.run_checks", lambda quick: fake)
        code, out = invoke(capsys, "verify-all")
        assert code == 1
        lines = out.strip().split("\n")
        assert lines[0].startswith("PASS alpha")
        assert lines[1].startswith("FAIL beta-long-name")
        assert lines[-1] == "1/2 checks passed"

    def test_all_green_exits_zero(self, capsys, monkeypatch):
        fake = [CheckResult("alpha", True, "fine", 0.01)]
        monkeypatch.setattr("gpfree.cli.run_checks", lambda quick: fake)
        code, out = invoke(capsys, "verify-all")
        assert code == 0
        assert out.strip().split("\n")[-1] == "1/1 checks passed"


class TestParsing:
    def test_missing_command(self):
        with pytest.raises(SystemExit) as exc:
            run([])
        assert exc.value.code == 2

    def test_unknown_command(self):
        with pytest.raises(SystemExit) as exc:
            run(["no-such-thing"])
        assert exc.value.code == 2
