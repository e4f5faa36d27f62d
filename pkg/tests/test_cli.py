import json
import math
import subprocess
import sys

import pytest

from mlpoly import config
from mlpoly.cli import run


def _run(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEvalCommands:
    def test_eval_ml_exponential(self, capsys):
        code, out, _ = _run(capsys, "eval-ml", "--alpha", "1", "--z", "1")
        assert code == 0
        payload = json.loads(out)
        assert set(payload.keys()) == {"meta", "data"}
        assert payload["data"]["value"] == pytest.approx(math.e, rel=1e-12)
        assert payload["meta"]["command"] == "eval-ml"

    def test_eval_ml_two_parameter(self, capsys):
        code, out, _ = _run(capsys, "eval-ml", "--alpha", "1", "--beta", "2", "--z", "1")
        assert code == 0
        assert json.loads(out)["data"]["value"] == pytest.approx(math.e - 1.0, rel=1e-12)

    def test_eval_ml_three_parameter(self, capsys):
        code, out, _ = _run(
            capsys, "eval-ml", "--alpha", "0.7", "--beta", "1", "--gamma", "-2", "--z", "0.3"
        )
        assert code == 0
        assert json.loads(out)["data"]["value"] == pytest.approx(
            0.41212544584204520769, rel=1e-12
        )

    def test_eval_fhp(self, capsys):
        code, out, _ = _run(
            capsys, "eval-fhp", "--n", "2", "--alpha", "1", "--x", "1", "--y", "1"
        )
        assert code == 0
        assert json.loads(out)["data"]["value"] == pytest.approx(3.0)

    def test_eval_mlp(self, capsys):
        code, out, _ = _run(
            capsys, "eval-mlp", "--n", "0", "--alpha", "0.5", "--beta", "1",
            "--x", "2", "--y", "3",
        )
        assert code == 0
        assert json.loads(out)["data"]["value"] == pytest.approx(1.0)

    def test_csv_format(self, capsys):
        code, out, _ = _run(
            capsys, "eval-fhp", "--n", "2", "--alpha", "1", "--x", "1", "--y", "1",
            "--format", "csv",
        )
        assert code == 0
        assert out == "value\n3\n"

    def test_fifteen_significant_digits(self, capsys):
        code, out, _ = _run(capsys, "eval-ml", "--alpha", "1", "--z", "1")
        assert code == 0
        value = json.loads(out)["data"]["value"]
        assert f"{value}" == f"{float(format(value, '.15g'))}"

    def test_coefficient_output(self, capsys):
        code, out, _ = _run(
            capsys, "eval-fhp", "--n", "2", "--alpha", "1", "--y", "1", "--coeffs"
        )
        assert code == 0
        coeffs = json.loads(out)["data"]["coefficients"]
        assert coeffs == [{"c": 2.0, "mu": 0.0}, {"c": 1.0, "mu": 2.0}]
        assert [item["mu"] for item in coeffs] == sorted(i["mu"] for i in coeffs)

    def test_coefficient_output_mlp(self, capsys):
        code, out, _ = _run(
            capsys, "eval-mlp", "--n", "1", "--alpha", "0.5", "--beta", "1",
            "--x", "0.0", "--coeffs",
        )
        assert code == 0
        assert json.loads(out)["data"]["coefficients"] == [{"c": 1.0, "mu": 1.0}]

    def test_missing_x_without_coeffs(self, capsys):
        code, _, err = _run(capsys, "eval-fhp", "--n", "2", "--alpha", "1", "--y", "1")
        assert code == 1
        assert "--x" in err

    def test_budget_flag_overrides(self, capsys):
        code, _, err = _run(
            capsys, "eval-ml", "--alpha", "0.5", "--z", "2.0", "--term-budget", "3"
        )
        assert code == 2
        assert "partial_value" in err


class TestExitCodes:
    def test_missing_flag_names_it(self, capsys):
        code, _, err = _run(capsys, "eval-ml", "--alpha", "1")
        assert code == 1
        assert "--z" in err or "z" in err

    def test_validation_error(self, capsys):
        code, _, err = _run(capsys, "eval-fhp", "--n", "2", "--alpha", "1.5",
                            "--x", "1", "--y", "1")
        assert code == 1
        assert "alpha" in err

    def test_nonconvergence_prints_partial(self, capsys):
        code, _, err = _run(capsys, "eval-ml", "--alpha", "0.4", "--z", "-5")
        assert code == 2
        assert "partial_value" in err
        assert "abs_error_estimate" in err


class TestSolve:
    def test_profile_csv(self, capsys):
        code, out, _ = _run(
            capsys, "solve", "--problem", "case-i", "--n", "2", "--a", "0.5",
            "--alpha", "0.5", "--grid-min", "0", "--grid-max", "1",
            "--grid-points", "3", "--t", "0", "--format", "csv",
        )
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "grid,value"
        assert len(lines) == 4
        # at t = 0 the profile is the classical H_2(x, 0.5) = x**2 + 1
        grid_value = dict(line.split(",") for line in lines[1:])
        assert float(grid_value["1"]) == pytest.approx(2.0)

    def test_profile_json_meta(self, capsys):
        code, out, _ = _run(
            capsys, "solve", "--problem", "laguerre-monomial", "--n", "2",
            "--alpha", "0.5", "--beta", "0.7", "--b", "1.0",
            "--grid-var", "t", "--grid-min", "0.1", "--grid-max", "1.0",
            "--grid-points", "4", "--x", "0.8",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["meta"]["problem"] == "laguerre-monomial"
        assert len(payload["data"]["grid"]) == 4
        assert len(payload["data"]["values"]) == 4

    def test_series_initial(self, capsys):
        code, out, _ = _run(
            capsys, "solve", "--problem", "tf-diffusion", "--coeffs", "1,0,2",
            "--alpha", "0.5", "--k", "1.0", "--grid-min", "0", "--grid-max", "1",
            "--grid-points", "2", "--t", "0.5",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["meta"]["coeffs"] == "1,0,2"

    def test_missing_problem_parameter(self, capsys):
        code, _, err = _run(
            capsys, "solve", "--problem", "case-i", "--alpha", "0.5",
            "--grid-min", "0", "--grid-max", "1", "--t", "0.5",
        )
        assert code == 1
        assert "--n" in err

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "profile.csv"
        code, out, _ = _run(
            capsys, "solve", "--problem", "case-ii", "--n", "1", "--a", "0.1",
            "--alpha", "0.5", "--grid-min", "0", "--grid-max", "1",
            "--grid-points", "2", "--t", "0.3", "--format", "csv",
            "--output", str(target),
        )
        assert code == 0
        assert out == ""
        assert target.read_text().startswith("grid,value\n")


class TestVerify:
    def test_all_suites_pass(self, capsys):
        code, out, _ = _run(capsys, "verify", "--suite", "all", "--n-max", "6",
                            "--seed", "42")
        assert code == 0
        assert "passed" in out.strip().split("\n")[-1]
        assert "FAIL" not in out

    def test_single_suite_alias(self, capsys):
        code, out, _ = _run(capsys, "verify", "--suite", "identities",
                            "--n-max", "6", "--seed", "42")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0].startswith("# suites=fhp-identities")
        assert "seed=42" in lines[0]
        assert all(line.startswith(("PASS", "FAIL", "passed")) for line in lines[1:])


class TestConfig:
    def test_config_file_changes_budget(self, capsys, tmp_path):
        cfg = tmp_path / "mlpoly.cfg"
        cfg.write_text("term_budget = 3\n")
        code, _, err = _run(
            capsys, "eval-ml", "--alpha", "0.5", "--z", "2.0", "--config", str(cfg)
        )
        assert code == 2  # three terms cannot converge
        assert "numerical failure" in err

    def test_env_var_config(self, capsys, tmp_path, monkeypatch):
        cfg = tmp_path / "env.cfg"
        cfg.write_text("term_budget = 3\n")
        monkeypatch.setenv("MLPOLY_CONFIG", str(cfg))
        code, _, _ = _run(capsys, "eval-ml", "--alpha", "0.5", "--z", "2.0")
        assert code == 2

    def test_unknown_key_rejected(self, capsys, tmp_path):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text("no_such_key = 1\n")
        code, _, err = _run(
            capsys, "eval-ml", "--alpha", "1", "--z", "1", "--config", str(cfg)
        )
        assert code == 1
        assert "no_such_key" in err


class TestDeterminism:
    def test_verify_byte_identical(self):
        cmd = [sys.executable, "-m", "mlpoly.cli", "verify", "--suite",
               "sheffer-ladder", "--n-max", "6", "--seed", "42"]
        first = subprocess.run(cmd, capture_output=True, text=True)
        second = subprocess.run(cmd, capture_output=True, text=True)
        assert first.returncode == 0 and second.returncode == 0
        assert first.stdout == second.stdout

    def test_table_deterministic(self, capsys):
        args = ("table", "--family", "mlp", "--alpha", "0.5", "--beta", "1.0",
                "--x", "0.5", "--n-max", "4")
        code1, out1, _ = _run(capsys, *args)
        code2, out2, _ = _run(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2
        assert out1.startswith("n,exponent,coefficient\n")
