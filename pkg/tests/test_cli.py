"""Command-line interface: dispatch, outputs, exit codes, determinism."""

import json

import numpy as np
import pytest

from mvql import cli, hilbert, propfunctions
from mvql.cli import run
from mvql.errors import NumericRange
from mvql.propfunctions import ConditionResult, ConditionsReport


@pytest.fixture()
def proj_file(tmp_path):
    path = tmp_path / "proj.json"
    path.write_text(json.dumps({"dim": 2, "matrix": [[[1, 0], [0, 0]], [[0, 0], [0, 0]]]}))
    return str(path)


@pytest.fixture()
def proj_file_other(tmp_path):
    path = tmp_path / "proj2.json"
    path.write_text(json.dumps({"dim": 2, "matrix": [[[0, 0], [0, 0]], [[0, 0], [1, 0]]]}))
    return str(path)


@pytest.fixture()
def state_file(tmp_path):
    amp = 1 / np.sqrt(2)
    path = tmp_path / "state.json"
    path.write_text(json.dumps({"dim": 2, "amplitudes": [[amp, 0], [amp, 0]]}))
    return str(path)


@pytest.fixture()
def assign_file(tmp_path):
    path = tmp_path / "assign.json"
    path.write_text(json.dumps({"atoms": {"p": "1/2"}}))
    return str(path)


class TestEval:
    def test_excluded_middle(self, capsys, assign_file):
        assert run(["eval", "p | ~p", "--assign", assign_file]) == 0
        assert capsys.readouterr().out == "1 = 1\n"

    def test_fractional_result(self, capsys, assign_file):
        assert run(["eval", r"p /\ ~p", "--assign", assign_file]) == 0
        assert capsys.readouterr().out == "1/2 = 0.5\n"

    def test_json_output(self, capsys, assign_file):
        assert run(["eval", "~p", "--assign", assign_file, "--json"]) == 0
        assert json.loads(capsys.readouterr().out) == {"value": "1/2", "decimal": 0.5}

    def test_formula_file(self, capsys, tmp_path, assign_file):
        formula_path = tmp_path / "f.txt"
        formula_path.write_text("p | ~p\n")
        assert run(["eval", "--formula-file", str(formula_path), "--assign", assign_file]) == 0
        assert capsys.readouterr().out.startswith("1")

    def test_formula_argument_xor_file(self, capsys, assign_file, tmp_path):
        formula_path = tmp_path / "f.txt"
        formula_path.write_text("p")
        assert run(["eval"]) == 1
        assert run(["eval", "p", "--formula-file", str(formula_path), "--assign", assign_file]) == 1

    def test_no_assignment_needed_for_closed_formula(self, capsys):
        assert run(["eval", "V ^ V ^ V ^ F"]) == 0
        assert capsys.readouterr().out == "1 = 1\n"

    def test_parse_error_exit_code_and_stream(self, capsys):
        assert run(["eval", "p &"]) == 1
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "1:4" in captured.err

    def test_unbound_atom(self, capsys):
        assert run(["eval", "p & q"]) == 1
        assert "not bound" in capsys.readouterr().err


class TestLattice:
    def test_neg(self, capsys, proj_file):
        assert run(["lattice", "neg", proj_file]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["matrix"][1][1] == [1.0, 0.0]

    def test_meet_join(self, capsys, proj_file, proj_file_other):
        assert run(["lattice", "join", proj_file, proj_file_other]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["matrix"][0][0] == [1.0, 0.0]
        assert data["matrix"][1][1] == [1.0, 0.0]
        assert run(["lattice", "meet", proj_file, proj_file_other]) == 0
        data = json.loads(capsys.readouterr().out)
        assert all(entry == [0.0, 0.0] for row in data["matrix"] for entry in row)

    def test_leq_and_exclusive(self, capsys, proj_file, proj_file_other):
        assert run(["lattice", "leq", proj_file, proj_file]) == 0
        assert capsys.readouterr().out == "true\n"
        assert run(["lattice", "exclusive", proj_file, proj_file_other, "--json"]) == 0
        assert json.loads(capsys.readouterr().out) == {"result": True}

    def test_arity_errors(self, capsys, proj_file):
        assert run(["lattice", "neg", proj_file, proj_file]) == 1
        assert run(["lattice", "meet", proj_file]) == 1

    def test_bad_file(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"dim": 2, "matrix": [[[0, 0], [1, 0]], [[0, 0], [0, 0]]]}))
        assert run(["lattice", "neg", str(bad)]) == 1
        assert "Hermitian" in capsys.readouterr().err


class TestBorn:
    def test_value(self, capsys, proj_file, state_file):
        assert run(["born", proj_file, state_file]) == 0
        assert abs(float(capsys.readouterr().out) - 0.5) <= 1e-12

    def test_json(self, capsys, proj_file, state_file):
        assert run(["born", proj_file, state_file, "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert abs(data["value"] - 0.5) <= 1e-12

    def test_missing_file(self, capsys, state_file):
        assert run(["born", "/nonexistent.json", state_file]) == 1


class TestGhz:
    def test_human_output(self, capsys):
        assert run(["ghz"]) == 0
        out = capsys.readouterr().out
        assert "0 of 64" in out
        assert "X1=1/2" in out

    def test_json_output(self, capsys):
        assert run(["ghz", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["classical_solutions"] == 0
        assert data["degrees"]["Y3"] == "1/2"
        assert data["parity"] == {"lhs_product": 1, "rhs_product": -1}

    def test_phase_flag(self, capsys):
        assert run(["ghz", "--phase", "+1", "--json"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["expectations"]["XXX"] == pytest.approx(1.0, abs=1e-9)

    def test_byte_identical_json(self, capsys):
        run(["ghz", "--json"])
        first = capsys.readouterr().out
        run(["ghz", "--json"])
        second = capsys.readouterr().out
        assert first == second


class TestVerifyTheorem:
    def test_passing_run(self, capsys):
        assert run(["verify-theorem", "--dim", "2", "--states", "100",
                    "--families", "30", "--seed", "7"]) == 0
        out = capsys.readouterr().out
        assert out.count("PASS") == 4

    def test_documented_invocation(self, capsys):
        assert run(["verify-theorem", "--dim", "4", "--states", "1000",
                    "--families", "200", "--seed", "7"]) == 0
        assert capsys.readouterr().out.count("PASS") == 4

    def test_json_deterministic(self, capsys):
        argv = ["verify-theorem", "--dim", "3", "--states", "50",
                "--families", "20", "--seed", "1", "--json"]
        assert run(argv) == 0
        first = capsys.readouterr().out
        assert run(argv) == 0
        assert capsys.readouterr().out == first
        assert json.loads(first)["condition1"]["passed"] is True

    def test_failing_condition_exits_three(self, capsys, monkeypatch):
        failing = ConditionsReport(
            dim=2, n_state_samples=1, n_family_samples=1, seed=0,
            condition1=ConditionResult(True, 0.0),
            condition2=ConditionResult(False, 1.0),
            condition3=ConditionResult(True, 0.0),
            condition4=ConditionResult(True, 0.0),
        )
        monkeypatch.setattr(propfunctions, "verify_conditions", lambda *a, **k: failing)
        assert run(["verify-theorem", "--dim", "2"]) == 3
        assert "FAIL" in capsys.readouterr().out

    def test_bad_arguments(self, capsys):
        assert run(["verify-theorem", "--dim", "0"]) == 1
        assert run(["verify-theorem"]) == 1  # --dim is required


class TestPlumbing:
    def test_usage_error_exit_one(self, capsys):
        assert run([]) == 1
        assert run(["no-such-command"]) == 1
        assert capsys.readouterr().out == ""

    def test_out_file(self, tmp_path, capsys, assign_file):
        out_path = tmp_path / "result.txt"
        assert run(["eval", "p | ~p", "--assign", assign_file, "--out", str(out_path)]) == 0
        assert capsys.readouterr().out == ""
        assert out_path.read_text() == "1 = 1\n"

    def test_numeric_failure_exit_two(self, capsys, monkeypatch, proj_file, state_file):
        def explode(*args, **kwargs):
            raise NumericRange("synthetic failure")

        monkeypatch.setattr(hilbert, "born_value", explode)
        monkeypatch.setattr(cli.hilbert, "born_value", explode)
        assert run(["born", proj_file, state_file]) == 2
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "numerical failure" in captured.err

    def test_tol_override_applies_globally(self, proj_file, state_file, capsys):
        original = hilbert.get_atol()
        try:
            # A loose tolerance lets a non-idempotent matrix through the
            # projector check; the born value then stays clamped.
            assert run(["born", proj_file, state_file, "--tol", "0.5"]) == 0
            assert hilbert.get_atol() == 0.5
        finally:
            hilbert.set_atol(original)
