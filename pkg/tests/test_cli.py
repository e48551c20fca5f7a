"""Tests for the `srt` command-line interface: exit codes, output formats,
configuration loading, and byte-exact reference invocations."""
import json
import os
import subprocess

import pytest

from srt.cli import EXIT_CONTRADICTION, EXIT_OK, EXIT_USAGE, dispatch


@pytest.fixture(autouse=True)
def clean_config(monkeypatch):
    monkeypatch.delenv("SRT_CONFIG", raising=False)


def run_cli(capsys, *argv):
    code = dispatch(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestReferenceInvocations:
    """The documented console-script invocations, byte for byte."""

    def _run(self, *argv):
        env = {k: v for k, v in os.environ.items() if k != "SRT_CONFIG"}
        return subprocess.run(
            ["srt", *argv], capture_output=True, text=True, env=env
        )

    def test_tail_radius(self):
        out = self._run("tail-radius", "--p", "7", "--nu", "2", "--case", "generic")
        assert out.returncode == 0
        assert out.stdout == '{"v_rho":"13/9","v_e":"13/18"}\n'

    def test_enum_tails(self):
        out = self._run("enum-tails", "--tau", "2")
        assert out.returncode == 0
        assert out.stdout == '[{"prim":["1/2","1/2"]}]\n'

    def test_bad_config_exits_1_with_remedy(self, tmp_path):
        bad = tmp_path / "cfg.json"
        bad.write_text("{not json")
        env = dict(os.environ, SRT_CONFIG=str(bad))
        out = subprocess.run(
            ["srt", "tail-radius", "--p", "7", "--nu", "2", "--case", "generic"],
            capture_output=True,
            text=True,
            env=env,
        )
        assert out.returncode == 1
        assert "SRT_CONFIG" in out.stderr
        assert "point it at a JSON object" in out.stderr


class TestExitCodes:
    def test_affirmative_is_zero(self, capsys):
        code, out, _ = run_cli(
            capsys, "split-check", "--p", "5", "--level", "2",
            "--vals", '["9/4","10","10","10","10"]',
        )
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["verdict"] == "SplitsWithConductor"
        assert report["conductor"] == "1"

    def test_contradiction_is_two(self, capsys):
        code, out, _ = run_cli(
            capsys, "split-check", "--p", "5", "--level", "2",
            "--vals", '["1","10","10","10","10"]',
        )
        assert code == EXIT_CONTRADICTION
        assert json.loads(out)["verdict"] == "ObstructedByConditionI"

    def test_usage_error_is_one(self, capsys):
        code, _, err = run_cli(
            capsys, "split-check", "--p", "5", "--level", "2", "--vals", "oops"
        )
        assert code == EXIT_USAGE
        assert "JSON array" in err

    def test_library_error_is_one(self, capsys):
        code, _, err = run_cli(capsys, "wild-monodromy", "--q", "7", "--p", "5")
        assert code == EXIT_USAGE
        assert "q^2 - 1" in err

    def test_unknown_flag_is_one(self, capsys):
        assert dispatch(["tail-radius", "--p", "7", "--bogus", "1"]) == EXIT_USAGE
        capsys.readouterr()


class TestConfig:
    def test_valid_config_sets_format(self, capsys, tmp_path, monkeypatch):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"format": "text"}))
        monkeypatch.setenv("SRT_CONFIG", str(cfg))
        code, out, _ = run_cli(
            capsys, "tail-radius", "--p", "7", "--nu", "2", "--case", "generic"
        )
        assert code == EXIT_OK
        assert out == "v_rho: 13/9\nv_e: 13/18\n"

    def test_flag_overrides_config(self, capsys, tmp_path, monkeypatch):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"format": "text"}))
        monkeypatch.setenv("SRT_CONFIG", str(cfg))
        code, out, _ = run_cli(
            capsys, "--format", "json",
            "tail-radius", "--p", "7", "--nu", "2", "--case", "generic",
        )
        assert code == EXIT_OK
        assert json.loads(out) == {"v_rho": "13/9", "v_e": "13/18"}

    def test_invalid_format_value(self, capsys, tmp_path, monkeypatch):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"format": "xml"}))
        monkeypatch.setenv("SRT_CONFIG", str(cfg))
        code, _, err = run_cli(
            capsys, "tail-radius", "--p", "7", "--nu", "2", "--case", "generic"
        )
        assert code == EXIT_USAGE
        assert "json" in err and "text" in err

    def test_invalid_numeric_entry(self, capsys, tmp_path, monkeypatch):
        cfg = tmp_path / "cfg.json"
        cfg.write_text(json.dumps({"M": 0}))
        monkeypatch.setenv("SRT_CONFIG", str(cfg))
        code, _, err = run_cli(
            capsys, "tail-radius", "--p", "7", "--nu", "2", "--case", "generic"
        )
        assert code == EXIT_USAGE
        assert "positive integer" in err


TREE = {
    "vertices": [
        {"id": "root", "inertia": 2},
        {"id": "tail", "inertia": 0, "tail": "new-etale", "sigma": "3/2"},
    ],
    "edges": [{"parent": "root", "child": "tail", "sigma_eff": "3/2"}],
}


class TestTreeCommands:
    def test_tree_solve(self, capsys, tmp_path):
        path = tmp_path / "tree.json"
        path.write_text(json.dumps(TREE))
        code, out, _ = run_cli(capsys, "tree-solve", "--p", "5", "--tree", str(path))
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["status"] == "Solved"
        assert report["tree"]["edges"][0]["epaisseur"] == "3/2"  # (9/4)/(3/2)

    def test_tree_solve_contradiction(self, capsys, tmp_path):
        bad = json.loads(json.dumps(TREE))
        bad["edges"][0]["epaisseur"] = "1"
        path = tmp_path / "tree.json"
        path.write_text(json.dumps(bad))
        code, out, _ = run_cli(capsys, "tree-solve", "--p", "5", "--tree", str(path))
        assert code == EXIT_CONTRADICTION
        assert json.loads(out)["status"] == "Contradiction"

    def test_tree_check(self, capsys, tmp_path):
        path = tmp_path / "tree.json"
        path.write_text(json.dumps(TREE))
        code, out, _ = run_cli(capsys, "tree-check", "--p", "5", "--tree", str(path))
        report = json.loads(out)
        assert report["problems"] == []
        # single sigma = 3/2 tail violates the global vanishing-cycles identity
        assert report["vanishing_cycles"]["verdict"] == "Violated"
        assert code == EXIT_CONTRADICTION

    def test_missing_tree_file(self, capsys, tmp_path):
        code, _, err = run_cli(
            capsys, "tree-solve", "--p", "5", "--tree", str(tmp_path / "nope.json")
        )
        assert code == EXIT_USAGE
        assert "unreadable" in err


class TestOtherCommands:
    def test_expand_deterministic(self, capsys):
        args = ("expand", "--p", "5", "--nu", "1", "--r", "1", "--s", "2")
        code1, out1, _ = run_cli(capsys, *args)
        code2, out2, _ = run_cli(capsys, *args)
        assert code1 == code2 == EXIT_OK
        assert out1 == out2
        report = json.loads(out1)
        assert report["coefficients"][0] == "-1"
        assert len(report["coefficients"]) == 18  # default T = 3p + 2

    def test_conductor_shape_and_compositum(self, capsys):
        code, out, _ = run_cli(
            capsys, "conductor", "--p", "5", "--nu", "3", "--shape", "kummer-tower"
        )
        assert code == EXIT_OK
        assert json.loads(out) == {"conductor": "2"}
        code, out, _ = run_cli(capsys, "conductor", "--compositum", "1/2,5/4,3/4")
        assert json.loads(out) == {"conductor": "5/4"}

    def test_herbrand_cyclotomic(self, capsys):
        code, out, _ = run_cli(
            capsys, "herbrand", "--p", "5", "--nu", "2",
            "--direction", "psi", "--x", "2",
        )
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["value"] == "24"
        assert report["conductor"] == "1"

    def test_group_criterion(self, capsys):
        code, out, _ = run_cli(
            capsys, "group", "--q", "13", "--p", "3", "--mode", "criterion"
        )
        assert code == EXIT_OK
        report = json.loads(out)
        assert report["generation"]["verdict"] == "Generates"
        assert report["generation"]["order"] == 2184
        assert report["sylow"] == {"order": 3, "cyclic": True, "m_G": 2}

    def test_insep_tails(self, capsys):
        code, out, _ = run_cli(
            capsys, "insep-tails", "--p", "5", "--nu", "3",
            "--case", "a=0", "--extra", "1",
        )
        assert code == EXIT_OK
        report = json.loads(out)
        assert [t["j"] for t in report] == [2, 1]

    def test_tail_center_exceptional(self, capsys):
        code, out, _ = run_cli(
            capsys, "tail-center", "--p", "5", "--nu", "2",
            "--r", "1", "--s", "4", "--case", "a=0",
        )
        assert code == EXIT_OK
        report = json.loads(out)
        assert "terms" in report["center"]  # local field element, not rational

    def test_wild_monodromy_verdict_lowercase(self, capsys):
        code, out, _ = run_cli(capsys, "wild-monodromy", "--q", "251", "--p", "5")
        assert code == EXIT_OK
        assert json.loads(out)["verdict"] == "nontrivial"
