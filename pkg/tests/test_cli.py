import json
import shutil
import subprocess

import pytest

from lattes_sft import cli


def run(capsys, argv):
    rc = cli.main(argv)
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


class TestVerify:
    def test_ok(self, capsys):
        rc, out, _ = run(capsys, ["verify"])
        assert rc == 0
        assert out.strip().endswith("verify: OK")

    def test_json_mode(self, capsys):
        rc, out, _ = run(capsys, ["--output", "json", "verify"])
        assert rc == 0
        doc = json.loads(out)
        assert doc["status"] == "ok"
        assert all(c["ok"] for c in doc["checks"])

    def test_mismatch_exit_code(self, capsys, monkeypatch):
        monkeypatch.setattr(cli, "_verify_checks", lambda: [("x", "1", "2")])
        rc, out, _ = run(capsys, ["verify"])
        assert rc == 3
        assert "MISMATCH" in out


class TestFunctor:
    def test_worked_example_json(self, capsys):
        rc, out, _ = run(
            capsys,
            ["--output", "json", "functor", "--curve", "4,2,0", "--D", "2",
             "--eps", "0+1*sqrt(2)"],
        )
        assert rc == 0
        doc = json.loads(out)
        assert doc["A"] == [[0, 1], [2, 0]]
        assert doc["cf"] == {"preperiod": [0, 1], "period": [2]}
        assert doc["T"] == [[2, 1], [1, 0]]
        assert doc["zeta"] == {"num": ["1"], "den": ["1", "0", "-2"]}
        assert doc["K0"] == {"rank": 0, "torsion": []}

    def test_without_curve(self, capsys):
        rc, out, _ = run(
            capsys, ["--output", "json", "functor", "--D", "5", "--eps", "0+1*sqrt(5)"]
        )
        assert rc == 0
        assert json.loads(out)["A"] == [[0, 1], [5, 0]]

    def test_precondition_failure_exits_1(self, capsys):
        rc, out, err = run(capsys, ["functor", "--D", "2", "--eps", "1+0*sqrt(2)"])
        assert rc == 1
        assert out == ""
        assert "irrational" in err

    def test_parse_failure_exits_2(self, capsys):
        rc, _, err = run(capsys, ["functor", "--D", "2", "--eps", "garbage"])
        assert rc == 2
        assert "eps" in err or "element" in err

    def test_missing_flag_exits_2(self, capsys):
        assert cli.main(["functor", "--D", "2"]) == 2
        capsys.readouterr()

    def test_determinism(self, capsys):
        argv = ["--output", "json", "functor", "--curve", "4,2,0", "--D", "2",
                "--eps", "0+1*sqrt(2)"]
        _, out1, _ = run(capsys, argv)
        _, out2, _ = run(capsys, argv)
        assert out1 == out2


class TestZeta:
    def test_text(self, capsys):
        rc, out, _ = run(capsys, ["zeta", "--matrix", "0,1;2,0"])
        assert rc == 0
        assert out.strip() == "1/(1-2t^2)"

    def test_json(self, capsys):
        rc, out, _ = run(capsys, ["--output", "json", "zeta", "--matrix", "1,1;1,0"])
        assert rc == 0
        assert json.loads(out)["zeta"]["den"] == ["1", "-1", "-1"]

    def test_negative_entries_rejected(self, capsys):
        rc, _, err = run(capsys, ["zeta", "--matrix", "0,-1;1,0"])
        assert rc == 1
        assert "non-negative" in err


class TestCfrac:
    def test_worked_surd(self, capsys):
        rc, out, _ = run(capsys, ["cfrac", "--surd", "(0+sqrt(2))/2"])
        assert rc == 0
        assert out.strip() == "[0,1;(2)]"

    def test_json(self, capsys):
        rc, out, _ = run(capsys, ["--output", "json", "cfrac", "--surd", "(1+sqrt(5))/2"])
        assert rc == 0
        assert json.loads(out)["cf"] == {"preperiod": [], "period": [1]}

    def test_square_d_is_domain_error(self, capsys):
        rc, _, err = run(capsys, ["cfrac", "--surd", "(0+sqrt(4))/2"])
        assert rc == 1

    def test_bad_syntax_is_usage_error(self, capsys):
        rc, _, _ = run(capsys, ["cfrac", "--surd", "sqrt(2)"])
        assert rc == 2


class TestShiftEquiv:
    def test_worked_pair(self, capsys):
        rc, out, _ = run(capsys, ["shift-equiv", "--A", "0,1;2,0", "--B", "0,2;1,0"])
        assert rc == 0
        assert "status: equivalent" in out
        assert "R: 0,1;1,0" in out
        assert "S: 2,0;0,1" in out
        assert "k: 1" in out

    def test_json_certificate(self, capsys):
        rc, out, _ = run(
            capsys,
            ["--output", "json", "shift-equiv", "--A", "0,1;2,0", "--B", "0,2;1,0"],
        )
        doc = json.loads(out)
        assert doc["status"] == "equivalent"
        assert doc["certificate"] == {"R": [[0, 1], [1, 0]], "S": [[2, 0], [0, 1]], "k": 1}

    def test_filtered_pair(self, capsys):
        rc, out, _ = run(capsys, ["shift-equiv", "--A", "2", "--B", "3"])
        assert rc == 0
        assert "status: not_equivalent" in out

    def test_bounds_respected(self, capsys):
        rc, out, _ = run(
            capsys,
            ["--entry-bound", "1", "--lag-bound", "1", "shift-equiv",
             "--A", "0,1;2,0", "--B", "0,2;1,0"],
        )
        assert rc == 0
        assert "status: unknown" in out

    def test_size_mismatch_exits_1(self, capsys):
        rc, _, err = run(capsys, ["shift-equiv", "--A", "2", "--B", "0,1;1,0"])
        assert rc == 1


class TestPeriodic:
    def test_map(self, capsys):
        rc, out, _ = run(
            capsys, ["--output", "json", "periodic", "--map", "0,0,1 / 1", "-n", "2"]
        )
        assert rc == 0
        doc = json.loads(out)
        assert doc["count_with_multiplicity"] == 5
        assert doc["count_distinct"] == 5
        assert doc["infinity_fixed"] is True

    def test_curve(self, capsys):
        rc, out, _ = run(
            capsys, ["--output", "json", "periodic", "--curve", "4,2,0", "-n", "1"]
        )
        assert rc == 0
        assert json.loads(out)["degree"] == 4

    def test_needs_map_or_curve(self, capsys):
        rc, _, _ = run(capsys, ["periodic", "-n", "1"])
        assert rc == 2


class TestCompare:
    def test_table(self, capsys):
        rc, out, _ = run(
            capsys,
            ["--output", "json", "compare", "--curve", "4,2,0", "--D", "2",
             "--eps", "0+1*sqrt(2)", "-n", "2"],
        )
        assert rc == 0
        doc = json.loads(out)
        assert doc["map_degree"] == 4
        assert doc["epsilon_norm"] == "-2"
        assert doc["rows"] == [
            {"n": 1, "trace_count": 0, "distinct_count": 5, "multiplicity_count": 5},
            {"n": 2, "trace_count": 4, "distinct_count": 17, "multiplicity_count": 17},
        ]

    def test_text_table(self, capsys):
        rc, out, _ = run(
            capsys,
            ["compare", "--curve", "4,2,0", "--D", "2", "--eps", "0+1*sqrt(2)",
             "-n", "1"],
        )
        assert rc == 0
        assert "n\ttrace_count\tdistinct_count\tmultiplicity_count" in out
        assert "1\t0\t5\t5" in out


class TestConfig:
    def test_low_precision_rejected(self, capsys):
        rc, _, err = run(capsys, ["--precision", "32", "verify"])
        assert rc == 2
        assert "precision" in err

    def test_bad_bounds_rejected(self, capsys):
        rc, _, _ = run(capsys, ["--entry-bound", "0", "verify"])
        assert rc == 2

    def test_env_overrides_flag(self, capsys, monkeypatch):
        monkeypatch.setenv("LATTES_PRECISION", "32")
        rc, _, err = run(capsys, ["--precision", "128", "verify"])
        assert rc == 2  # env wins, and 32 bits is below the floor

    def test_env_valid(self, capsys, monkeypatch):
        monkeypatch.setenv("LATTES_PRECISION", "256")
        rc, _, _ = run(capsys, ["verify"])
        assert rc == 0

    def test_env_garbage(self, capsys, monkeypatch):
        monkeypatch.setenv("LATTES_PRECISION", "lots")
        rc, _, err = run(capsys, ["verify"])
        assert rc == 2


@pytest.mark.skipif(shutil.which("lattes") is None, reason="console script not on PATH")
def test_console_script():
    proc = subprocess.run(
        ["lattes", "--output", "json", "zeta", "--matrix", "0,1;2,0"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["zeta"]["den"] == ["1", "0", "-2"]
