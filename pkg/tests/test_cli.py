import json

import pytest

from schurq import cli
from schurq.spectra import SweepReport


def run(capsys, argv):
    rc = cli.main(argv)
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


class TestBasicCommands:
    def test_qfun_text(self, capsys):
        rc, out, _ = run(capsys, ["qfun", "--lambda", "1", "--n", "2", "--format", "text"])
        assert rc == 0
        assert out.strip() == "2*x1 + 2*x2"

    def test_eigen_json(self, capsys):
        rc, out, _ = run(capsys, ["eigen", "--lambda", "2,1", "--op", "omega3", "--n", "3"])
        assert rc == 0
        obj = json.loads(out)
        assert obj["eigenvalue"] == "0"
        assert obj["isEigen"] is True

    def test_tableaux(self, capsys):
        rc, out, _ = run(capsys, ["tableaux", "--lambda", "3,2,1", "--format", "text"])
        assert rc == 0
        assert out.strip() == "2"

    def test_qk_json(self, capsys):
        rc, out, _ = run(capsys, ["qk", "--n", "1", "--max", "2"])
        assert rc == 0
        objs = json.loads(out)
        assert objs[2] == {"n": 1, "terms": [{"exp": [2], "coeff": "2"}]}

    def test_apply(self, capsys):
        rc, out, _ = run(
            capsys, ["apply", "--op", "omega3", "--lambda", "2", "--n", "2", "--format", "text"]
        )
        assert rc == 0
        assert out.strip() == "8*x1^2 + 16*x1*x2 + 8*x2^2"

    def test_char_map(self, capsys):
        rc, out, _ = run(capsys, ["char-map", "--nu", "3", "--n", "2", "--format", "text"])
        assert rc == 0
        assert out.strip() == "2*x1^3 + 2*x2^3"

    def test_expand(self, capsys):
        rc, out, _ = run(capsys, ["expand", "--lambda", "3", "--max", "8"])
        assert rc == 0
        assert json.loads(out) == {"3": "2/3", "1,1,1": "4/3"}


class TestDeterminism:
    def test_byte_identical_runs(self, capsys):
        argv = ["qfun", "--lambda", "4,2,1", "--n", "3"]
        _, first, _ = run(capsys, argv)
        _, second, _ = run(capsys, argv)
        assert first == second


class TestVerify:
    def test_passing_suite_exit_zero(self, capsys):
        rc, out, _ = run(capsys, ["verify", "--suite", "aux35", "--n", "2", "--format", "text"])
        assert rc == 0
        assert "PASS" in out

    def test_skew_suite_json(self, capsys):
        rc, out, _ = run(capsys, ["verify", "--suite", "skew", "--n", "2", "--max", "3"])
        assert rc == 0
        obj = json.loads(out)
        assert obj["passed"] is True
        assert obj["checked"] > 0

    def test_seeded_failure_flips_exit_code(self, capsys, monkeypatch):
        def broken(n, d):
            report = SweepReport("injected")
            report.checked = 1
            report.failures.append("injected failure")
            return report

        monkeypatch.setitem(cli.SUITES, "skew", broken)
        rc, out, _ = run(capsys, ["verify", "--suite", "skew", "--n", "2", "--format", "text"])
        assert rc == 1
        assert "FAIL" in out


class TestErrors:
    def test_unknown_flag_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["qfun", "--lambda", "1", "--n", "2", "--bogus"])
        assert exc.value.code == 2

    def test_unknown_operator_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["apply", "--op", "omega2", "--lambda", "1", "--n", "2"])
        assert exc.value.code == 2

    def test_bad_partition_exits_2(self, capsys):
        rc, _, err = run(capsys, ["qfun", "--lambda", "1,2", "--n", "2"])
        assert rc == 2
        assert "error" in err

    def test_guardrail_without_force(self, capsys):
        rc, _, err = run(capsys, ["qk", "--n", "7", "--max", "2"])
        assert rc == 2
        assert "guardrail" in err

    def test_guardrail_with_force(self, capsys):
        rc, out, _ = run(capsys, ["qk", "--n", "7", "--max", "1", "--force", "--format", "text"])
        assert rc == 0
        assert "q1" in out
