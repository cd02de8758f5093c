import json
import subprocess
import sys

import pytest

from hurwitzkp.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_hurwitz_example(capsys):
    code, out, _ = call(capsys, "hurwitz", "--flavor", "monotone", "--mu", "2,1", "--nu", "1,1,1", "--b", "2")
    doc = json.loads(out)
    assert code == 0
    assert set(doc) == {"query", "result", "crosschecks"}
    assert doc["result"] == "0/1"
    assert doc["crosschecks"] == [{"method": "oracle", "agrees": True}]


def test_hurwitz_nonzero_value(capsys):
    code, out, _ = call(capsys, "hurwitz", "--flavor", "monotone", "--mu", "2,1", "--nu", "1,1,1", "--b", "1")
    assert code == 0
    assert json.loads(out)["result"] == "1/2"


def test_jucys_example(capsys):
    code, out, _ = call(capsys, "jucys", "--n", "5", "--basis", "h", "--b", "2")
    doc = json.loads(out)
    assert code == 0
    # C_2 coefficient 2, C_1^2 coefficient 1, constant n(n-1)/2
    assert doc["result"] == {"3,1,1": "2/1", "2,2,1": "1/1", "1,1,1,1,1": "10/1"}


def test_qcurve_example(capsys):
    code, out, _ = call(capsys, "qcurve", "--flavor", "atlantes", "--r", "2", "--order", "10")
    assert code == 0
    assert json.loads(out)["result"]["status"] == "verified"


def test_output_is_deterministic(capsys):
    argv = ["oracle", "--mu", "2,2", "--nu", "3,1", "--block", "completed:2", "--block", "strict:1", "--literal"]
    _, first, _ = call(capsys, *argv)
    _, second, _ = call(capsys, *argv)
    assert first == second
    assert all(c["agrees"] for c in json.loads(first)["crosschecks"])


def test_table_csv(capsys, tmp_path):
    target = tmp_path / "table.csv"
    code, _, _ = call(capsys, "hurwitz", "--table", "simple", "--max-n", "3", "--max-count", "4", "--format", "csv", "--output", str(target))
    lines = target.read_text().splitlines()
    assert code == 0
    assert lines[0] == "flavor,g,mu,count,value"
    assert "simple,0,3,2,1/1" in lines


@pytest.mark.parametrize(
    "argv",
    [
        ["hurwitz", "--mu", "2,1"],
        ["hurwitz", "--mu", "2,x", "--nu", "3"],
        ["jucys", "--n", "4", "--basis", "q", "--b", "1"],
        ["qcurve", "--flavor", "strict"],
        ["hurwitz", "--mu", "2", "--nu", "2", "--bogus"],
        ["hurwitz", "--mu", "2", "--nu", "1,1", "--flavor", "monotone"],
        ["oracle", "--mu", "8", "--nu", "8"],
        ["constraints", "--kind", "cut-and-join", "--hbar", "1/5"],
        ["elsv-k", "--format", "xml"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2
    assert err


def test_verification_failure_exit_code(capsys):
    code, out, _ = call(capsys, "quasipoly", "--g", "0", "--ell", "1")
    assert code == 1
    assert json.loads(out)["result"]["first_failure"] is not None


def test_constraints_and_elsv(capsys):
    code, out, _ = call(capsys, "constraints", "--beta=-2/5", "--n", "1,2,3")
    assert code == 0
    assert [r["status"] for r in json.loads(out)["result"]] == ["verified"] * 3
    code, out, _ = call(capsys, "elsv-k", "--L", "2")
    assert json.loads(out)["result"] == ["-3/1", "-21/2"]


def test_selftest_subset(capsys):
    code, out, err = call(capsys, "selftest", "--criteria", "1,2")
    assert code == 0
    assert json.loads(out)["result"]["passed"] == 2
    assert err.count("[PASS]") == 2


def test_help_lists_subcommands():
    out = subprocess.run([sys.executable, "-m", "hurwitzkp", "--help"], capture_output=True, text=True)
    assert out.returncode == 0
    for name in ("hurwitz", "oracle", "jucys", "qcurve", "constraints", "elsv-k", "quasipoly", "selftest"):
        assert name in out.stdout
