import json
import subprocess
import sys

import pytest

from realtypes.cli import main

from conftest import SAMPLE_ROWS


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


@pytest.mark.parametrize(
    "argv, value",
    [
        (["--formula", "rd", "--degrees", "10"], "288"),
        (["--formula", "barbar", "--degrees", "2,3,2"], "55339"),
        (["--formula", "any", "--n", "1", "--roots", "3"], "16"),
        (["--formula", "rdm", "--degrees", "4", "--roots", "2"], "4"),
        (["--formula", "rdhat", "--degrees", "10"], "464"),
        (["--formula", "fam", "--degrees", "1,1", "--roots", "2"], "8"),
        (["--formula", "fam-total", "--degrees", "2,3,2"], "26624"),
        (["--formula", "fam-upto", "--degrees", "2,2"], "208"),
        (["--formula", "bar", "--degrees", "2,3,2"], "53736"),
        (["--formula", "fib", "--n", "50"], "12586269025"),
    ],
)
def test_count(capsys, argv, value):
    code, out, _ = run(capsys, "count", *argv)
    assert code == 0 and json.loads(out)["value"] == value
    code, out, _ = run(capsys, "count", "--plain", *argv)
    assert out == value


@pytest.mark.parametrize(
    "argv",
    [
        ["--formula", "rd"],
        ["--formula", "rd", "--degrees", "1,2"],
        ["--formula", "rdm", "--degrees", "3"],
        ["--formula", "any", "--roots", "1"],
        ["--formula", "fam-upto", "--degrees", "0,2"],
    ],
)
def test_count_usage_errors(capsys, argv):
    code, _, err = run(capsys, "count", *argv)
    assert code == 2 and "error" in err


def test_count_bad_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["count", "--formula", "nope"])
    assert info.value.code == 2


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--plain")
    assert code == 0 and "4\t16" in out.splitlines() and "10\t288" in out.splitlines()
    code, out, _ = run(capsys, "table", "--max-d", "0")
    assert json.loads(out) == [{"d": 0, "R_d": "2"}]
    code, out, _ = run(capsys, "table", "--max-d", "12", "--check")
    assert code == 0 and all(r["check"] for r in json.loads(out))


def test_check(capsys):
    code, out, _ = run(capsys, "check", "[1,0,-1,0,-1,0,1]", "--degrees", "3")
    assert code == 1 and json.loads(out)["real_type"] is False
    assert json.loads(out)["min_degree"] == 4
    code, out, _ = run(capsys, "check", "[1,0,-1,0,-1,0,1]", "--degrees", "4")
    assert code == 0 and json.loads(out)["real_type"] is True
    code, out, _ = run(capsys, "check", "[[1]]", "--degrees", "2")
    assert code == 0 and json.loads(out)["family_type"] is True
    code, _, _ = run(capsys, "check", "[1,0]", "--degrees", "2")
    assert code == 2
    code, _, _ = run(capsys, "check", "{oops", "--degrees", "2")
    assert code == 2


def test_type_and_signmatrix(capsys):
    code, out, _ = run(capsys, "type", "[0,0,-4,0,1]")
    assert json.loads(out) == [1, 0, -1, 0, -1, 0, 1]
    code, out, _ = run(capsys, "type", '["1/2",1]')
    assert json.loads(out) == [-1, 0, 1]
    code, out, _ = run(capsys, "signmatrix", "[1,1]", "[1,2]", "[-1,0,1]")
    assert json.loads(out) == SAMPLE_ROWS
    code, _, _ = run(capsys, "type", "[0]")
    assert code == 2


def test_realize(capsys):
    code, out, _ = run(capsys, "realize", "[1,0,1]", "--degree", "2")
    assert code == 0 and json.loads(out) == [1, -2, 1]
    code, out, _ = run(capsys, "realize", json.dumps(SAMPLE_ROWS), "--degrees", "1,1,2")
    assert json.loads(out) == [[-1, 1], [-2, 1], [3, -4, 1]]
    code, out, err = run(capsys, "realize", "[1,0,1]", "--degree", "1")
    assert code == 1 and out == "" and "not a real 1-type" in err
    code, out, err = run(capsys, "realize", "[1,0,1]", "--degree", "1", "--quiet")
    assert code == 1 and out == "" and err == ""


def test_satisfy(capsys):
    code, out, _ = run(capsys, "satisfy", "[1,1] = 0", "[1,2] < 0", "[-1,0,1] = 0")
    v = json.loads(out)
    assert code == 0 and v["column"] == 2 and v["region"]["point"] == -1
    code, out, _ = run(capsys, "satisfy", "[1,1] = 0", "[1,2] = 0")
    assert code == 1 and json.loads(out) == {"satisfiable": False}
    code, out, _ = run(capsys, "satisfy", "--quiet", "[1,0,1] <= 0")
    assert code == 1 and out == ""
    code, _, _ = run(capsys, "satisfy", "x = 0")
    assert code == 2


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--degrees", "2", "--roots", "1")
    assert [json.loads(line) for line in out.splitlines()] == [[-1, 0, -1], [1, 0, 1]]
    code, out, _ = run(capsys, "enumerate", "--degrees", "1,1", "--roots", "2")
    assert len(out.splitlines()) == 8
    code, out, _ = run(capsys, "enumerate", "--degrees", "1", "--roots", "1", "--matrix")
    assert [json.loads(line) for line in out.splitlines()] == [[[-1, 0, 1]], [[1, 0, -1]]]
    code, _, err = run(capsys, "enumerate", "--degrees", "2,3,2", "--roots", "4")
    assert code == 2 and "budget" in err
    code, out, _ = run(capsys, "enumerate", "--degrees", "1,1", "--roots", "2", "--budget", "9")
    assert code == 2


def test_examples_report(capsys):
    code, out, _ = run(capsys, "examples")
    values = {(r["formula_id"], tuple(r["params"])): r["value"] for r in json.loads(out)}
    assert code == 0
    assert values == {
        ("RFam", (2, 3, 2)): "26624",
        ("Bar", (2, 3, 2)): "53736",
        ("BarBar", (2, 3, 2)): "55339",
        ("BarBar", (2, 2, 2, 2, 2)): "311476091",
    }


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "realtypes", "signmatrix", "[1,1]", "[1,2]", "[-1,0,1]"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second == (json.dumps(SAMPLE_ROWS, separators=(",", ":")) + "\n").encode()
