import io
import json

import pytest

from qudit_ns.cli import run_cli


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_maximize_closed_49():
    code, out, _ = run("maximize", "--d", "3", "--n", "49", "--method", "closed")
    assert code == 0 and "(21,16,12)" in out and "45574183885970539800" in out


def test_maximize_json_schema():
    code, out, _ = run("maximize", "--d", "3", "--n", "4", "--format", "json")
    obj = json.loads(out)
    assert code == 0
    assert obj == {"d": 3, "n": 4, "max_multiplicity": "3", "argmax": [[3, 1, 0], [2, 1, 1]], "tie": True, "method": "closed_d3"}


def test_csv_tuples_use_semicolons():
    code, out, _ = run("maximize", "--d", "3", "--n", "49", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1].split(",")[2] == "(21;16;12)"


@pytest.mark.parametrize(
    "argv",
    [
        ("maximize", "--d", "3", "--n", "0"),
        ("maximize", "--n", "5"),
        ("bogus",),
        ("maximize", "--d", "3", "--n", "5", "--wat"),
        ("maximize", "--d", "5", "--n", "5", "--method", "closed"),
        ("verify", "--check", "nope"),
        ("qubit-table", "--nmax", "2"),
        ("decompose", "--d", "4", "--n", "40", "--budget", "10"),
        ("rate", "--partition", "1,2"),
        (),
    ],
)
def test_usage_errors(argv):
    code, out, err = run(*argv)
    assert code == 1 and out == "" and "error" in err


def test_usage_error_names_flag():
    _, _, err = run("maximize", "--d", "3", "--n", "0")
    assert "--n" in err and "usage:" in err
    _, _, err = run("verify", "--check", "nope")
    assert "--check" in err


def test_help_exits_zero():
    code, _, _ = run("--help")
    assert code == 0


def test_decompose_outputs():
    code, out, _ = run("decompose", "--d", "2", "--n", "3", "--format", "csv")
    assert code == 0
    assert out == "partition,f,g\n(3;0),1,4\n(2;1),2,2\ntotal,8,ok\n"
    code, out, _ = run("decompose", "--d", "3", "--n", "3", "--format", "json")
    blocks = json.loads(out)["blocks"]
    assert {"partition": [1, 1, 1], "f": "1", "g": "1"} in blocks
    code, out, _ = run("decompose", "--d", "2", "--n", "1")
    assert "total = 2 = 2^1 [ok]" in out


def test_qubit_table_rows():
    code, out, _ = run("qubit-table", "--nmax", "15", "--format", "csv")
    rows = {r.split(",")[0]: r.split(",")[1:] for r in out.splitlines()[1:]}
    assert rows["8"] == ["3", "28", "4"]
    assert rows["13"] == ["5", "572", "9"]
    assert rows["3"] == ["1", "2", "1"]


def test_rate_commands():
    code, out, _ = run("rate", "--partition", "6,4", "--format", "json")
    assert code == 0 and json.loads(out)["rate"] == 0.649185309633
    code, out, _ = run("rate", "--d", "2", "--n", "10", "--format", "csv")
    assert "(6;4),90" in out
    code, out, _ = run("rate-series", "--d", "2", "--kmax", "3", "--format", "csv")
    assert out.splitlines()[1] == "1,2,0.0,1"


def test_verify_pass_and_fail_codes(monkeypatch):
    code, out, err = run("verify", "--check", "dimension-sum", "--d", "3", "--nmax", "10", "--format", "json")
    assert code == 0 and json.loads(out)["status"] == "pass" and "elapsed" in err

    import qudit_ns.verify as verify

    monkeypatch.setitem(verify.CHECKS, "dimension-sum", lambda **_: ({}, [("x", "1", "2")]))
    code, out, _ = run("verify", "--check", "dimension-sum", "--format", "json")
    assert code == 2 and json.loads(out)["counterexamples"] == [{"input": "x", "expected": "1", "actual": "2"}]


def test_local_warning():
    code, _, err = run("maximize", "--d", "5", "--n", "40", "--budget", "10")
    assert code == 0 and "heuristic" in err


@pytest.mark.parametrize(
    "argv",
    [
        ("maximize", "--d", "3", "--n", "50", "--format", "json"),
        ("decompose", "--d", "3", "--n", "6", "--format", "json"),
        ("rate-series", "--d", "3", "--kmax", "20", "--format", "json"),
        ("qubit-table", "--nmax", "40", "--format", "json"),
        ("verify", "--check", "tie-families", "--nmax", "80", "--format", "json"),
    ],
)
def test_json_round_trip_and_determinism(argv):
    _, first, _ = run(*argv)
    _, second, _ = run(*argv)
    assert first == second
    assert json.dumps(json.loads(first), indent=2) + "\n" == first


def test_output_independent_of_jobs():
    base = run("verify", "--check", "closed-form-d3", "--nmax", "120", "--format", "json")[1]
    assert run("verify", "--check", "closed-form-d3", "--nmax", "120", "--jobs", "3", "--format", "json")[1] == base
