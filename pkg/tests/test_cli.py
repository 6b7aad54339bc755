"""
Command line: output formats and exit codes
"""
import io
import json
import sys
import tempfile
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

from harness import run_tests

from cli import run


def _run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = run(list(argv))
    return code, out.getvalue(), err.getvalue()


def test_invariants_text_and_json():
    code, out, _ = _run("invariants", "J 1-<2-> 2+", "--p", "7", "--b", "2")
    assert code == 0
    assert out.strip() == "sig = -10, eta = 1"
    code, out, _ = _run("invariants", "J 1-<2-> 2+", "--p", "7", "--b", "2", "--json")
    assert code == 0
    assert json.loads(out) == {"scheme": "J 1-<2-> 2+", "p": 7, "b": 2, "sig": -10, "eta": 1}


def test_profile_listing():
    code, out, _ = _run("profile", "J 1-<2-> 2+")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "(0/1, 1/14) --> (-1, 0)"
    assert lines[-1] == "(3/7, 1/2) --> (-5, 0)"
    assert "1/7 --> (-8, 1)" in lines
    doc = json.loads(_run("profile", "J", "--json")[1])
    assert doc["intervals"] == [{"lo": "0", "hi": "1/2", "sig": 0, "eta": 0}]


def test_check_verdicts_keep_exit_zero():
    code, out, _ = _run("check", "J 1-<2-> 2+", "--degree", "5")
    assert code == 0
    assert "verdict: prohibited at p=3, b=1" in out
    code, out, _ = _run("check", "J", "--degree", "2", "--json")
    assert code == 0
    assert json.loads(out)["verdict"] == "parity_mismatch"


def test_check_with_brute_force():
    code, out, _ = _run("check", "J 1-<2-> 2+", "--degree", "5", "--brute", "7", "--json")
    assert code == 0
    assert json.loads(out)["brute"] == {"p": 3, "b": 1}


def test_family_output():
    code, out, _ = _run("family", "odd_nest", "--k", "4", "--json")
    assert code == 0
    doc = json.loads(out)
    assert (doc["scheme"], doc["degree"], doc["alpha"], doc["beta"]) == ("J 1-<12- 15+>", 9, 12, 15)
    assert doc["report"] is None


def test_graph_dump():
    code, out, _ = _run("graph", "J", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["matrix"][0] == [1, 1, 1, 1]
    assert doc["c"] == [-2, 0, 1, 1] and doc["delta"] == 0
    code, out, _ = _run("graph", "J", "--plus", "--dot")
    assert code == 0 and out.startswith("graph plumbing {")
    code, out, _ = _run("graph", "1+", "--plus")
    assert code == 0 and "Delta = -4" in out


def test_cg_from_file():
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "lens.json"
        path.write_text(json.dumps({"weights": [3], "edges": [], "charvec": [1], "p": 3}))
        code, out, _ = _run("cg", "--tree", str(path), "--json")
        assert code == 0
        assert json.loads(out) == {"p": 3, "sigma": "1/3", "eta": 0}

        path.write_text(json.dumps({"weights": [3], "edges": [], "charvec": [1, 2]}))
        code, _, err = _run("cg", "--tree", str(path), "--p", "3")
        assert code == 2 and err.startswith("ERROR:")

        path.write_text(json.dumps({"weights": [3], "edges": [], "charvec": [1], "p": 3,
                                    "arrows": [{"tail": 0, "sign": 1}]}))
        code, _, err = _run("cg", "--tree", str(path))
        assert code == 2 and "arrows" in err


def test_linking_table():
    code, out, _ = _run("linking", "J", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["labels"] == ["u1", "u2", "u3", "R1"]
    assert doc["matrix"][1][2] == "1/2"


def test_input_errors_exit_two():
    assert _run("invariants", "J 1-<", "--p", "7", "--b", "2")[0] == 2
    assert _run("invariants", "J", "--p", "9", "--b", "2")[0] == 2
    assert _run("family", "double_nest", "--k", "7")[0] == 2
    assert _run("profile")[0] == 2
    assert _run("no_such_command")[0] == 2
    code, _, err = _run("invariants", "1+<>", "--p", "3", "--b", "1")
    assert code == 2 and "position 3" in err


def test_log_file_written():
    with tempfile.TemporaryDirectory() as tmp:
        log = Path(tmp) / "run.json"
        assert _run("--log", str(log), "invariants", "J", "--p", "3", "--b", "1")[0] == 0
        doc = json.loads(log.read_text())
        assert doc["run"] == "cli_invariants"
        assert doc["events"][0]["details"]["sig"] == 0


if __name__ == "__main__":
    sys.exit(run_tests(globals(), "CLI TESTS"))
