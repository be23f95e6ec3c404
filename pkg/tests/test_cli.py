import io
import json
import subprocess
import sys

import pytest

from irrec.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


@pytest.mark.parametrize("argv,expect", [
    (("count", "B", "--g", "0", "--mu", "1,1,1"), "2"),
    (("count", "b", "--g", "1", "--mu", "3"), "1/3"),
    (("count", "u", "--g", "1", "--mu", "1,1", "--curve", "half"), "1/8"),
    (("count", "U", "--g", "0", "--mu", "3"), "5"),
    (("count", "epsilon", "--g", "1", "--n", "3"), "10"),
])
def test_count(argv, expect):
    assert run(*argv) == (0, expect + "\n")


def test_count_json():
    code, out = run("count", "B", "--g", "1", "--mu", "3", "--json")
    assert code == 0
    assert json.loads(out) == {"family": "B", "g": 1, "mu": [3], "value": {"num": "1", "den": "3"}}


@pytest.mark.parametrize("argv", [
    ("count", "B", "--g", "0", "--mu", "1,x"),
    ("count", "B", "--g", "0", "--mu", "0,2"),
    ("count", "B", "--mu", "2"),
    ("count", "Q", "--g", "0", "--mu", "2"),
    ("invariant", "--curve", "nowhere", "--g", "1", "--n", "1"),
    ("invariant", "--curve", "airy", "--g", "0", "--n", "2"),
    ("verify", "nothing"),
    ("verify", "oracle", "--dmax", "12"),
    ("table", "volumes", "--g-max", "-1"),
    (),
])
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_invariant_airy():
    assert run("invariant", "--curve", "airy", "--g", "1", "--n", "1") == (0, "((1/16)*z^-2) dz\n")


def test_invariant_flat_is_flagged():
    code, out = run("invariant", "--curve", "flat-counterexample", "--g", "0", "--n", "3")
    assert code == 0 and out.startswith("# symmetry-not-guaranteed\n")


def test_invariant_expansion():
    code, out = run("invariant", "--curve", "dessin", "--g", "0", "--n", "3", "--expand", "4")
    assert out.splitlines()[0] == "z1^0 z2^0 z3^0\t2"
    code, js = run("invariant", "--curve", "dessin", "--g", "0", "--n", "3", "--order", "1", "--json")
    assert json.loads(js)["coefficients"][0] == {"exponents": [0, 0, 0], "value": {"num": "2", "den": "1"}}


def test_verify_suite_exit_and_json():
    code, out = run("verify", "three-term")
    assert code == 0 and "three-term" in out
    code, out = run("verify", "quantum", "--json")
    rep = json.loads(out)
    assert code == 0 and rep["summary"]["fail"] == 0


def test_verify_oracle_threads_deterministic():
    a = run("verify", "oracle", "--dmax", "5", "--threads", "1")
    b = run("verify", "oracle", "--dmax", "5", "--threads", "3")
    assert a == b and a[0] == 0


def test_verify_failure_exit_1(monkeypatch):
    from irrec import verify as V

    def broken():
        r = V.Report("broken")
        r.add("x", "always wrong", 1, 2)
        return r
    monkeypatch.setitem(V.CRITERIA, 1, broken)
    assert run("verify", "three-term")[0] == 1


def test_table_pruned_flags_discrepancy():
    code, out = run("table", "pruned-table", "--g-max", "0", "--n-max", "4", "--mu-max", "2")
    lines = out.splitlines()
    assert lines[0] == "g,n,mu,value_num,value_den,source_anchor,status,reference_num,reference_den"
    assert "0,4,1;1;1;1,6,1,pruned table,reference-discrepancy,3,1" in lines
    assert all(",pass," in l for l in lines[1:] if not l.startswith("0,4,"))


def test_table_appendix_genus_one():
    code, out = run("table", "appendix", "--g-max", "1", "--n-max", "1", "--format", "json")
    rows = [r for r in json.loads(out) if (r["g"], r["n"]) == (1, 1)]
    assert len(rows) == 6 and all(r["status"] == "pass" for r in rows)


def test_tables_match_references():
    for what in ("volumes", "wave"):
        code, out = run("table", what, "--format", "json")
        assert code == 0 and all(r["status"] == "pass" for r in json.loads(out))


def test_output_is_deterministic():
    assert run("table", "appendix") == run("table", "appendix")


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "irrec", "count", "B", "--g", "0", "--mu", "2"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout == "1\n"
