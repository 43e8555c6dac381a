import io
import json
import subprocess
import sys

import pytest

from linforest.cli import main
from linforest.formats import to_graph6
from linforest.graph import path_graph


class FakeStdin(io.StringIO):
    @property
    def buffer(self):
        return io.BytesIO(self.getvalue().encode())


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, stdin=FakeStdin(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_delta():
    assert run(["delta", "--forest", "5+5"]) == (0, "3\n", "")
    code, out, _ = run(["delta", "--forest", "5+5", "--format", "json"])
    assert json.loads(out) == {"schema": "linforest/delta/1", "forest": "5+5", "delta": 3}


def test_construct_then_contains():
    code, g6, _ = run(["construct", "gf", "--forest", "2+2", "--n", "5"])
    assert code == 0
    code, out, _ = run(["contains", "--forest", "2+2"], g6)
    rep = json.loads(out)
    assert code == 0 and rep["contains"] is False and rep["schema"] == "linforest/contains/1"


def test_construct_families_round_trip_through_classify():
    cases = [
        (["construct", "apex-cliques", "--ell", "5", "--t", "5"], "5+5", "APEX_CLIQUES"),
        (["construct", "apex-mixed", "--ell", "5", "--t1", "2", "--t2", "4"], "5+5", "APEX_MIXED"),
        (["construct", "base-k4", "--base", "E2", "--t", "7"], "5+5+5", "THREE_P5_EXCEPTION"),
        (["construct", "gf", "--forest", "4+2", "--n", "14"], "4+2", "SUBGRAPH_OF_GF"),
    ]
    for argv, forest, case in cases:
        _, g6, _ = run(argv)
        code, out, _ = run(["classify", "--forest", forest], g6)
        rep = json.loads(out)
        assert rep["case"] == case and rep["witness_ok"]


def test_construct_dot_and_gf_i():
    code, out, _ = run(["construct", "path-union", "--orders", "7+4", "--format", "dot"])
    assert code == 0 and out.startswith("graph")
    code, _, err = run(["construct", "gf-i", "--k", "2", "--n", "12", "--i", "2",
                        "--attachment", "[[[0,0],[1,1]],[[0,0]]]"])
    assert code == 1 and json.loads(err)["error"] == "constraint_violation"


def test_count_formula_core():
    _, g6, _ = run(["construct", "gf", "--forest", "5+5", "--n", "10"])
    code, out, _ = run(["count", "--s", "4"], g6)
    assert json.loads(out)["count"] == 10
    code, out, _ = run(["formula", "--forest", "5+5", "--n", "12", "--s", "4"])
    rep = json.loads(out)
    assert rep["theorem_value"] == 11 and rep["gf_formula"] == 12 and rep["threshold_n"] == 8823
    code, out, _ = run(["formula", "--forest", "4+4", "--n", "12", "--s", "2"])
    assert json.loads(out)["theorem_value"] is None
    p5 = to_graph6(path_graph(5)).decode()
    code, out, _ = run(["core", "--forest", "4+2", "--s", "2"], p5 + "\n")
    rep = json.loads(out)
    assert rep["m"] == 0 and len(rep["steps"]) == 5 and rep["step_bound_ok"]


def test_enumerate_extremal_reconcile():
    code, out, _ = run(["enumerate", "--n", "5"])
    assert len(out.split()) == 34
    code, out, _ = run(["enumerate", "--n", "6", "--f-free", "2+2", "--format", "json"])
    assert json.loads(out)["count"] == 7
    code, out, _ = run(["extremal", "--path-ell", "4", "--n", "9", "--s", "2"])
    assert json.loads(out)["brute"] == 9
    code, out, _ = run(["reconcile", "--forest", "2+2", "--s", "2", "--n-min", "3", "--n-max", "5", "--format", "csv"])
    lines = out.splitlines()
    assert lines[0].startswith("n,s,forest,brute,formula,threshold,agrees")
    assert lines[1].startswith("3,2,2+2,3,2,16,,True")


def test_audit_and_lemma_check():
    code, out, _ = run(["audit", "--forest", "2+2", "--n", "8"])
    rep = json.loads(out)
    assert rep["counts"]["SUBGRAPH_OF_GF"] == rep["total"] and rep["counterexamples"] == []
    code, out, _ = run(["audit", "--forest", "5+5", "--n", "21", "--sample", "10", "--seed", "3"])
    assert json.loads(out)["failures"] == []
    code, out, _ = run(["lemma-check", "claw", "--max-order", "16"])
    assert json.loads(out)["verdict"] == "PASS"
    code, out, _ = run(["lemma-check", "claw2", "--max-order", "16", "--format", "csv"])
    assert out.rstrip().endswith("verdict,PASS")


def test_error_contract():
    code, out, err = run(["delta", "--forest", "5+1"])
    assert code == 1 and out == "" and json.loads(err)["error"] == "domain_error"
    code, _, err = run(["enumerate", "--n", "9", "--f-free", "4+4", "--budget", "5"])
    assert code == 1 and json.loads(err)["error"] == "budget_exceeded"
    code, _, err = run(["enumerate", "--n", "12"])
    assert code == 1
    assert run(["frobnicate"])[0] == 2
    assert run(["delta", "--bogus", "1"])[0] == 2


def test_deterministic_output():
    argv = ["reconcile", "--forest", "2+2", "--s", "2", "--n-min", "3", "--n-max", "7"]
    assert run(argv) == run(argv)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "linforest", "delta", "--forest", "7+5"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "4\n"
