import io
import json
import subprocess
import sys

import pytest

from rankin_lab.cli import run, sweep


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def no_floats(doc):
    if isinstance(doc, float):
        return False
    if isinstance(doc, dict):
        return all(no_floats(v) for v in doc.values())
    if isinstance(doc, list):
        return all(no_floats(v) for v in doc)
    return True


def test_critical():
    code, out, _ = call("critical", "--mu", "5,-5;6,-4", "--nu", "5,-5;5,-5")
    assert code == 0
    doc = json.loads(out)
    assert (doc["kappa"], doc["c"], doc["places"]) == ("1/2", "1/2", [0])


def test_verify_and_vj_literal_output():
    code, out, _ = call("verify", "--lemma", "4.6", "--n", "3")
    assert code == 0
    assert out == '{"lemma":"4.6","n":3,"multiplicity":1,"verdict":"PASS"}\n'
    code, out, _ = call("vj", "--mu", "0,0;0,0", "--nu", "0,0;0,0", "--j", "0")
    assert code == 0
    assert out == '{"label":"d","vj":[[0,0],[0,0]],"l":0}\n'


def test_vj_from_parameters():
    code, out, _ = call("vj", "--n", "2", "--k-eta", "0", "--kappa", "1/2", "--j", "0")
    assert code == 0
    assert json.loads(out) == {"label": "b", "vj": [[0, 0], [1, 1]], "l": 1}


@pytest.mark.parametrize(
    "argv",
    [
        ["critical", "--mu", "1,0;1,1", "--nu", "0,0;0,0"],
        ["critical", "--mu", "5,-5;6,-4"],
        ["critical", "--mu", "5,-5;6,-4", "--nu", "5,-5;5,-5", "--bogus"],
        ["frobnicate"],
        [],
        ["sweep", "--lemma", "3.4", "--n", "2", "--samples", "3"],
        ["decompose", "--pieri", "1,0"],
    ],
)
def test_usage_errors_exit_2(argv):
    code, out, err = call(*argv)
    assert code == 2
    assert out == ""
    assert err.count("\n") == 1 and err.startswith("rankin-lab: error:")


def test_decompose_forms():
    assert json.loads(call("decompose", "--tensor", "1,0", "1,0")[1])["terms"] == [
        {"weight": [2, 0], "mult": 1},
        {"weight": [1, 1], "mult": 1},
    ]
    assert json.loads(call("decompose", "--pieri", "0,0", "--a", "-2")[1])["terms"] == [{"weight": [0, -2], "mult": 1}]
    assert json.loads(call("decompose", "--restrict", "0,0;1,1")[1])["terms"] == [{"weight": [-1, -1], "mult": 1}]
    assert json.loads(call("decompose", "--invariant", "1,0", "0,-1")[1]) == {"invariant_dim": 1}
    assert json.loads(call("decompose", "--dim", "2,0")[1]) == {"weyl_dim": 3}
    assert json.loads(call("decompose", "--exterior", "2", "2")[1])["dim"] == 3


def test_coh_worked_and_flagged():
    code, out, _ = call("coh", "--mu", "5,-5;6,-4", "--nu", "5,-5;5,-5")
    doc = json.loads(out)
    assert code == 0 and doc["verdict"] == "PASS"
    assert doc["ij_full"] == [0, 1, 2, 1, 0]


def test_ktypes_default_j_is_central():
    doc = json.loads(call("ktypes", "--mu", "5,-5;6,-4", "--nu", "5,-5;5,-5")[1])
    assert doc["j"] == 0 and doc["sigma_j_plus"] == [2, 0]


def test_infeasible_reported_as_skipped(monkeypatch):
    monkeypatch.setenv("RANKIN_LAB_MAX_SUBSETS", "5")
    code, out, _ = call("sweep", "--lemma", "4.6", "--n", "3")
    doc = json.loads(out)
    assert doc["lemmas"][0]["summary"]["SKIPPED"] == 1
    assert doc["lemmas"][0]["summary"]["PASS"] == 0
    assert code == 0


def test_sweep_examples():
    assert sweep(["4.4"], range(2, 7))["lemmas"][0]["summary"]["PASS"] == 5
    assert sweep(["4.8"], range(2, 5))["lemmas"][0]["summary"]["PASS"] == 3


def test_sweep_deterministic_and_worker_independent():
    a = call("sweep", "--lemma", "3.4", "--lemma", "4.10", "--n", "2..3", "--samples", "20", "--seed", "11")
    b = call("sweep", "--lemma", "3.4", "--lemma", "4.10", "--n", "2..3", "--samples", "20", "--seed", "11", "--workers", "3")
    assert a == b
    assert a[0] == 0
    assert no_floats(json.loads(a[1]))


def test_pretty_mode():
    code, out, _ = call("critical", "--mu", "5,-5;6,-4", "--nu", "5,-5;5,-5", "--pretty")
    assert code == 0 and out.startswith('kappa: "1/2"')


def test_console_script_module_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "rankin_lab.cli", "verify", "--lemma", "4.4", "--n", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"] == "PASS"


def test_fail_verdict_exits_1():
    # n = 3 profile carries classes outside the 1,2,1 block, so coh reports FAIL
    code, out, _ = call("coh", "--mu", "3,0,-4;3,-1,-4", "--nu", "3,-3,-4;4,3,-3")
    doc = json.loads(out)
    assert code == 1
    assert doc["checks"]["zero_elsewhere"] is False
    assert doc["checks"]["pattern_121"] is True
