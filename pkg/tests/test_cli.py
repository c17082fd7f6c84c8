from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from admfusion.cli import THEOREMS, main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_fusion_table():
    code, out, _ = run("fusion", "A", "1", "--u", "3", "--v", "2", "--format", "table")
    assert code == 0
    rows = out.splitlines()
    assert len(rows) == 3
    assert rows[2].split() == ["(1)", "(1)", "(0)"]


def test_fusion_json_schema():
    code, out, _ = run("fusion", "A", "2", "--u", "4", "--v", "5")
    data = json.loads(out)
    assert code == 0
    assert data["algebra"] == "A2" and data["rank"] == 2
    assert data["simples"] == [[0, 0], [0, 1], [1, 0]]
    assert [1, 1, 2, 1] in data["entries"]


def test_fusion_csv():
    code, out, _ = run("fusion", "A", "1", "--u", "3", "--v", "2", "--format", "csv")
    assert out.splitlines() == ["i,j,k,N", "0,0,0,1", "0,1,1,1", "1,0,1,1", "1,1,0,1"]


def test_modularity_failure_exit_code():
    code, out, _ = run("verify", "modularity", "A", "1", "--u", "3", "--v", "2")
    assert code == 1
    assert json.loads(out)["verdict"] == "singular"


def test_simples():
    code, out, _ = run("simples", "A", "2", "--u", "4", "--v", "5")
    assert code == 0
    assert json.loads(out)["simples"] == [[0, 0], [0, 1], [1, 0]]


def test_s_matrix_witnesses():
    code, out, _ = run("s-matrix", "A", "1", "--u", "3", "--v", "2")
    ratios = json.loads(out)["ratios"]
    assert ratios[1][1]["exact"] == {"M": 1, "coeffs": ["-1/1"]}
    assert ratios[1][1]["float"] == [-1.0, 0.0]
    code, out, _ = run("s-matrix", "A", "1", "--u", "4", "--v", "3", "--format", "csv")
    assert out.splitlines()[0] == "i,j,M,coeffs,re,im"


def test_w_fusion():
    code, out, _ = run("w-fusion", "A", "1", "--u", "3", "--v", "4")
    data = json.loads(out)
    assert code == 0 and len(data["simples"]) == 3
    assert data["simples"][1] == {"left": [0], "right": [1]}


def test_coset_decompose():
    code, out, _ = run("coset-decompose", "A", "1", "--u", "3", "--v", "1", "--mu", "1", "--nu", "1")
    data = json.loads(out)
    assert data["ell"] == "3/1 - 2"
    assert [t["lambda"] for t in data["terms"]] == [[0], [2]]
    assert {t["weight_mod1"] for t in data["terms"]} == {"0", "1/2"}


@pytest.mark.parametrize("theorem,args", [
    ("hopf-verlinde", ["A", "1", "--u", "5", "--v", "3"]),
    ("galois", ["A", "2", "--u", "4", "--v", "5"]),
    ("modularity", ["A", "1", "--u", "4", "--v", "3"]),
    ("w-factorization", ["A", "1", "--u", "3", "--v", "4"]),
    ("centralizer", ["A", "2", "--u", "5", "--v", "4"]),
    ("twist-balance", ["A", "2", "--u", "5", "--v", "4"]),
    ("coset-partition", ["A", "1", "--u", "3", "--v", "2"]),
    ("wzw-oracle", ["A", "2", "--u", "5"]),
])
def test_every_theorem(theorem, args):
    code, out, _ = run("verify", theorem, *args)
    data = json.loads(out)
    assert code == 0 and data["pass"] and data["theorem"] == theorem
    assert theorem in THEOREMS


@pytest.mark.parametrize("argv", [
    ["bogus", "A", "1"],
    ["simples", "A", "0", "--u", "3"],
    ["simples", "A", "1", "--u", "4", "--v", "2"],
    ["w-fusion", "A", "2", "--u", "4", "--v", "4"],
    ["coset-decompose", "A", "2", "--u", "4", "--mu", "1"],
    ["verify", "galois", "A", "1", "--u", "3", "--v", "2"],
    ["simples", "A", "1", "--u", "3", "--format", "xml"],
])
def test_input_errors(argv):
    code, _, _ = run(*argv)
    assert code == 2


def test_cap_exceeded():
    code, _, err = run("s-matrix", "E", "6", "--u", "13", "--weyl-max", "1000")
    assert code == 3 and "cap" in err
    code, _, _ = run("simples", "A", "3", "--u", "14", "--simples-max", "10")
    assert code == 3


def test_deterministic_with_cold_and_warm_cache(tmp_path):
    argv = [sys.executable, "-m", "admfusion", "s-matrix", "A", "2", "--u", "5", "--v", "4", "--cache-dir", str(tmp_path)]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    assert any(tmp_path.iterdir())
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second


def test_table_report():
    code, out, _ = run("verify", "twist-balance", "A", "2", "--u", "5", "--v", "4", "--format", "table")
    assert code == 0
    assert "sign: -1" in out.splitlines()
