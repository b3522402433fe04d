import io
import runpy
import sys

import pytest

from nonforesty.cli import run

def invoke(argv, stdin=""):
    out = io.StringIO()
    code = run(argv, stdin=io.StringIO(stdin), stdout=out)
    return code, out.getvalue()

@pytest.mark.parametrize("argv, expected", [
    (["formula", "--k", "2", "--n", "8"], "14\n"),
    (["formula", "--k", "4", "--n", "9"], "19\n"),
    (["formula", "--k", "1", "--n", "11"], "19\n"),
    (["formula", "--k", "6", "--n", "10"], "30\n"),
    (["formula", "--k", "4", "--range", "8:10"], "n\tf\tregime\n8\t16\tfour_connected\n9\t19\tfour_connected\n10\t21\tfour_connected\n"),
])
def test_formula(argv, expected):
    assert invoke(argv) == (0, expected)

@pytest.mark.parametrize("argv", [
    ["formula", "--k", "3", "--n", "10"],
    ["formula", "--k", "2", "--n", "7"],
    ["formula", "--k", "2"],
    ["formula", "--k", "2", "--range", "8-10"],
    ["frobnicate"],
    [],
    ["verify-min", "--k", "2", "--n", "12"],
    ["lemma1", "--n", "3"],
])
def test_usage_errors(argv):
    assert invoke(argv)[0] == 2

def test_check(tmp_path):
    assert invoke(["check", "--property", "locally-nonforesty"], "D~{\n") == (0, "true\n")
    assert invoke(["check", "--property", "locally-nonforesty", "-"], "D~{\nIheA@GUAo\n") == (1, "true\nfalse\n")
    assert invoke(["check", "--property", "connectivity"], "IheA@GUAo\nD~{\n") == (0, "3\n4\n")
    assert invoke(["check", "--property", "k-connected", "--k", "4"], "D~{\n") == (0, "true\n")
    assert invoke(["check", "--property", "k-connected"], "D~{\n")[0] == 2
    assert invoke(["check", "--property", "locally-foresty"], "IheA@GUAo\n") == (0, "true\n")
    assert invoke(["check", "--property", "conjecture1"], "D~{\n") == (0, "true\n")
    assert invoke(["check", "--property", "lemma1-local"], "D~{\n") == (1, "false\n")
    assert invoke(["check", "--property", "connectivity"], "not graph6\n")[0] == 2
    path = tmp_path / "in.g6"
    path.write_text("D~{\n")
    assert invoke(["check", "--property", "locally-nonforesty", str(path)]) == (0, "true\n")

def test_blocks():
    ## Two triangles sharing vertex 2
    code, out = invoke(["blocks"], "DxK\n")
    assert code == 0
    assert out == "block\t0,1,2\nblock\t2,3,4\ncut_vertices\t2\nt\t3\t2\n"

def test_build_and_conjecture1(catalog):
    code, out = invoke(["build", "--k", "4", "--n", "8", "--catalog", catalog])
    assert code == 0
    code, checked = invoke(["check", "--property", "lemma1-local"], out)
    assert (code, checked) == (0, "true\n")
    code, out = invoke(["build", "--k", "2", "--n", "9", "--format", "edgelist", "--catalog", catalog])
    assert code == 0 and out.startswith("9 17\n")
    code, out = invoke(["conjecture1", "--k", "4", "--n", "12", "--catalog", catalog])
    assert code == 0
    assert out == (
        "n: 12\nm: 24\nbound: 77/3\nthree_connected: true\nlocally_nonforesty: true\nconjecture: violated\n"
    )
    assert invoke(["build", "--k", "5", "--n", "12", "--catalog", catalog])[0] == 2

def test_gadget(catalog):
    code, out = invoke(["gadget", "--name", "A", "--context", "k1"])
    assert code == 0
    assert out == "A k1\n4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\nports 0 1 2 3\n"
    code, out = invoke(["gadget", "--name", "B1", "--context", "k2", "--catalog", catalog])
    assert code == 0 and out.startswith("B1 k2\n5 9\n")
    assert invoke(["gadget", "--name", "D1", "--context", "k2", "--catalog", catalog])[0] == 2

def test_verify_min():
    code, out = invoke(["verify-min", "--k", "2", "--n", "8"])
    assert code == 0
    lines = out.splitlines()
    assert lines[:4] == ["k: 2", "n: 8", "budget: 13", "formula: 14"]
    assert "witness: none" in lines and "certified: true" in lines
    code, out = invoke(["verify-min", "--k", "1", "--n", "8", "--budget", "13"])
    assert code == 0 and "witness_size: 13" in out.splitlines()

def test_lemma1():
    assert invoke(["lemma1", "--n", "9"]) == (0, "0\n")

def test_codec_converter(tmp_path, monkeypatch, capsys):
    path = tmp_path / "in.g6"
    path.write_text("A_\n")
    monkeypatch.setattr(sys, "argv", ["codec", str(path)])
    runpy.run_module("nonforesty.codec", run_name="__main__")
    assert capsys.readouterr().out == "2 1\n0 1\n"

def test_check_streams_before_bad_line():
    assert invoke(["check", "--property", "locally-nonforesty"], "D~{\nbad!\nD~{\n") == (2, "true\n")
    code, out = invoke(["blocks"], "DxK\nbad!\n")
    assert code == 2 and out.startswith("block\t0,1,2\n")
