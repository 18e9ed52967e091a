import json
import shutil
import subprocess
import sys

import pytest

from twyang.cli import main

EXE = shutil.which("twyang")


def run(*args):
    cmd = [EXE] if EXE else [sys.executable, "-m", "twyang.cli"]
    p = subprocess.run(cmd + list(args), capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def test_kgraph_text():
    code, out, _ = run("kgraph", "--pair", "f4/b4", "--vrep", "4")
    assert (code, out.strip()) == (0, "(λ1) <-1- (λ4) -9-> (0)")


def test_kgraph_ascii():
    code, out, _ = run("kgraph", "--pair", "f4/b4", "--vrep", "4", "--ascii")
    assert code == 0 and out.isascii()


def test_kgraph_json():
    code, out, _ = run("kgraph", "--pair", "e6/f4", "--vrep", "1", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and len(doc["nodes"]) == 2
    assert [(e["delta_num"], e["delta_den"]) for e in doc["edges"]] == [(12, 1)]


def test_multiplicity_failure_exit_3():
    code, _, err = run("kgraph", "--pair", "so12/su6xu1", "--vrep", "3")
    assert code == 3
    assert "λ" in err  # the offending irrep is named


def test_unknown_vrep_exit_5():
    assert run("kgraph", "--pair", "e7/a7", "--vrep", "3")[0] == 5


@pytest.mark.parametrize("args", [
    ("pairs", "--g", "x9"),
    ("kgraph", "--pair", "nonsense", "--vrep", "1"),
    ("kgraph", "--pair", "f4/b4", "--vrep", "9"),
    ("casimir", "--g", "b4", "--weight", "1,2"),
    ("magic", "--row", "5", "--m", "1"),
])
def test_bad_arguments_exit_2(args):
    assert main(list(args)) == 2


def test_pairs_listing():
    code, out, _ = run("pairs")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 19
    assert all("sum=1/2" in l for l in lines)
    code, out, _ = run("pairs", "--g", "f4")
    assert [l.split()[0] for l in out.strip().splitlines()] == ["FI", "FII"]


def test_misc_examples(capsys):
    assert main(["casimir", "--g", "b4", "--weight", "0,0,0,1"]) == 0
    assert capsys.readouterr().out.strip() == "9"
    assert main(["check-symmetric-space", "--pair", "g2/a1xa1"]) == 0
    assert capsys.readouterr().out.strip() == "1/2"
    assert main(["dim", "--g", "e7", "--weight", "0,0,0,0,0,0,1"]) == 0
    assert capsys.readouterr().out.strip() == "56"
    assert main(["tensor", "--g", "a2", "--weight", "1,0", "--weight", "0,1"]) == 0
    assert capsys.readouterr().out.splitlines() == ["1 x (λ1+λ2)  dim 8", "1 x (0)  dim 1"]
    assert main(["branch", "--pair", "f4/b4", "--weight", "0,0,0,1"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 3


def test_truncations_example(capsys):
    assert main(["truncations", "--pair", "so10/so3xso7", "--vrep", "2"]) == 0
    out = capsys.readouterr().out
    assert "(λ2,0)" in out and "(0,λ2)" in out


def test_spectral(capsys):
    assert main(["spectral", "--pair", "f4/b4", "--vrep", "4", "--at", "1/3"]) == 0
    out = capsys.readouterr().out
    assert "(λ1): tau = [1]  at θ = 1/3 iπ: -7/5" in out


def test_verify_magic_scope(capsys):
    code = main(["verify", "--scope", "magic"])
    out = capsys.readouterr().out
    assert code == (1 if "\nFAIL" in "\n" + out else 0)
    assert "FLAGGED magic row 2 m=4" in out


def test_output_is_deterministic():
    args = ("kgraph", "--pair", "e7/a7", "--vrep", "2", "--format", "dot")
    assert run(*args) == run(*args)
