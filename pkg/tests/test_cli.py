import json
import subprocess
import sys

import pytest

from deltagraph.cli import main
from deltagraph.graph import decode_graph6, encode_graph6
from deltagraph.constructions import cycle, path
from deltagraph.invariants import analyze


def g6(g):
    return encode_graph6(g).decode("ascii")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_cycle(capsys):
    code, out, _ = run(capsys, "analyze", g6(cycle(4)))
    assert code == 0
    assert out.splitlines() == ["n=4", "f=0 d=2 k=2 phi=4", "free: -"]


def test_analyze_from_file(tmp_path, capsys):
    p = tmp_path / "g.g6"
    p.write_bytes(encode_graph6(cycle(8)) + b"\n")
    code, out, _ = run(capsys, "analyze", str(p))
    assert code == 0
    assert "f=0 d=4 k=2 phi=6" in out


def test_analyze_lists_free_vertices(capsys):
    code, out, _ = run(capsys, "analyze", g6(path(3)))
    assert code == 0
    assert out.splitlines()[-1] == "free: 1 3"


def test_analyze_errors(capsys):
    assert run(capsys, "analyze", "A?")[0] == 3
    assert run(capsys, "analyze", "!!")[0] == 2


@pytest.mark.parametrize(
    "argv,code,text",
    [
        (["8", "0", "2", "1"], 1, "INFEASIBLE PHI3_SMALL_N"),
        (["12", "3", "4", "3"], 0, "FEASIBLE MAIN_BOUND"),
        (["11", "3", "4", "3"], 1, "INFEASIBLE MAIN_BOUND"),
    ],
)
def test_check(capsys, argv, code, text):
    rc, out, _ = run(capsys, "check", *argv)
    assert rc == code and out.strip() == text


def test_check_small_n(capsys):
    rc, _, err = run(capsys, "check", "7", "0", "2", "1")
    assert rc == 4 and "census" in err


def test_build_formats(capsys):
    rc, out, _ = run(capsys, "build", "9", "0", "2", "1")
    assert rc == 0
    assert analyze(decode_graph6(out.strip())).delta == (0, 2, 1)
    rc, out, _ = run(capsys, "build", "9", "0", "2", "1", "--format", "json")
    assert rc == 0 and json.loads(out)["n"] == 9
    rc, out, _ = run(capsys, "build", "9", "0", "2", "1", "--format", "dot")
    assert rc == 0 and out.startswith("graph G {")


def test_build_recipe(capsys):
    rc, out, _ = run(capsys, "build", "8", "1", "6", "1", "--recipe")
    assert rc == 0
    assert "family: four-cycle-with-pendant-path" in out
    rc, out, _ = run(capsys, "build", "8", "1", "6", "1", "--format", "json", "--recipe")
    first, second = out.splitlines()
    assert json.loads(second)["family_tag"] == "four-cycle-with-pendant-path"


def test_build_errors(capsys):
    assert run(capsys, "build", "8", "4", "2", "5")[0] == 1
    assert run(capsys, "build", "7", "0", "2", "1")[0] == 4
    assert run(capsys, "build", "8", "-1", "2", "1")[0] == 2


def test_census(tmp_path, capsys):
    rc, out, _ = run(capsys, "census", "4")
    assert rc == 0 and out.splitlines()[0] == "n,f,d,k,count,sample_graph6,universe"
    target = tmp_path / "c.csv"
    assert run(capsys, "census", "5", "--mode", "labeled", "--out", str(target))[0] == 0
    assert target.read_text().count("LABELED_ALL") >= 1
    assert run(capsys, "census", "8", "--mode", "labeled")[0] == 4
    assert run(capsys, "census", "9", "--mode", "sampled")[0] == 2
    rc, out, _ = run(capsys, "census", "9", "--mode", "sampled", "--seed", "1", "--draws", "20")
    assert rc == 0 and "SAMPLED(seed=1;draws=20)" in out


def test_verify_range(capsys):
    rc, out, _ = run(capsys, "verify-range", "8", "9")
    assert rc == 0
    assert out.splitlines()[-1].endswith(": 0 mismatches")
    assert run(capsys, "verify-range", "7", "9")[0] == 4


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "deltagraph", "check", "9", "0", "2", "1"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "FEASIBLE K1_F0"
