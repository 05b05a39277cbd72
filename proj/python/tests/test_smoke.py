import os
import subprocess

import pytest

import fgs


def test_pentagon_graph():
    g = fgs.whitehead_graph("xy", ["xxyy"])
    assert len(g["edges"]) == 5


def test_subbasis_verdicts():
    assert fgs.is_subbasis("xy", ["xxy"])["is_subbasis"] is True
    assert fgs.is_subbasis("xy", ["xxyy"])["is_subbasis"] is False


def test_closure_and_reduce():
    assert len(fgs.closure_basis("xy", ["xxy"])) == 1
    assert fgs.reduce("xy", [""])["steps"] == []


def test_core_and_cuts():
    c = fgs.core("xy", ["xx", "y"])
    assert c["vertices"] == 2 and len(c["edges"]) == 3
    assert len(fgs.cuts("xy")) > 0
    b = fgs.boundary("xy", ["xx", "y"], 0)
    assert b["fold_merges"] == 0
    assert b["output_edges"] <= b["input_edges"]


@pytest.mark.parametrize("words,best", [(["xxyy"], 0), (["xx", "y"], 1), (["x", "y"], 2)])
def test_sandwich(words, best):
    r = fgs.sandwich("xy", words)
    assert r["best_count"] == best
    assert r["upper_rank"] == 2


def test_explore_lines():
    nodes = fgs.explore("xy", ["xx", "y"])
    assert len(nodes) == 34
    assert nodes[0]["parent"] is None


def test_errors():
    with pytest.raises(ValueError):
        fgs.core("xy", ["xq"])
    with pytest.raises(RuntimeError):
        fgs.explore("xy", ["xx", "y"], budget=2)


def test_run_matches_cli():
    code, out, _ = fgs.run(["sandwich", "--gens", "xy", "--words", "xxyy"])
    assert code == 0
    exe = os.environ.get("FGS_CLI")
    if exe:
        proc = subprocess.run([exe, "sandwich", "--gens", "xy", "--words", "xxyy"], capture_output=True, text=True)
        assert proc.returncode == 0
        assert proc.stdout == out
