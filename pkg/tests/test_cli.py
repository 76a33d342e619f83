from __future__ import annotations

import json
import subprocess
import sys

import pytest

from conftest import cycle
from nplusline.cli import dump, main
from nplusline.families import antiweb, gemn, glt, odd_hole_plus_chord
from nplusline.multigraph import are_isomorphic, read_edge_list, write_edge_list


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def c5c(tmp_path):
    path = tmp_path / "c5c.txt"
    write_edge_list(odd_hole_plus_chord(2, 2), path)
    return str(path)


def test_generate_chord_file(capsys, tmp_path):
    out = tmp_path / "g.txt"
    code, _, _ = run(capsys, "generate", "odd-hole-plus-chord", "--k", "2", "--span", "2", "-o", str(out))
    assert code == 0
    assert read_edge_list(out) == odd_hole_plus_chord(2, 2)


def test_generate_antiweb_and_glt(capsys, tmp_path):
    out = tmp_path / "a.txt"
    assert run(capsys, "generate", "antiweb", "--n", "9", "--k", "4", "-o", str(out))[0] == 0
    assert are_isomorphic(read_edge_list(out), cycle(9))
    code, text, _ = run(capsys, "generate", "glt")
    assert code == 0 and text.startswith("# glt")
    path = tmp_path / "glt.txt"
    path.write_text(text)
    assert are_isomorphic(read_edge_list(path), glt())


def test_generate_degenerate_antiweb_warns(capsys):
    code, _, err = run(capsys, "generate", "antiweb", "--n", "4", "--k", "3")
    assert code == 0 and "degenerate" in err


def test_generate_invalid_parameters(capsys):
    code, _, err = run(capsys, "generate", "odd-hole-plus-path", "--length", "4")
    assert code == 2 and "odd" in err


def test_certify_imperfect(capsys, c5c):
    code, text, _ = run(capsys, "certify", c5c)
    assert code == 1
    report = json.loads(text)
    assert report["certificate"]["family"]["kind"] == "C+c"
    assert report["input"] == {"n": 5, "m": 6, "parallel_edges": 0}
    assert report["verdicts"] == {"nplus_perfect": False, "h_perfect": False, "joined_a_perfect": False}
    assert "seconds" in report["timing"]


@pytest.mark.parametrize("n", [7, 6])
def test_certify_perfect_cycles(capsys, tmp_path, n):
    path = tmp_path / "c.txt"
    write_edge_list(cycle(n), path)
    code, text, _ = run(capsys, "certify", str(path), "--json")
    assert code == 0
    assert "\n" not in text.strip()
    report = json.loads(text)
    assert report["verdicts"]["nplus_perfect"] is True and report["verdicts"]["h_perfect"] is True


def test_certify_skips_hull_beyond_limit(capsys, tmp_path):
    path = tmp_path / "c.txt"
    write_edge_list(cycle(15), path)
    code, text, _ = run(capsys, "certify", str(path), "--facets")
    report = json.loads(text)
    assert code == 0
    assert report["verdicts"]["h_perfect"] == "skipped: limit"
    assert report["facets"] == "skipped: limit"


def test_certify_errors(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n0 7\n")
    assert run(capsys, "certify", str(bad))[0] == 2
    assert run(capsys, "certify", str(tmp_path / "missing.txt"))[0] == 2
    big = tmp_path / "big.txt"
    write_edge_list(cycle(21), big)
    code, _, err = run(capsys, "certify", str(big))
    assert code == 2 and "limit" in err


def test_report_round_trip(capsys, c5c):
    _, text, _ = run(capsys, "certify", c5c, "--facets")
    report = json.loads(text)
    assert dump(report) + "\n" == text


def test_facets_counts(capsys, tmp_path):
    path = tmp_path / "c5.txt"
    write_edge_list(cycle(5), path)
    code, text, _ = run(capsys, "facets", str(path))
    assert code == 0 and len(json.loads(text)) == 11
    write_edge_list(antiweb(3, 1), path)
    assert len(json.loads(run(capsys, "facets", str(path))[1])) == 4


def test_facets_with_root(capsys, tmp_path, c5c):
    g = tmp_path / "gemn.txt"
    write_edge_list(gemn(), g)
    code, text, _ = run(capsys, "facets", str(g), "--root", c5c)
    assert code == 0
    rows = json.loads(text)
    full = [r for r in rows if r["a"] == [1] * 6]
    assert full and full[0]["class"] == "HypomatchableLineRank" and full[0]["b"] == 2
    plain = json.loads(run(capsys, "facets", str(g), "--root", c5c, "--line-graph-only")[1])
    assert {r["class"] for r in plain} == {"Nonnegativity", "Clique", "FullRank"}


def test_facets_needs_input(capsys):
    assert run(capsys, "facets")[0] == 2


def test_verify(capsys):
    code, text, _ = run(capsys, "verify", "--max-edges", "5", "--edmonds", "--corollary2")
    summary = json.loads(text)
    assert code == 0
    assert summary["corpus_size"] == 43
    assert summary["checks"]["edmonds"] == {"passed": 43, "failed": 0}
    assert set(summary["checks"]) == {"edmonds", "corollary2"}


def test_verify_joined_a_with_jobs(capsys):
    code, text, _ = run(capsys, "verify", "--max-edges", "4", "--joined-a", "--jobs", "2", "--random", "5", "--seed", "1")
    assert code == 0
    assert json.loads(text)["checks"]["joined_a"]["failed"] == 0


def test_verify_limit(capsys):
    assert run(capsys, "verify", "--max-edges", "12")[0] == 2


def test_module_entry_point(tmp_path):
    path = tmp_path / "c7.txt"
    write_edge_list(cycle(7), path)
    proc = subprocess.run([sys.executable, "-m", "nplusline", "certify", str(path)], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["certificate"] == {"verdict": "perfect"}
