"""Acceptance criteria, one test per criterion; each prints a PASS/FAIL line."""

from __future__ import annotations

import time
from math import gcd

import pytest

from conftest import complete, cycle
from nplusline.classify import (
    ClassKind,
    ForbiddenKind,
    classify_hypomatchable,
    decide_line_nplus_perfect,
    is_h_perfect_line,
)
from nplusline.corpus import (
    connected_multigraphs,
    random_multigraphs,
    random_simple_graphs,
    random_two_connected_hypomatchable,
    two_connected_hypomatchable_graphs,
    with_doubled_edges,
)
from nplusline.eardecomp import two_connected_ear_decomposition, validate_decomposition, wagler_normalize
from nplusline.families import (
    antiweb,
    gemn,
    glt,
    is_prime_antiweb,
    odd_hole,
    odd_hole_plus_chord,
    odd_hole_plus_double,
    odd_hole_plus_path,
)
from nplusline.linegraph import canonical_stretch, line_graph, three_subdivision
from nplusline.matching import exhaustive_maximum_matching, is_hypomatchable, is_matching, maximum_matching
from nplusline.multigraph import are_isomorphic, is_odd_hole, is_two_connected
from nplusline.polytope import FacetKind, is_joined_a_perfect, verify_edmonds_description

SEED = 2024


def report(record, name: str, ok: bool, detail: str) -> None:
    record(name, ok, detail)
    print(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")


# -- shared corpora ------------------------------------------------------------


@pytest.fixture(scope="module")
def hypomatchable_corpus():
    """Reduced stand-in for the exhaustive 5..9 node corpus (see the decisions ledger).

    All multiplicity patterns at 5 nodes, up to two doubled edges at 7 nodes,
    and seeded random samples at 9 nodes.
    """
    base = two_connected_hypomatchable_graphs(7, 5)
    corpus = [g for s in base if s.n == 5 for g in with_doubled_edges(s)]
    corpus += [g for s in base if s.n == 7 for g in with_doubled_edges(s, 2)]
    corpus += random_two_connected_hypomatchable(2000, 9, seed=SEED)
    return corpus


@pytest.fixture(scope="module")
def small_connected():
    """Every connected loopless multigraph with at most seven edges."""
    return connected_multigraphs(7, max_multiplicity=7)


@pytest.fixture(scope="module")
def edmonds_reports(small_connected):
    start = time.perf_counter()
    reports = [verify_edmonds_description(h) for h in small_connected]
    return reports, time.perf_counter() - start


# -- criteria ------------------------------------------------------------------


def test_criterion_1_smallest_obstructions(record_criterion):
    start = time.perf_counter()
    lt = line_graph(odd_hole_plus_double(2)).graph
    emn = line_graph(odd_hole_plus_chord(2, 2)).graph
    # independent descriptions: C5 plus an apex on 3 (resp. 4) consecutive hole nodes
    lt_hand = cycle(5).add_edges([(5, 0), (5, 1), (5, 2)])
    emn_hand = cycle(5).add_edges([(5, 0), (5, 1), (5, 2), (5, 3)])
    ok = (
        lt.n == emn.n == 6
        and are_isomorphic(lt, glt())
        and are_isomorphic(emn, gemn())
        and are_isomorphic(lt, lt_hand)
        and are_isomorphic(emn, emn_hand)
        and not are_isomorphic(lt, emn)
    )
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < 1.0
    report(record_criterion, "1 smallest obstructions", ok, f"{elapsed:.3f}s")
    assert ok


def test_criterion_2_subdivision_equals_stretching(record_criterion):
    start = time.perf_counter()
    graphs = random_simple_graphs(200, 8, seed=SEED)
    checked = failed = 0
    for h in graphs:
        for e in h.edges:
            checked += 1
            if not are_isomorphic(line_graph(three_subdivision(h, e.id)).graph, canonical_stretch(h, e.id)):
                failed += 1
    elapsed = time.perf_counter() - start
    ok = len(graphs) == 200 and failed == 0 and elapsed < 30
    report(record_criterion, "2 3-subdivision vs canonical stretch", ok, f"{checked - failed}/{checked} edges, {elapsed:.1f}s")
    assert ok


def test_criterion_3_normalised_decompositions(record_criterion, hypomatchable_corpus):
    start = time.perf_counter()
    failed = 0
    for h in hypomatchable_corpus:
        d = wagler_normalize(two_connected_ear_decomposition(h))
        if not (validate_decomposition(h, d, require_two_connected=True) and len(d.h0) >= 5):
            failed += 1
    elapsed = time.perf_counter() - start
    n = len(hypomatchable_corpus)
    reduced_ok = failed == 0 and elapsed < 300
    # the literal criterion asks for an exhaustive corpus, which is out of reach
    report(
        record_criterion,
        "3 normalised 2-connected ear decompositions",
        False,
        f"reduced corpus {n - failed}/{n} valid in {elapsed:.1f}s; exhaustive 5-9 node corpus not enumerated",
    )
    assert reduced_ok


def literal_witness_problems(h, c) -> list[str]:
    """Check that a Forbidden witness is an odd hole plus exactly one ear of the stated kind."""
    w = c.witness
    problems = []
    hole = h.edge_subgraph(w.hole_edges, w.hole)
    if not is_odd_hole(hole) or len(w.hole) < 5:
        problems.append("hole")
    a, b = w.ear.endpoints
    if a == b or a not in w.hole or b not in w.hole or set(w.ear.internal) & set(w.hole):
        problems.append("ear attachment")
    for i, eid in enumerate(w.ear.edges):
        e = h.edge(eid)
        if {e.u, e.v} != {w.ear.path[i], w.ear.path[i + 1]}:
            problems.append("ear edges")
    k = len(w.hole)
    pos = {v: i for i, v in enumerate(w.hole)}
    adjacent = (pos[a] - pos[b]) % k in (1, k - 1) if a in pos and b in pos else False
    if c.forbidden is ForbiddenKind.DOUBLE_EDGE and not (w.ear.length == 1 and adjacent):
        problems.append("double edge")
    if c.forbidden is ForbiddenKind.CHORD and not (w.ear.length == 1 and not adjacent):
        problems.append("chord")
    if c.forbidden is ForbiddenKind.LONG_EAR and not (w.ear.length >= 3 and w.ear.length % 2 and not adjacent):
        problems.append("long ear")
    return problems


def test_criterion_4_trichotomy(record_criterion, hypomatchable_corpus):
    start = time.perf_counter()
    failed = 0
    counts = {kind: 0 for kind in ClassKind}
    for h in hypomatchable_corpus:
        c = classify_hypomatchable(h)
        counts[c.kind] += 1
        expected = ClassKind.THREE_NODES if h.n == 3 else ClassKind.ODD_HOLE if is_odd_hole(h) else ClassKind.FORBIDDEN
        if c.kind is not expected:
            failed += 1
        elif c.is_forbidden and literal_witness_problems(h, c):
            failed += 1
    elapsed = time.perf_counter() - start
    n = len(hypomatchable_corpus)
    detail = ", ".join(f"{k.value}={v}" for k, v in counts.items())
    report(
        record_criterion,
        "4 trichotomy",
        False,
        f"reduced corpus {n - failed}/{n} ({detail}) in {elapsed:.1f}s; exhaustive corpus not enumerated",
    )
    assert failed == 0


@pytest.mark.xfail(reason="exhaustive 5-9 node multigraph corpus has on the order of 1e11 isomorphism classes", run=False, strict=True)
def test_criterion_3_and_4_exhaustive_corpus():
    raise AssertionError("not enumerable")


def test_criterion_5_edmonds_oracle(record_criterion, small_connected, edmonds_reports):
    reports, elapsed = edmonds_reports
    failed = sum(1 for r in reports if not r.passed)
    other = sum(1 for r in reports for cf in r.facets if cf.facet_class.kind is FacetKind.OTHER)
    # every rank facet beyond cliques carries a root witness checked for 2-connectivity and hypomatchability
    witness_bad = 0
    for h, r in zip(small_connected, reports):
        for cf in r.facets:
            w = cf.facet_class.witness
            if cf.facet_class.kind in (FacetKind.HYPOMATCHABLE_LINE_RANK, FacetKind.ODD_HOLE_RANK):
                sub = h.edge_subgraph(w["root_edges"], w["root_nodes"])
                if not (is_two_connected(sub) and is_hypomatchable(sub)):
                    witness_bad += 1
    n = len(small_connected)
    ok = n == 489 and failed == 0 and other == 0 and witness_bad == 0 and elapsed < 600
    report(record_criterion, "5 facet classes of STAB(L(h))", ok, f"{n - failed}/{n} graphs, Other={other}, {elapsed:.1f}s")
    assert ok


def test_criterion_6_nplus_perfect_iff_h_perfect(record_criterion, small_connected, edmonds_reports):
    reports, _ = edmonds_reports
    disagree = sum(
        1 for h, r in zip(small_connected, reports) if decide_line_nplus_perfect(h).perfect != r.h_perfect
    )
    perfect = sum(1 for r in reports if r.h_perfect)
    n = len(small_connected)
    ok = disagree == 0
    report(record_criterion, "6 N+-perfect iff h-perfect", ok, f"{n - disagree}/{n} agree, {perfect} h-perfect")
    assert ok


@pytest.mark.parametrize("name", ["C5+d", "C5+c", "C5+E3", "C7+c"])
def test_criterion_7_minimality(record_criterion, name):
    h = {
        "C5+d": odd_hole_plus_double(2),
        "C5+c": odd_hole_plus_chord(2, 2),
        "C5+E3": odd_hole_plus_path(2, 3, 2),
        "C7+c": odd_hole_plus_chord(3, 2),
    }[name]
    cert = decide_line_nplus_perfect(h)
    whole = (
        not cert.perfect
        and set(cert.witness_root.nodes) == set(h.nodes)
        and set(cert.witness_root.edge_ids) == set(h.edge_ids)
    )
    deletions = [decide_line_nplus_perfect(h.remove_edges([e.id])).perfect for e in h.edges]
    ok = whole and all(deletions)
    report(record_criterion, f"7 minimality {name}", ok, f"witness=h: {whole}, {sum(deletions)}/{len(deletions)} deletions perfect")
    assert ok


def test_criterion_8_joined_a_perfect(record_criterion, small_connected):
    start = time.perf_counter()
    disagree = 0
    for h in small_connected:
        if is_joined_a_perfect(line_graph(h).graph) != is_h_perfect_line(h):
            disagree += 1
    elapsed = time.perf_counter() - start
    n = len(small_connected)
    ok = disagree == 0
    report(record_criterion, "8 joined a-perfect iff h-perfect", ok, f"{n - disagree}/{n} agree, {elapsed:.1f}s")
    assert ok


def test_criterion_9_antiweb_identities(record_criterion):
    complete_ok = all(are_isomorphic(antiweb(n, 1), complete(n)) for n in range(3, 9))
    hole_ok = all(are_isomorphic(antiweb(2 * k + 1, k), odd_hole(k)) for k in range(2, 6))
    prime_ok = all(
        is_prime_antiweb(n, k) == (gcd(k + 1, n) == 1) for n in range(2, 13) for k in range(1, n // 2 + 1)
    )
    ok = complete_ok and hole_ok and prime_ok
    report(record_criterion, "9 antiweb identities", ok, f"K_n {complete_ok}, C_2k+1 {hole_ok}, prime {prime_ok}")
    assert ok


def test_criterion_10_matching_oracle(record_criterion):
    start = time.perf_counter()
    corpus = random_multigraphs(500, 9, seed=SEED)
    failed = 0
    for g in corpus:
        m = maximum_matching(g)
        if not is_matching(g, m) or len(m) != len(exhaustive_maximum_matching(g)):
            failed += 1
    elapsed = time.perf_counter() - start
    ok = len(corpus) == 500 and failed == 0 and elapsed < 60
    report(record_criterion, "10 blossom vs exhaustive matching", ok, f"{500 - failed}/500, {elapsed:.1f}s")
    assert ok
