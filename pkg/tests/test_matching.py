from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings

from conftest import complete, cycle, graph, path
from nplusline.corpus import random_multigraphs
from nplusline.errors import ResourceLimitError
from nplusline.families import odd_hole_plus_chord
from nplusline.matching import (
    blossom_mates,
    exhaustive_maximum_matching,
    has_perfect_matching,
    hypomatchability_violation,
    is_hypomatchable,
    is_matching,
    matching_number,
    maximum_matching,
)
from nplusline.multigraph import Multigraph
from test_multigraph import multigraphs


def brute_force_matching_number(g: Multigraph) -> int:
    edges = [(e.u, e.v) for e in g.edges]
    for k in range(g.n // 2, 0, -1):
        for combo in itertools.combinations(edges, k):
            ends = [x for e in combo for x in e]
            if len(set(ends)) == 2 * k:
                return k
    return 0


def test_matching_number_examples():
    assert matching_number(cycle(9)) == 4
    assert matching_number(complete(4)) == 2
    c5c = odd_hole_plus_chord(2, 2)
    assert matching_number(c5c) == brute_force_matching_number(c5c) == 2


def test_perfect_matching_examples():
    assert has_perfect_matching(cycle(6))
    assert not has_perfect_matching(cycle(5))
    assert has_perfect_matching(path(4))
    assert has_perfect_matching(Multigraph([]))


def test_hypomatchable_examples():
    c5c = odd_hole_plus_chord(2, 2)
    for v in c5c.nodes:
        assert brute_force_matching_number(c5c.remove_nodes([v])) == 2
    assert is_hypomatchable(c5c)
    assert not is_hypomatchable(cycle(6))
    assert is_hypomatchable(cycle(9))
    assert is_hypomatchable(graph(3, (0, 1), (0, 1), (1, 2), (2, 0)))
    assert is_hypomatchable(Multigraph([0]))


def test_hypomatchability_violation_names_a_node():
    g = graph(5, (0, 1), (1, 2), (2, 0), (2, 3), (3, 4))
    v = hypomatchability_violation(g)
    assert v is not None and not has_perfect_matching(g.remove_nodes([v]))
    assert hypomatchability_violation(cycle(7)) is None


def test_blossom_mates_are_symmetric():
    adj = [[1, 4], [0, 2], [1, 3], [2, 4], [3, 0]]
    mates = blossom_mates(5, adj)
    assert sum(m >= 0 for m in mates) == 4
    assert all(m < 0 or mates[m] == i for i, m in enumerate(mates))


@settings(max_examples=300, deadline=None)
@given(multigraphs(max_nodes=9))
def test_blossom_matches_exhaustive(g):
    m = maximum_matching(g)
    assert is_matching(g, m)
    assert len(m) == len(exhaustive_maximum_matching(g)) == brute_force_matching_number(g)


@settings(max_examples=150, deadline=None)
@given(multigraphs(max_nodes=7))
def test_hypomatchable_matches_definition(g):
    expected = g.n % 2 == 1 and all(
        brute_force_matching_number(g.remove_nodes([v])) * 2 == g.n - 1 for v in g.nodes
    )
    assert is_hypomatchable(g) == expected


def test_is_matching_rejects_shared_endpoints_and_unknown_edges():
    g = path(3)
    assert is_matching(g, {0})
    assert not is_matching(g, {0, 1})
    assert not is_matching(g, {5})


def test_exhaustive_limit():
    with pytest.raises(ResourceLimitError):
        exhaustive_maximum_matching(complete(13))


def test_random_corpus_agreement():
    for g in random_multigraphs(100, 9, seed=2):
        assert len(maximum_matching(g)) == len(exhaustive_maximum_matching(g))
