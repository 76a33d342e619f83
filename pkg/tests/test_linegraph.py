from __future__ import annotations

import pytest

from conftest import complete, cycle, graph, path
from nplusline.corpus import random_simple_graphs
from nplusline.errors import GraphInputError
from nplusline.families import gemn, glt, odd_hole_plus_chord, odd_hole_plus_double, odd_hole_plus_path
from nplusline.linegraph import (
    StretchSpec,
    canonical_stretch,
    incidence_cliques,
    line_graph,
    stretch_node,
    three_subdivision,
)
from nplusline.multigraph import Multigraph, are_isomorphic


def c5_with_apex(neighbours: list[int]) -> Multigraph:
    """Hand-built C5 on 0..4 plus node 5 joined to ``neighbours``."""
    return cycle(5).add_edges([(5, v) for v in neighbours])


def test_line_graph_of_c5_plus_chord_is_c5_with_apex_on_four_consecutive_nodes():
    lg = line_graph(odd_hole_plus_chord(2, 2)).graph
    assert lg.n == 6
    assert are_isomorphic(lg, c5_with_apex([0, 1, 2, 3]))
    assert are_isomorphic(lg, gemn())


def test_line_graph_of_c5_plus_double_is_c5_with_apex_on_three_consecutive_nodes():
    lg = line_graph(odd_hole_plus_double(2)).graph
    assert lg.n == 6
    assert are_isomorphic(lg, c5_with_apex([0, 1, 2]))
    assert are_isomorphic(lg, glt())
    assert not are_isomorphic(gemn(), glt())


def test_line_graph_examples():
    c7 = line_graph(cycle(7)).graph
    assert set(c7.pairs()) == {tuple(sorted(p)) for p in cycle(7).pairs()}
    assert set(line_graph(graph(4, (0, 1), (0, 2), (0, 3))).graph.pairs()) == set(complete(3).pairs())
    with pytest.raises(GraphInputError):
        line_graph(Multigraph([0, 1]))


def test_line_graph_node_order_and_parallel_edges():
    h = graph(3, (0, 1), (0, 1), (1, 2))
    lg = line_graph(h)
    assert lg.edge_to_node == {0: 0, 1: 1, 2: 2}
    assert lg.graph.is_simple and lg.graph.m == 3
    assert lg.line_nodes([2, 0]) == [0, 2]
    assert lg.node_to_edge == {0: 0, 1: 1, 2: 2}


def test_line_graph_degree_formula():
    # deg_L(uv) = deg(u) + deg(v) - 2 in a simple root
    for h in random_simple_graphs(30, 7, seed=5):
        lg = line_graph(h)
        for e in h.edges:
            node = lg.edge_to_node[e.id]
            assert len(lg.graph.neighbors(node)) == h.degree(e.u) + h.degree(e.v) - 2


def test_stretch_triangle_gives_c5():
    g = complete(3)
    s = stretch_node(g, StretchSpec(0, [1], [2]))
    assert s.n == 5 and are_isomorphic(s, cycle(5))
    assert s.neighbors(0) == frozenset({1, 3})


def test_stretch_path_centre_gives_p5():
    s = stretch_node(path(3), StretchSpec(1, [0], [2]))
    assert are_isomorphic(s, path(5))


def test_stretch_chord_node_of_gemn_gives_line_graph_of_c5_plus_e3():
    h = odd_hole_plus_chord(2, 2)
    lg = line_graph(h)
    chord = lg.edge_to_node[5]
    u1, u2 = incidence_cliques(h, 5, lg)
    assert u1 | u2 == lg.graph.neighbors(chord)
    s = stretch_node(lg.graph, StretchSpec(chord, u1, u2))
    assert are_isomorphic(s, line_graph(odd_hole_plus_path(2, 3, 2)).graph)


@pytest.mark.parametrize(
    "a1,a2",
    [([], [1, 2]), ([1], [1, 2]), ([1], [2, 3]), ([1], [])],
)
def test_stretch_rejects_invalid_partitions(a1, a2):
    with pytest.raises(GraphInputError):
        stretch_node(complete(3), StretchSpec(0, a1, a2))


def test_stretch_rejects_multigraphs_and_unknown_nodes():
    with pytest.raises(GraphInputError):
        stretch_node(graph(3, (0, 1), (0, 1), (0, 2)), StretchSpec(0, [1], [2]))
    with pytest.raises(GraphInputError):
        stretch_node(complete(3), StretchSpec(7, [1], [2]))


def test_canonical_stretch_examples():
    h = odd_hole_plus_chord(2, 2)
    assert are_isomorphic(canonical_stretch(h, 5), line_graph(odd_hole_plus_path(2, 3, 2)).graph)
    assert are_isomorphic(canonical_stretch(cycle(5), 2), cycle(7))
    d = odd_hole_plus_double(2)
    # edge 2 joins 2 and 3 and is not parallel to the doubled edge
    assert are_isomorphic(canonical_stretch(d, 2), line_graph(odd_hole_plus_double(3)).graph)


def test_canonical_stretch_rejects_parallel_edge():
    with pytest.raises(GraphInputError, match="parallel"):
        canonical_stretch(odd_hole_plus_double(2), 0)


def test_three_subdivision_examples():
    assert are_isomorphic(three_subdivision(cycle(5), 0), cycle(7))
    h = odd_hole_plus_chord(2, 2)
    sub = three_subdivision(h, 2)
    assert are_isomorphic(sub, odd_hole_plus_chord(3, 2)) or are_isomorphic(sub, odd_hole_plus_chord(3, 3))
    assert are_isomorphic(three_subdivision(h, 5), odd_hole_plus_path(2, 3, 2))
    with pytest.raises(GraphInputError):
        three_subdivision(h, 99)


def test_three_subdivision_fresh_ids():
    h = cycle(5)
    s = three_subdivision(h, 1)
    assert s.n == 7 and s.m == 7
    assert set(s.nodes) == {0, 1, 2, 3, 4, 5, 6}
    assert not s.has_edge(1) and {5, 6, 7} <= set(s.edge_ids)


def test_subdivision_matches_stretching_on_random_graphs():
    for h in random_simple_graphs(40, 7, seed=11):
        for e in h.edges:
            assert are_isomorphic(line_graph(three_subdivision(h, e.id)).graph, canonical_stretch(h, e.id))


def test_repeated_subdivision_from_c5_plus_double():
    d = odd_hole_plus_double(2)
    once = three_subdivision(d, 2)
    target = line_graph(odd_hole_plus_double(3)).graph
    assert are_isomorphic(canonical_stretch(d, 2), target)
    assert are_isomorphic(line_graph(once).graph, target)
