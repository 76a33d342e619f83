"""Line graphs, node stretching and 3-subdivision of edges."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .errors import GraphInputError
from .multigraph import Multigraph


@dataclass(frozen=True)
class LineGraphResult:
    graph: Multigraph
    edge_to_node: dict[int, int]

    @property
    def node_to_edge(self) -> dict[int, int]:
        return {v: e for e, v in self.edge_to_node.items()}

    def line_nodes(self, edge_ids: Iterable[int]) -> list[int]:
        return sorted(self.edge_to_node[e] for e in edge_ids)


def line_graph(h: Multigraph) -> LineGraphResult:
    """Simple line graph of ``h``; node ``i`` stands for the i-th edge of ``h``.

    Parallel edges of ``h`` become adjacent line-graph nodes joined by a
    single edge.
    """
    if h.m == 0:
        raise GraphInputError("line graph of a graph without edges is undefined")
    edge_to_node = {e.id: i for i, e in enumerate(h.edges)}
    pairs: set[tuple[int, int]] = set()
    for v in h.nodes:
        inc = sorted(edge_to_node[eid] for eid in h.incident_edges(v))
        for a in range(len(inc)):
            for b in range(a + 1, len(inc)):
                pairs.add((inc[a], inc[b]))
    g = Multigraph.from_pairs(h.m, sorted(pairs))
    return LineGraphResult(g, edge_to_node)


@dataclass(frozen=True)
class StretchSpec:
    node: int
    a1: frozenset[int]
    a2: frozenset[int]

    def __init__(self, node: int, a1: Iterable[int], a2: Iterable[int]):
        object.__setattr__(self, "node", node)
        object.__setattr__(self, "a1", frozenset(a1))
        object.__setattr__(self, "a2", frozenset(a2))

    def check(self, g: Multigraph) -> None:
        if not g.has_node(self.node):
            raise GraphInputError(f"unknown node {self.node}")
        if not self.a1 or not self.a2:
            raise GraphInputError("both parts of the neighbourhood partition must be nonempty")
        if self.a1 & self.a2:
            raise GraphInputError("neighbourhood parts must be disjoint")
        if self.a1 | self.a2 != g.neighbors(self.node):
            raise GraphInputError("parts must cover exactly the neighbourhood of the node")


def _stretch(g: Multigraph, v: int, a1: frozenset[int], a2: frozenset[int]) -> Multigraph:
    # v keeps its id as v1; w and v2 get the next two free ids
    w = g.next_node_id()
    v2 = w + 1
    edges = []
    for e in g.edges:
        if v not in (e.u, e.v):
            edges.append(tuple(e))
            continue
        x = e.other(v)
        edges.append((e.id, v if x in a1 else v2, x))
    nxt = g.next_edge_id()
    edges += [(nxt, v, w), (nxt + 1, w, v2)]
    return Multigraph(list(g.nodes) + [w, v2], edges)


def stretch_node(g: Multigraph, spec: StretchSpec) -> Multigraph:
    """Replace ``spec.node`` by a path ``v1 - w - v2`` with ``v1`` joined to
    ``a1`` and ``v2`` joined to ``a2``.

    ``v1`` keeps the old id, ``w`` and ``v2`` receive the next two free ids.
    """
    if not g.is_simple:
        raise GraphInputError("stretching is defined on simple graphs")
    spec.check(g)
    return _stretch(g, spec.node, spec.a1, spec.a2)


def incidence_cliques(h: Multigraph, eid: int, lg: LineGraphResult | None = None) -> tuple[frozenset[int], frozenset[int]]:
    """Line-graph nodes of edges meeting ``eid`` at its first and second endpoint."""
    e = h.edge(eid)
    if h.multiplicity(e.u, e.v) > 1:
        raise GraphInputError(
            f"edge {eid} has a parallel copy; the canonical partition needs a simple edge"
        )
    lg = lg or line_graph(h)
    u1 = frozenset(lg.edge_to_node[f] for f in h.incident_edges(e.u) if f != eid)
    u2 = frozenset(lg.edge_to_node[f] for f in h.incident_edges(e.v) if f != eid)
    return u1, u2


def canonical_stretch(h: Multigraph, eid: int) -> Multigraph:
    """Stretch the node of edge ``eid`` in ``L(h)`` along its two incidence cliques.

    An endpoint of degree one yields an empty clique; the construction is
    still carried out (the new end node is then pendant) so that the result
    matches the line graph of the 3-subdivided root for every simple edge.
    """
    lg = line_graph(h)
    u1, u2 = incidence_cliques(h, eid, lg)
    return _stretch(lg.graph, lg.edge_to_node[eid], u1, u2)


def three_subdivision(h: Multigraph, eid: int) -> Multigraph:
    """Replace edge ``u v`` by a path ``u - a - b - v`` through two new nodes."""
    e = h.edge(eid)
    a = h.next_node_id()
    b = a + 1
    nxt = h.next_edge_id()
    edges = [tuple(f) for f in h.edges if f.id != eid]
    edges += [(nxt, e.u, a), (nxt + 1, a, b), (nxt + 2, b, e.v)]
    return Multigraph(list(h.nodes) + [a, b], edges)
