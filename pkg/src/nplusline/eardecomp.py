"""Odd ear decompositions of hypomatchable graphs.

A decomposition starts from an odd cycle ``H0`` and adds odd paths (ears)
whose endpoints lie in the graph built so far and whose internal nodes are
new. Short ears are single edges, possibly parallel to an existing edge.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import Any

from .errors import ContractError, GraphInputError
from .matching import blossom_mates, hypomatchability_violation
from .multigraph import Multigraph, is_connected, is_two_connected


@dataclass(frozen=True)
class Ear:
    path: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.path[0], self.path[-1]

    @property
    def internal(self) -> tuple[int, ...]:
        return self.path[1:-1]

    @property
    def is_long(self) -> bool:
        return self.length >= 3

    def oriented(self) -> Ear:
        """Same ear read from its smaller endpoint."""
        if self.path[0] <= self.path[-1]:
            return self
        return Ear(self.path[::-1], self.edges[::-1])


def _canonical_cycle(nodes: Sequence[int], edges: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # edges[i] joins nodes[i] and nodes[i+1 mod L]; rotate to the smallest
    # node and walk towards its smaller neighbour
    k = len(nodes)
    s = min(range(k), key=lambda i: nodes[i])
    fwd_nodes = [nodes[(s + i) % k] for i in range(k)]
    fwd_edges = [edges[(s + i) % k] for i in range(k)]
    if k > 2 and fwd_nodes[1] > fwd_nodes[-1]:
        rev_nodes = [fwd_nodes[0]] + fwd_nodes[:0:-1]
        rev_edges = fwd_edges[::-1]
        return tuple(rev_nodes), tuple(rev_edges)
    return tuple(fwd_nodes), tuple(fwd_edges)


@dataclass(frozen=True)
class EarDecomposition:
    h0: tuple[int, ...]
    h0_edges: tuple[int, ...]
    ears: tuple[Ear, ...]

    @classmethod
    def build(cls, h0: Sequence[int], h0_edges: Sequence[int], ears: Sequence[Ear]) -> EarDecomposition:
        nodes, edges = _canonical_cycle(h0, h0_edges)
        return cls(nodes, edges, tuple(ear.oriented() for ear in ears))

    @property
    def node_count(self) -> int:
        return len(self.h0) + sum(len(ear.internal) for ear in self.ears)

    def stage_edge_sets(self) -> list[tuple[int, ...]]:
        """Edge ids of ``H0, H1, ..., Hk``."""
        out = [tuple(self.h0_edges)]
        for ear in self.ears:
            out.append(out[-1] + ear.edges)
        return out

    def stages(self, host: Multigraph) -> list[Multigraph]:
        return [host.edge_subgraph(edges, self.h0) for edges in self.stage_edge_sets()]

    def to_json(self) -> dict[str, Any]:
        return {
            "h0": list(self.h0),
            "h0_edges": list(self.h0_edges),
            "ears": [list(ear.path) for ear in self.ears],
            "ear_edges": [list(ear.edges) for ear in self.ears],
        }

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> EarDecomposition:
        return cls(
            tuple(data["h0"]),
            tuple(data["h0_edges"]),
            tuple(Ear(tuple(p), tuple(e)) for p, e in zip(data["ears"], data["ear_edges"])),
        )


# -- search ----------------------------------------------------------------


class _EarSearch:
    def __init__(self, h: Multigraph, open_ears: bool):
        self.h = h
        self.open_ears = open_ears
        self.all_nodes = frozenset(h.nodes)
        self.adj = {v: sorted(h.neighbors(v)) for v in h.nodes}
        self.failed: set[frozenset[int]] = set()

    def edge_between(self, u: int, v: int) -> int:
        return min(self.h.edges_between(u, v))

    def has_perfect_matching(self, nodes: frozenset[int]) -> bool:
        if len(nodes) % 2:
            return False
        if not nodes:
            return True
        order = sorted(nodes)
        index = {v: i for i, v in enumerate(order)}
        adj = [[index[w] for w in self.adj[v] if w in nodes] for v in order]
        return all(x != -1 for x in blossom_mates(len(order), adj))

    def odd_cycles(self) -> Iterator[list[int]]:
        """Simple odd cycles, shortest first, then by node sequence."""
        n = self.h.n
        for length in range(3, n + 1, 2):
            for s in self.h.nodes:
                path = [s]

                def walk(v: int) -> Iterator[list[int]]:
                    if len(path) == length:
                        if s in self.adj[v] and path[1] < path[-1]:
                            yield list(path)
                        return
                    for w in self.adj[v]:
                        if w > s and w not in path:
                            path.append(w)
                            yield from walk(w)
                            path.pop()

                yield from walk(s)

    def long_ears(self, stage: frozenset[int]) -> Iterator[list[int]]:
        """Node paths of candidate long ears in tie-break order."""
        outside = self.all_nodes - stage
        inner_adj = {v: [w for w in self.adj[v] if w in outside] for v in self.h.nodes}
        ends = sorted(stage)
        for i, a in enumerate(ends):
            for b in ends[i if not self.open_ears else i + 1:]:
                for length in range(3, len(outside) + 2, 2):
                    path = [a]

                    def walk(v: int) -> Iterator[list[int]]:
                        if len(path) == length:
                            if b in self.adj[v] and (a != b or path[1] < path[-1]):
                                yield path + [b]
                            return
                        for w in inner_adj[v]:
                            if w not in path:
                                path.append(w)
                                yield from walk(w)
                                path.pop()

                    yield from walk(a)

    def extend(self, stage: frozenset[int], used: set[int], ears: list[Ear]) -> list[Ear] | None:
        if stage in self.failed:
            return None
        # short ears never hurt: they keep the node set and stage connectivity
        added = []
        for e in self.h.edges:
            if e.id not in used and e.u in stage and e.v in stage:
                added.append(Ear((e.u, e.v), (e.id,)))
        used = used | {ear.edges[0] for ear in added}
        ears = ears + added
        if stage == self.all_nodes:
            return ears if len(used) == self.h.m else None
        outside = self.all_nodes - stage
        for path in self.long_ears(stage):
            internal = frozenset(path[1:-1])
            if not self.has_perfect_matching(outside - internal):
                continue
            edges = tuple(self.edge_between(path[j], path[j + 1]) for j in range(len(path) - 1))
            result = self.extend(stage | internal, used | set(edges), ears + [Ear(tuple(path), edges)])
            if result is not None:
                return result
        self.failed.add(stage)
        return None

    def run(self) -> EarDecomposition | None:
        for cycle in self.odd_cycles():
            stage = frozenset(cycle)
            if not self.has_perfect_matching(self.all_nodes - stage):
                continue
            edges = [self.edge_between(cycle[j], cycle[(j + 1) % len(cycle)]) for j in range(len(cycle))]
            ears = self.extend(stage, set(edges), [])
            if ears is not None:
                return EarDecomposition.build(cycle, edges, ears)
        return None


def _require_hypomatchable(h: Multigraph) -> None:
    if h.n < 3:
        raise GraphInputError("an ear decomposition needs an odd cycle (at least three nodes)")
    bad = hypomatchability_violation(h)
    if bad is not None:
        raise ContractError(
            f"graph is not hypomatchable: removing node {bad} leaves no perfect matching",
            predicate="hypomatchable",
            node=bad,
        )


def _cut_node(h: Multigraph) -> int | None:
    if not is_connected(h):
        return None
    for v in h.nodes:
        if not is_connected(h.remove_nodes([v])):
            return v
    return None


def ear_decomposition(h: Multigraph) -> EarDecomposition:
    """Odd ear decomposition of a hypomatchable graph; ears may be closed."""
    _require_hypomatchable(h)
    result = _EarSearch(h, open_ears=False).run()
    if result is None:
        raise RuntimeError("no ear decomposition found for a hypomatchable graph")
    return result


def two_connected_ear_decomposition(h: Multigraph) -> EarDecomposition:
    """Odd ear decomposition with every stage 2-connected (all ears open).

    Tie-break: short ears are taken as soon as available; long ears are
    tried by smallest endpoint pair, then shortest length.
    """
    _require_hypomatchable(h)
    if not is_two_connected(h):
        raise ContractError(
            "graph is not 2-connected", predicate="two_connected", node=_cut_node(h)
        )
    result = _EarSearch(h, open_ears=True).run()
    if result is None:
        raise RuntimeError("no 2-connected ear decomposition found")
    return result


def wagler_normalize(d: EarDecomposition) -> EarDecomposition:
    """Rewrite a decomposition starting at a triangle so that it starts at an
    odd cycle of length at least five.

    With ``E_i`` the first long ear (endpoints ``v != v'`` on the triangle),
    the result is ``(H0 - vv') + E_i``, then the short ear ``vv'``, then the
    remaining ears in their original order.
    """
    if d.node_count < 5:
        raise GraphInputError(f"normalisation needs at least five nodes, got {d.node_count}")
    if len(d.h0) >= 5:
        return d
    if len(d.h0) != 3:
        raise ContractError("initial cycle must be an odd cycle", predicate="odd_h0")
    i = next(j for j, ear in enumerate(d.ears) if ear.is_long)
    triangle = set(d.h0)
    # every earlier ear is short, so the stage before E_i spans only the triangle
    assert all(set(ear.path) <= triangle for ear in d.ears[:i])
    ear = d.ears[i]
    v, v2 = ear.endpoints
    if v == v2 or not {v, v2} <= triangle:
        raise ContractError(
            "first long ear must join two distinct triangle nodes", predicate="two_connected_stages"
        )
    (t,) = triangle - {v, v2}
    cycle_edge = {}
    for k in range(3):
        a, b = d.h0[k], d.h0[(k + 1) % 3]
        cycle_edge[frozenset((a, b))] = d.h0_edges[k]
    e_vt = cycle_edge[frozenset((v, t))]
    e_tv2 = cycle_edge[frozenset((t, v2))]
    chord = cycle_edge[frozenset((v, v2))]
    nodes = [v, t, v2] + list(ear.path[-2:0:-1])
    edges = [e_vt, e_tv2] + list(ear.edges[::-1])
    ears = [Ear((v, v2), (chord,))] + list(d.ears[:i]) + list(d.ears[i + 1:])
    return EarDecomposition.build(nodes, edges, ears)


# -- validation ------------------------------------------------------------


def decomposition_problems(h: Multigraph, d: EarDecomposition, require_two_connected: bool = False) -> list[str]:
    """Reasons why ``d`` is not a valid odd ear decomposition of ``h``."""
    problems: list[str] = []
    k = len(d.h0)
    if k < 3 or len(set(d.h0)) != k or len(d.h0_edges) != k:
        return ["h0 not a cycle"]
    if k % 2 == 0:
        problems.append("h0 even")
    if not all(h.has_node(v) for v in d.h0):
        return problems + ["unknown node"]
    used: set[int] = set()
    for j, eid in enumerate(d.h0_edges):
        if not h.has_edge(eid):
            return problems + ["unknown edge"]
        e = h.edge(eid)
        if e.key != tuple(sorted((d.h0[j], d.h0[(j + 1) % k]))):
            problems.append("edge endpoints mismatch")
        if eid in used:
            problems.append("edge reused")
        used.add(eid)
    stage = set(d.h0)
    stage_edges = list(d.h0_edges)
    if require_two_connected and not is_two_connected(h.edge_subgraph(stage_edges, stage)):
        problems.append("stage not 2-connected")
    for ear in d.ears:
        if len(ear.path) != len(ear.edges) + 1 or not ear.edges:
            problems.append("malformed ear")
            continue
        if ear.length % 2 == 0:
            problems.append("even ear")
        a, b = ear.endpoints
        if a not in stage or b not in stage:
            problems.append("ear endpoint outside stage")
        if a == b:
            if ear.length == 1:
                problems.append("loop ear")
            if require_two_connected:
                problems.append("closed ear")
        inner = ear.internal
        if len(set(inner)) != len(inner) or any(v in stage or v in (a, b) for v in inner):
            problems.append("ear internal node reused")
        if not all(h.has_node(v) for v in inner):
            problems.append("unknown node")
            continue
        for j, eid in enumerate(ear.edges):
            if not h.has_edge(eid):
                problems.append("unknown edge")
                continue
            if h.edge(eid).key != tuple(sorted((ear.path[j], ear.path[j + 1]))):
                problems.append("edge endpoints mismatch")
            if eid in used:
                problems.append("edge reused")
            used.add(eid)
        stage.update(inner)
        stage_edges.extend(ear.edges)
        if require_two_connected and "unknown edge" not in problems:
            if not is_two_connected(h.edge_subgraph(stage_edges, stage)):
                problems.append("stage not 2-connected")
    if used != set(h.edge_ids):
        problems.append("edge coverage")
    if stage != set(h.nodes):
        problems.append("node coverage")
    return sorted(set(problems))


def validate_decomposition(h: Multigraph, d: EarDecomposition, require_two_connected: bool = False) -> bool:
    return not decomposition_problems(h, d, require_two_connected)
