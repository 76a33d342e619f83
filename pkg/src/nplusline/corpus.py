"""Exhaustive small-graph corpora, one representative per isomorphism class."""

from __future__ import annotations

import random
from collections.abc import Iterator

from .matching import is_hypomatchable
from .multigraph import Multigraph, are_isomorphic, invariant_signature, is_two_connected


class IsoClasses:
    """Collects graphs, keeping the first member of each isomorphism class."""

    def __init__(self) -> None:
        self._buckets: dict[tuple, list[Multigraph]] = {}
        self.members: list[Multigraph] = []

    def add(self, g: Multigraph) -> bool:
        key = invariant_signature(g)
        bucket = self._buckets.setdefault(key, [])
        if any(are_isomorphic(g, other) for other in bucket):
            return False
        bucket.append(g)
        self.members.append(g)
        return True

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Multigraph]:
        return iter(self.members)


def _normal(g: Multigraph) -> Multigraph:
    return g.compact()[0]


def connected_multigraphs(max_edges: int, max_multiplicity: int = 2) -> list[Multigraph]:
    """Connected loopless multigraphs with 1..max_edges edges, edge
    multiplicities at most ``max_multiplicity``, up to isomorphism.

    Built by adding one edge at a time: every connected graph arises from a
    connected graph with one edge fewer, by deleting a non-bridge edge or,
    for trees, a leaf.
    """
    if max_edges < 1:
        return []
    level = [Multigraph.from_pairs(2, [(0, 1)])]
    out = list(level)
    for _ in range(2, max_edges + 1):
        classes = IsoClasses()
        for g in level:
            n = g.n
            for u in range(n):
                for v in range(u + 1, n):
                    if g.multiplicity(u, v) < max_multiplicity:
                        classes.add(_normal(g.add_edges([(u, v)])))
                classes.add(_normal(g.add_edges([(u, n)])))
        level = classes.members
        out.extend(level)
    return out


def two_connected_hypomatchable_graphs(max_nodes: int, min_nodes: int = 3) -> list[Multigraph]:
    """Simple 2-connected hypomatchable graphs with ``min_nodes..max_nodes``
    nodes, up to isomorphism.

    Generated from odd cycles by adding open odd ears; every such graph has a
    decomposition with 2-connected stages, and every stage of one is again a
    simple 2-connected hypomatchable graph, so closing under ear additions
    reaches all of them. Each member is re-checked with the matching and
    connectivity predicates.
    """
    seen = IsoClasses()
    frontier: list[Multigraph] = []
    for length in range(3, max_nodes + 1, 2):
        g = Multigraph.from_pairs(length, [(i, (i + 1) % length) for i in range(length)])
        if seen.add(g):
            frontier.append(g)
    while frontier:
        nxt = []
        for g in frontier:
            for child in _open_ear_extensions(g, max_nodes):
                if seen.add(child):
                    nxt.append(child)
        frontier = nxt
    out = [g for g in seen if min_nodes <= g.n <= max_nodes]
    for g in out:
        assert is_two_connected(g) and is_hypomatchable(g)
    return sorted(out, key=lambda g: (g.n, g.m, g.pairs()))


def _open_ear_extensions(g: Multigraph, max_nodes: int) -> Iterator[Multigraph]:
    n = g.n
    for u in range(n):
        for v in range(u + 1, n):
            if not g.adjacent(u, v):
                yield _normal(g.add_edges([(u, v)]))
            for extra in range(2, max_nodes - n + 1, 2):
                path = [u] + list(range(n, n + extra)) + [v]
                yield _normal(g.add_edges(list(zip(path, path[1:]))))


def with_doubled_edges(g: Multigraph, max_doubled: int | None = None) -> list[Multigraph]:
    """Non-isomorphic multigraphs obtained by doubling any set of edges of the
    simple graph ``g`` (at most ``max_doubled`` of them when given)."""
    classes = IsoClasses()
    level = [g]
    classes.add(g)
    limit = g.m if max_doubled is None else min(max_doubled, g.m)
    for _ in range(limit):
        nxt = []
        for h in level:
            for e in g.edges:
                if h.multiplicity(e.u, e.v) == 1:
                    cand = h.add_edges([(e.u, e.v)])
                    if classes.add(cand):
                        nxt.append(cand)
        level = nxt
    return classes.members


def random_simple_graphs(count: int, max_nodes: int, seed: int = 0, p_range: tuple[float, float] = (0.2, 0.7)) -> list[Multigraph]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, max_nodes)
        p = rng.uniform(*p_range)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        if pairs:
            out.append(Multigraph.from_pairs(n, pairs))
    return out


def random_multigraphs(count: int, max_nodes: int, seed: int = 0, parallel_p: float = 0.2) -> list[Multigraph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_nodes)
        p = rng.uniform(0.1, 0.8)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        pairs += [pr for pr in pairs if rng.random() < parallel_p]
        rng.shuffle(pairs)
        out.append(Multigraph.from_pairs(n, pairs))
    return out



def random_two_connected_hypomatchable(count: int, n: int, seed: int = 0, parallel_p: float = 0.2) -> list[Multigraph]:
    """Random 2-connected hypomatchable multigraphs on exactly ``n`` nodes
    (``n`` odd), built from a random odd cycle by random open odd ears and
    random extra edges, then doubling each edge with probability ``parallel_p``.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("hypomatchable graphs have an odd number of nodes >= 3")
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        length = rng.randrange(3, n + 1, 2)
        pairs = [(i, (i + 1) % length) for i in range(length)]
        size = length
        while size < n:
            extra = rng.randrange(2, n - size + 1, 2)
            u, v = rng.sample(range(size), 2)
            path = [u] + list(range(size, size + extra)) + [v]
            pairs += list(zip(path, path[1:]))
            size += extra
        have = {tuple(sorted(p)) for p in pairs}
        for _ in range(rng.randint(0, n)):
            u, v = sorted(rng.sample(range(n), 2))
            if (u, v) not in have:
                have.add((u, v))
                pairs.append((u, v))
        pairs += [p for p in pairs if rng.random() < parallel_p]
        g = Multigraph.from_pairs(n, pairs)
        if is_two_connected(g) and is_hypomatchable(g):
            out.append(g)
    return out
