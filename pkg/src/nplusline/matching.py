"""Maximum cardinality matching and hypomatchability.

The matcher works on the underlying simple graph: a second parallel copy can
never enlarge a matching, so edge ids are lifted back from one copy per pair.
"""

from __future__ import annotations

from collections import deque

from .errors import ResourceLimitError
from .multigraph import Multigraph

EXHAUSTIVE_NODE_LIMIT = 12


def _augmenting_path(n: int, adj: list[list[int]], match: list[int], root: int) -> tuple[int, list[int]]:
    """BFS from a free root with blossom shrinking.

    Returns the free endpoint reached (or -1) and the parent array describing
    the alternating path back to ``root``.
    """
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return to, parent
                used[match[to]] = True
                queue.append(match[to])
    return -1, parent


def blossom_mates(n: int, adj: list[list[int]]) -> list[int]:
    """Mate array of a maximum matching of a simple graph on ``0..n-1``."""
    match = [-1] * n
    for v in range(n):
        if match[v] == -1:
            for w in adj[v]:
                if match[w] == -1:
                    match[v], match[w] = w, v
                    break
    for root in range(n):
        if match[root] != -1:
            continue
        v, parent = _augmenting_path(n, adj, match, root)
        while v != -1:
            pv = parent[v]
            nxt = match[pv]
            match[v], match[pv] = pv, v
            v = nxt
    return match


def _dense(g: Multigraph) -> tuple[list[int], list[list[int]]]:
    nodes = list(g.nodes)
    index = {v: i for i, v in enumerate(nodes)}
    adj = [sorted(index[w] for w in g.neighbors(v)) for v in nodes]
    return nodes, adj


def maximum_matching(g: Multigraph) -> frozenset[int]:
    """Edge ids of a maximum cardinality matching of ``g``."""
    nodes, adj = _dense(g)
    mate = blossom_mates(len(nodes), adj)
    return frozenset(
        min(g.edges_between(nodes[i], nodes[j])) for i, j in enumerate(mate) if j > i
    )


def matching_number(g: Multigraph) -> int:
    nodes, adj = _dense(g)
    return sum(1 for j in blossom_mates(len(nodes), adj) if j != -1) // 2


def exhaustive_maximum_matching(g: Multigraph) -> frozenset[int]:
    """Reference matcher: branch on the smallest uncovered node.

    Exponential; intended as a test oracle on small graphs.
    """
    if g.n > EXHAUSTIVE_NODE_LIMIT:
        raise ResourceLimitError(
            f"exhaustive matching limited to {EXHAUSTIVE_NODE_LIMIT} nodes, got {g.n}",
            limit=EXHAUSTIVE_NODE_LIMIT,
            size=g.n,
        )
    best: list[int] = []

    def grow(free: frozenset[int], chosen: list[int]) -> None:
        nonlocal best
        if len(chosen) + len(free) // 2 <= len(best):
            return
        if not free:
            best = list(chosen)
            return
        v = min(free)
        rest = free - {v}
        for eid in g.incident_edges(v):
            w = g.edge(eid).other(v)
            if w in rest:
                chosen.append(eid)
                grow(rest - {w}, chosen)
                chosen.pop()
        grow(rest, chosen)

    grow(frozenset(g.nodes), [])
    return frozenset(best)


def is_matching(g: Multigraph, edge_ids: frozenset[int] | set[int]) -> bool:
    covered: set[int] = set()
    for eid in edge_ids:
        if not g.has_edge(eid):
            return False
        e = g.edge(eid)
        if e.u in covered or e.v in covered:
            return False
        covered.update((e.u, e.v))
    return True


def has_perfect_matching(g: Multigraph) -> bool:
    """True iff a matching covers every node (vacuously for the empty graph)."""
    if g.n % 2:
        return False
    return 2 * matching_number(g) == g.n


def hypomatchability_violation(g: Multigraph) -> int | None:
    """A node ``v`` such that ``g - v`` has no perfect matching, else None."""
    if g.n == 0:
        return None
    if g.n % 2 == 0:
        return g.nodes[0]
    nodes, adj = _dense(g)
    n = len(nodes)
    for i in range(n):
        # drop node i by relabelling the rest to 0..n-2
        sub = [[w - (w > i) for w in adj[j] if w != i] for j in range(n) if j != i]
        mate = blossom_mates(n - 1, sub)
        if any(x == -1 for x in mate):
            return nodes[i]
    return None


def is_hypomatchable(g: Multigraph) -> bool:
    """Odd order and ``g - v`` has a perfect matching for every node ``v``."""
    return g.n % 2 == 1 and hypomatchability_violation(g) is None
