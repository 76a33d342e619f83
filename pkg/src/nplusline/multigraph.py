"""Undirected loopless multigraphs with stable edge identifiers.

Nodes are integers. Graphs built from an edge list use the dense range
``0..n-1``; subgraphs keep the node and edge ids of their host so results
can always be reported in the labels of the input.
"""

from __future__ import annotations

from collections import Counter, deque
from collections.abc import Iterable, Mapping
from pathlib import Path
from typing import NamedTuple

from .errors import GraphInputError, ResourceLimitError

ISOMORPHISM_NODE_LIMIT = 40


class Edge(NamedTuple):
    id: int
    u: int
    v: int

    def other(self, node: int) -> int:
        return self.v if node == self.u else self.u

    @property
    def key(self) -> tuple[int, int]:
        """Unordered endpoint pair as a sorted tuple."""
        return (self.u, self.v) if self.u <= self.v else (self.v, self.u)


class Multigraph:
    """Immutable multigraph: a node set plus an edge multiset.

    Edges are kept sorted by id. Parallel edges are allowed, loops are not.
    """

    __slots__ = ("_nodes", "_node_set", "_edges", "_by_id", "_adj", "_incident", "_mult")

    def __init__(self, nodes: Iterable[int], edges: Iterable[tuple[int, int, int]] = ()):
        node_list = sorted(set(int(v) for v in nodes))
        node_set = frozenset(node_list)
        edge_list = sorted((Edge(int(i), int(u), int(v)) for i, u, v in edges), key=lambda e: e.id)
        by_id: dict[int, Edge] = {}
        adj: dict[int, set[int]] = {v: set() for v in node_list}
        incident: dict[int, list[int]] = {v: [] for v in node_list}
        mult: Counter[tuple[int, int]] = Counter()
        for e in edge_list:
            if e.id in by_id:
                raise GraphInputError(f"duplicate edge id {e.id}")
            if e.u == e.v:
                raise GraphInputError(f"loop at node {e.u} (edge {e.id})")
            if e.u not in node_set or e.v not in node_set:
                raise GraphInputError(f"edge {e.id} has an endpoint outside the node set")
            by_id[e.id] = e
            adj[e.u].add(e.v)
            adj[e.v].add(e.u)
            incident[e.u].append(e.id)
            incident[e.v].append(e.id)
            mult[e.key] += 1
        self._nodes = tuple(node_list)
        self._node_set = node_set
        self._edges = tuple(edge_list)
        self._by_id = by_id
        self._adj = {v: frozenset(s) for v, s in adj.items()}
        self._incident = {v: tuple(s) for v, s in incident.items()}
        self._mult = dict(mult)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Multigraph:
        """Graph on nodes ``0..n-1`` whose i-th pair becomes edge id i."""
        return cls(range(n), ((i, u, v) for i, (u, v) in enumerate(pairs)))

    # -- basic accessors -------------------------------------------------

    @property
    def nodes(self) -> tuple[int, ...]:
        return self._nodes

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def n(self) -> int:
        return len(self._nodes)

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(e.id for e in self._edges)

    def has_node(self, v: int) -> bool:
        return v in self._node_set

    def has_edge(self, eid: int) -> bool:
        return eid in self._by_id

    def edge(self, eid: int) -> Edge:
        try:
            return self._by_id[eid]
        except KeyError:
            raise GraphInputError(f"unknown edge id {eid}") from None

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def incident_edges(self, v: int) -> tuple[int, ...]:
        return self._incident[v]

    def degree(self, v: int) -> int:
        """Number of incident edges, counting parallel copies."""
        return len(self._incident[v])

    def multiplicity(self, u: int, v: int) -> int:
        return self._mult.get((u, v) if u <= v else (v, u), 0)

    def edges_between(self, u: int, v: int) -> list[int]:
        if v not in self._adj.get(u, ()):
            return []
        return [eid for eid in self._incident[u] if self._by_id[eid].other(u) == v]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    @property
    def is_simple(self) -> bool:
        return all(c == 1 for c in self._mult.values())

    @property
    def parallel_edge_count(self) -> int:
        """Edges beyond the first copy between each adjacent pair."""
        return sum(c - 1 for c in self._mult.values())

    def adjacency(self) -> dict[int, frozenset[int]]:
        return dict(self._adj)

    # -- derived graphs --------------------------------------------------

    def underlying_simple(self) -> Multigraph:
        """Drop parallel copies, keeping the smallest id of each bundle."""
        seen: set[tuple[int, int]] = set()
        keep = []
        for e in self._edges:
            if e.key not in seen:
                seen.add(e.key)
                keep.append(e)
        return Multigraph(self._nodes, keep)

    def edge_subgraph(self, edge_ids: Iterable[int], nodes: Iterable[int] = ()) -> Multigraph:
        """Subgraph formed by the given edges, their endpoints and ``nodes``."""
        chosen = [self.edge(eid) for eid in edge_ids]
        node_set = set(nodes)
        for e in chosen:
            node_set.update((e.u, e.v))
        return Multigraph(node_set, chosen)

    def remove_edges(self, edge_ids: Iterable[int]) -> Multigraph:
        drop = set(edge_ids)
        for eid in drop:
            self.edge(eid)
        return Multigraph(self._nodes, (e for e in self._edges if e.id not in drop))

    def remove_nodes(self, nodes: Iterable[int]) -> Multigraph:
        drop = set(nodes)
        return induced_subgraph(self, [v for v in self._nodes if v not in drop])

    def add_edges(self, pairs: Iterable[tuple[int, int]]) -> Multigraph:
        """New graph with extra edges (fresh ids); unseen endpoints become nodes."""
        next_id = self.next_edge_id()
        extra = [(next_id + i, u, v) for i, (u, v) in enumerate(pairs)]
        nodes = set(self._nodes)
        for _, u, v in extra:
            nodes.update((u, v))
        return Multigraph(nodes, list(self._edges) + extra)

    def relabel(self, mapping: Mapping[int, int]) -> Multigraph:
        """Rename nodes through an injective mapping; edge ids are kept."""
        if len(set(mapping[v] for v in self._nodes)) != self.n:
            raise GraphInputError("relabeling is not injective")
        return Multigraph(
            (mapping[v] for v in self._nodes),
            ((e.id, mapping[e.u], mapping[e.v]) for e in self._edges),
        )

    def compact(self) -> tuple[Multigraph, dict[int, int]]:
        """Dense relabeling to ``0..n-1`` with dense edge ids.

        Returns the new graph and the node map new -> original.
        """
        index = {v: i for i, v in enumerate(self._nodes)}
        g = Multigraph(range(self.n), ((k, index[e.u], index[e.v]) for k, e in enumerate(self._edges)))
        return g, {i: v for v, i in index.items()}

    def next_node_id(self) -> int:
        return (self._nodes[-1] + 1) if self._nodes else 0

    def next_edge_id(self) -> int:
        return (max(self._by_id) + 1) if self._by_id else 0

    def pairs(self) -> list[tuple[int, int]]:
        return [(e.u, e.v) for e in self._edges]

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._nodes == other._nodes and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._nodes, self._edges))

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, edges={[(e.u, e.v) for e in self._edges]})"


def induced_subgraph(g: Multigraph, s: Iterable[int]) -> Multigraph:
    """Sub-multigraph on ``s`` with every edge (all parallel copies) inside ``s``."""
    subset = set(s)
    unknown = [v for v in subset if not g.has_node(v)]
    if unknown:
        raise GraphInputError(f"unknown node ids {sorted(unknown)}")
    return Multigraph(subset, (e for e in g.edges if e.u in subset and e.v in subset))


def _component_from(g: Multigraph, start: int, removed: int | None = None) -> set[int]:
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if w != removed and w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def connected_components(g: Multigraph) -> list[list[int]]:
    remaining = set(g.nodes)
    comps = []
    for v in g.nodes:
        if v in remaining:
            comp = _component_from(g, v)
            remaining -= comp
            comps.append(sorted(comp))
    return comps


def is_connected(g: Multigraph) -> bool:
    """True iff ``g`` has at most one component (the empty graph counts)."""
    if g.n <= 1:
        return True
    return len(_component_from(g, g.nodes[0])) == g.n


def is_two_connected(g: Multigraph) -> bool:
    """At least two nodes and ``g - v`` connected for every node ``v``.

    A single edge (or a bundle of parallel edges) on two nodes qualifies.
    """
    if g.n < 2 or not is_connected(g):
        return False
    for v in g.nodes:
        rest = [w for w in g.nodes if w != v]
        if len(_component_from(g, rest[0], removed=v)) != len(rest):
            return False
    return True


def bipartition(g: Multigraph) -> dict[int, int] | None:
    """Two-colouring of ``g`` or None when an odd cycle exists."""
    color: dict[int, int] = {}
    for s in g.nodes:
        if s in color:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if w not in color:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return color


def is_bipartite(g: Multigraph) -> bool:
    return bipartition(g) is not None


def complement(g: Multigraph) -> Multigraph:
    """Simple complement on the same node set."""
    nodes = g.nodes
    pairs = [(u, v) for i, u in enumerate(nodes) for v in nodes[i + 1:] if not g.adjacent(u, v)]
    return Multigraph(nodes, ((k, u, v) for k, (u, v) in enumerate(pairs)))


def is_clique(g: Multigraph, nodes: Iterable[int]) -> bool:
    s = list(nodes)
    return all(g.adjacent(u, v) for i, u in enumerate(s) for v in s[i + 1:])


def is_stable(g: Multigraph, nodes: Iterable[int]) -> bool:
    s = list(nodes)
    return not any(g.adjacent(u, v) for i, u in enumerate(s) for v in s[i + 1:])


def is_cycle(g: Multigraph) -> bool:
    """Simple connected graph where every node has degree two."""
    return (
        g.n >= 3
        and g.is_simple
        and all(g.degree(v) == 2 for v in g.nodes)
        and is_connected(g)
    )


def is_odd_hole(g: Multigraph) -> bool:
    """Chordless odd cycle on at least five nodes."""
    return g.n >= 5 and g.n % 2 == 1 and is_cycle(g)


# -- isomorphism ---------------------------------------------------------


def _refine(adj: list[dict[int, int]], colors: list[int]) -> list[int]:
    """Colour refinement with edge multiplicities until the partition is stable."""
    while True:
        sigs = [
            (colors[v], tuple(sorted((colors[w], k) for w, k in adj[v].items())))
            for v in range(len(adj))
        ]
        table = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [table[s] for s in sigs]
        if len(table) == len(set(colors)):
            return new
        colors = new


def _weighted_adjacency(g: Multigraph, offset: int = 0) -> tuple[list[dict[int, int]], dict[int, int]]:
    index = {v: i for i, v in enumerate(g.nodes)}
    adj: list[dict[int, int]] = [dict() for _ in g.nodes]
    for e in g.edges:
        a, b = index[e.u], index[e.v]
        adj[a][b + offset] = adj[a].get(b + offset, 0) + 1
        adj[b][a + offset] = adj[b].get(a + offset, 0) + 1
    return adj, index


def invariant_signature(g: Multigraph) -> tuple:
    """Isomorphism invariant (not complete) from colour refinement."""
    adj, _ = _weighted_adjacency(g)
    colors = _refine(adj, [0] * g.n)
    sigs = sorted(
        (colors[v], tuple(sorted((colors[w], k) for w, k in adj[v].items()))) for v in range(g.n)
    )
    return (g.n, g.m, tuple(sigs))


def find_isomorphism(
    g1: Multigraph, g2: Multigraph, max_nodes: int = ISOMORPHISM_NODE_LIMIT
) -> dict[int, int] | None:
    """Node bijection g1 -> g2 preserving edge multiplicities, or None.

    Individualisation-refinement search: the joint colouring of the disjoint
    union prunes candidates, and every leaf is verified explicitly.
    """
    if g1.n != g2.n or g1.m != g2.m:
        return None
    n = g1.n
    if n > max_nodes:
        raise ResourceLimitError(
            f"isomorphism test limited to {max_nodes} nodes, got {n}", limit=max_nodes, size=n
        )
    if n == 0:
        return {}
    adj1, _ = _weighted_adjacency(g1)
    adj2, _ = _weighted_adjacency(g2)
    adj = adj1 + [{w + n: k for w, k in d.items()} for d in adj2]
    nodes1 = list(g1.nodes)
    nodes2 = list(g2.nodes)

    def balanced(colors: list[int]) -> bool:
        return Counter(colors[:n]) == Counter(colors[n:])

    def search(colors: list[int]) -> list[int] | None:
        if not balanced(colors):
            return None
        counts = Counter(colors[:n])
        if all(c == 1 for c in counts.values()):
            pos = {colors[n + j]: j for j in range(n)}
            perm = [pos[colors[i]] for i in range(n)]
            for i in range(n):
                for j, k in adj1[i].items():
                    if adj2[perm[i]].get(perm[j], 0) != k:
                        return None
            return perm
        target = min((c for c, k in counts.items() if k > 1), key=lambda c: (counts[c], c))
        v = colors.index(target)
        fresh = max(colors) + 1
        for w in range(n, 2 * n):
            if colors[w] != target:
                continue
            trial = list(colors)
            trial[v] = fresh
            trial[w] = fresh
            found = search(_refine(adj, trial))
            if found is not None:
                return found
        return None

    perm = search(_refine(adj, [0] * (2 * n)))
    if perm is None:
        return None
    return {nodes1[i]: nodes2[perm[i]] for i in range(n)}


def are_isomorphic(g1: Multigraph, g2: Multigraph, max_nodes: int = ISOMORPHISM_NODE_LIMIT) -> bool:
    return find_isomorphism(g1, g2, max_nodes) is not None


# -- edge-list text format -----------------------------------------------


def parse_edge_list(text: str) -> Multigraph:
    """Parse ``n m`` followed by ``m`` lines ``u v``; ``#`` starts a comment line."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphInputError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((lineno, int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphInputError(f"line {lineno}: expected two integers, got {raw!r}") from None
    if not rows:
        raise GraphInputError("missing header line 'n m'")
    _, n, m = rows[0]
    if n < 0 or m < 0:
        raise GraphInputError("header values must be non-negative")
    body = rows[1:]
    if len(body) != m:
        raise GraphInputError(f"header announces {m} edges, found {len(body)}")
    pairs = []
    for lineno, u, v in body:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"line {lineno}: node id out of range 0..{n - 1}")
        if u == v:
            raise GraphInputError(f"line {lineno}: loops are not allowed")
        pairs.append((u, v))
    return Multigraph.from_pairs(n, pairs)


def format_edge_list(g: Multigraph, comment: str | None = None) -> str:
    """Serialise ``g`` (relabelled densely if needed) in edge-list format."""
    h, _ = g.compact()
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{h.n} {h.m}")
    lines.extend(f"{e.u} {e.v}" for e in h.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(path: str | Path) -> Multigraph:
    return parse_edge_list(Path(path).read_text(encoding="utf-8"))


def write_edge_list(g: Multigraph, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(format_edge_list(g, comment), encoding="utf-8")
