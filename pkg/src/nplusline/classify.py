"""N+-perfection of line graphs decided on the root graph.

``L(H)`` is N+-perfect exactly when every 2-connected hypomatchable induced
subgraph of ``H`` has three nodes or is an odd hole. Any other such subgraph
contains an odd hole with one ear (a double edge, a chord, or a long path on
non-adjacent hole nodes), whose line graph is minimally N+-imperfect.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Any

from .eardecomp import Ear, EarDecomposition, two_connected_ear_decomposition, wagler_normalize
from .errors import ContractError, GraphInputError, ResourceLimitError
from .linegraph import line_graph
from .matching import hypomatchability_violation, is_hypomatchable
from .multigraph import Multigraph, induced_subgraph, is_connected, is_odd_hole, is_two_connected

SUBSET_SCAN_NODE_LIMIT = 18


class ClassKind(str, Enum):
    THREE_NODES = "ThreeNodes"
    ODD_HOLE = "OddHole"
    FORBIDDEN = "Forbidden"


class ForbiddenKind(str, Enum):
    DOUBLE_EDGE = "DoubleEdge"
    CHORD = "Chord"
    LONG_EAR = "LongEarNonAdjacent"

    @property
    def family(self) -> str:
        return {"DoubleEdge": "C+d", "Chord": "C+c", "LongEarNonAdjacent": "C+E"}[self.value]


@dataclass(frozen=True)
class HoleWithEar:
    """An odd hole (cyclic node order plus edge ids) and one ear on two of its nodes."""

    hole: tuple[int, ...]
    hole_edges: tuple[int, ...]
    ear: Ear

    @property
    def nodes(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.hole) | set(self.ear.internal)))

    @property
    def edges(self) -> tuple[int, ...]:
        return tuple(sorted(self.hole_edges + self.ear.edges))

    def graph(self, host: Multigraph) -> Multigraph:
        return host.edge_subgraph(self.edges, self.nodes)


@dataclass(frozen=True)
class HypomatchClass:
    kind: ClassKind
    forbidden: ForbiddenKind | None = None
    witness: HoleWithEar | None = None

    @property
    def is_forbidden(self) -> bool:
        return self.kind is ClassKind.FORBIDDEN


def _require_class_preconditions(h: Multigraph) -> None:
    if not is_two_connected(h):
        cut = next((v for v in h.nodes if not is_connected(h.remove_nodes([v]))), None)
        raise ContractError("graph is not 2-connected", predicate="two_connected", node=cut)
    bad = hypomatchability_violation(h)
    if bad is not None:
        raise ContractError(
            f"graph is not hypomatchable: removing node {bad} leaves no perfect matching",
            predicate="hypomatchable",
            node=bad,
        )


def _first_ear_witness(d: EarDecomposition) -> tuple[ForbiddenKind, HoleWithEar]:
    """Read off ``H1 = H0 + E1`` and its case from a normalised decomposition."""
    ear = d.ears[0]
    a, b = ear.endpoints
    k = len(d.h0)
    pos = {v: i for i, v in enumerate(d.h0)}
    gap = abs(pos[a] - pos[b])
    adjacent = gap in (1, k - 1)
    if not ear.is_long:
        kind = ForbiddenKind.DOUBLE_EDGE if adjacent else ForbiddenKind.CHORD
        return kind, HoleWithEar(d.h0, d.h0_edges, ear)
    if not adjacent:
        return ForbiddenKind.LONG_EAR, HoleWithEar(d.h0, d.h0_edges, ear)
    # long ear on adjacent hole nodes: the hole edge ab becomes a chord of
    # the longer odd hole (H0 - ab) + E1
    i, j = pos[a], pos[b]
    if (i + 1) % k == j:
        start, chord = j, d.h0_edges[i]
    else:
        start, chord = i, d.h0_edges[j]
    # walk the hole from ``start`` away from the chord edge to its other end
    hole_nodes = [d.h0[(start + t) % k] for t in range(k)]
    hole_edges = [d.h0_edges[(start + t) % k] for t in range(k - 1)]
    end = hole_nodes[-1]
    tail = ear if ear.path[0] == end else Ear(ear.path[::-1], ear.edges[::-1])
    nodes = hole_nodes + list(tail.path[1:-1])
    edges = hole_edges + list(tail.edges)
    c = EarDecomposition.build(nodes, edges, [])
    u, v = d.h0[i], d.h0[j]
    chord_ear = Ear((u, v), (chord,)).oriented()
    return ForbiddenKind.CHORD, HoleWithEar(c.h0, c.h0_edges, chord_ear)


def classify_hypomatchable(h: Multigraph) -> HypomatchClass:
    """Three nodes, an odd hole, or a graph containing an odd hole with one ear."""
    _require_class_preconditions(h)
    if h.n == 3:
        return HypomatchClass(ClassKind.THREE_NODES)
    if is_odd_hole(h):
        return HypomatchClass(ClassKind.ODD_HOLE)
    d = wagler_normalize(two_connected_ear_decomposition(h))
    kind, witness = _first_ear_witness(d)
    return HypomatchClass(ClassKind.FORBIDDEN, kind, witness)


@dataclass(frozen=True)
class Family:
    kind: str
    hole_length: int
    ear_length: int

    def to_json(self) -> dict[str, Any]:
        return {"kind": self.kind, "hole_length": self.hole_length, "ear_length": self.ear_length}


@dataclass(frozen=True)
class NPlusCertificate:
    perfect: bool
    witness_root: Multigraph | None = None
    witness: HoleWithEar | None = None
    witness_line_nodes: tuple[int, ...] = ()
    family: Family | None = None
    forbidden: ForbiddenKind | None = None
    checked_subsets: int = field(default=0, compare=False)

    @property
    def verdict(self) -> str:
        return "perfect" if self.perfect else "imperfect"

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"verdict": self.verdict}
        if not self.perfect:
            assert self.witness_root is not None and self.family is not None and self.witness is not None
            out.update(
                witness_root_nodes=list(self.witness_root.nodes),
                witness_root_edges=list(self.witness_root.edge_ids),
                family=self.family.to_json(),
                line_nodes=list(self.witness_line_nodes),
                hole=list(self.witness.hole),
                ear=list(self.witness.ear.path),
            )
        return out


def minimal_witness(h: Multigraph, forbidden: HypomatchClass) -> NPlusCertificate:
    """Certificate built from ``H1 = H0 + E1`` of a forbidden classification.

    The witness is an odd hole of length at least five plus one ear on two
    distinct hole nodes; its line graph is reported as node ids of ``L(h)``.
    """
    if not forbidden.is_forbidden or forbidden.witness is None or forbidden.forbidden is None:
        raise ContractError("minimal_witness needs a Forbidden classification", predicate="forbidden")
    w = forbidden.witness
    a, b = w.ear.endpoints
    if len(w.hole) < 5 or len(w.hole) % 2 == 0 or a == b or w.ear.length % 2 == 0:
        raise ContractError("witness is not an odd hole with one ear", predicate="hole_with_ear")
    root = w.graph(h)
    lg = line_graph(h)
    family = Family(forbidden.forbidden.family, len(w.hole), w.ear.length)
    return NPlusCertificate(
        perfect=False,
        witness_root=root,
        witness=w,
        witness_line_nodes=tuple(lg.line_nodes(root.edge_ids)),
        family=family,
        forbidden=forbidden.forbidden,
    )


def _candidate(h: Multigraph, subset: tuple[int, ...]) -> Multigraph | None:
    """Induced subgraph on ``subset`` if it is 2-connected, hypomatchable and
    neither three nodes nor an odd hole."""
    chosen = set(subset)
    for v in subset:
        if len(chosen & h.neighbors(v)) < 2:
            return None
    sub = induced_subgraph(h, subset)
    if is_odd_hole(sub) or not is_two_connected(sub) or not is_hypomatchable(sub):
        return None
    return sub


def forbidden_subgraphs(h: Multigraph, first_only: bool = False, max_nodes: int = SUBSET_SCAN_NODE_LIMIT) -> list[Multigraph]:
    """2-connected hypomatchable induced subgraphs other than three-node
    graphs and odd holes, by increasing size then lexicographic node set."""
    if h.n > max_nodes:
        raise ResourceLimitError(
            f"subset scan limited to {max_nodes} root nodes, got {h.n}; "
            "search for an odd hole with one ear directly instead",
            limit=max_nodes,
            size=h.n,
        )
    found = []
    candidates = [v for v in h.nodes if len(h.neighbors(v)) >= 2]
    for size in range(5, len(candidates) + 1, 2):
        for subset in combinations(candidates, size):
            sub = _candidate(h, subset)
            if sub is not None:
                found.append(sub)
                if first_only:
                    return found
    return found


def decide_line_nplus_perfect(h: Multigraph, max_nodes: int = SUBSET_SCAN_NODE_LIMIT) -> NPlusCertificate:
    """Decide N+-perfection of ``L(h)``; imperfect verdicts carry a witness."""
    if h.m == 0:
        raise GraphInputError("root graph needs at least one edge")
    found = forbidden_subgraphs(h, first_only=True, max_nodes=max_nodes)
    if not found:
        return NPlusCertificate(perfect=True)
    return minimal_witness(h, classify_hypomatchable(found[0]))


def is_h_perfect_line(h: Multigraph, max_nodes: int = SUBSET_SCAN_NODE_LIMIT) -> bool:
    return decide_line_nplus_perfect(h, max_nodes).perfect


def witness_problems(h: Multigraph, cert: NPlusCertificate) -> list[str]:
    """Structural checks on an imperfect certificate, independent of the search."""
    if cert.perfect:
        return []
    problems = []
    w, root = cert.witness, cert.witness_root
    assert w is not None and root is not None
    hole = h.edge_subgraph(w.hole_edges, w.hole)
    if not is_odd_hole(hole) or tuple(sorted(hole.nodes)) != tuple(sorted(w.hole)):
        problems.append("hole")
    a, b = w.ear.endpoints
    if a == b or a not in w.hole or b not in w.hole:
        problems.append("ear endpoints")
    if w.ear.length % 2 == 0:
        problems.append("even ear")
    if set(w.ear.internal) & set(w.hole):
        problems.append("ear internal nodes")
    if root.m != len(w.hole) + w.ear.length:
        problems.append("edge count")
    for e in root.edges:
        rest = root.remove_edges([e.id])
        if not (is_odd_hole(rest) or not is_hypomatchable(rest)):
            problems.append("not edge-minimal")
            break
    return problems
