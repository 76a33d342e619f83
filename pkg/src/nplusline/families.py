"""Named graphs and graph families: odd holes with one ear, antiwebs, webs,
odd wheels, the two smallest minimally N+-imperfect graphs.
"""

from __future__ import annotations

from enum import Enum
from math import gcd

from .errors import GraphInputError
from .linegraph import line_graph
from .multigraph import Multigraph, are_isomorphic, bipartition, complement, induced_subgraph


class FamilyKind(str, Enum):
    ODD_HOLE = "odd-hole"
    DOUBLE = "odd-hole-plus-double"
    CHORD = "odd-hole-plus-chord"
    PATH = "odd-hole-plus-path"
    ANTIWEB = "antiweb"
    WEB = "web"
    ODD_WHEEL = "odd-wheel"
    GLT = "glt"
    GEMN = "gemn"
    CLAW = "claw"


def cycle(n: int) -> Multigraph:
    """Cycle ``0, 1, ..., n-1``; edge ``i`` joins ``i`` and ``i+1 mod n``."""
    if n < 3:
        raise GraphInputError("a cycle needs at least three nodes")
    return Multigraph.from_pairs(n, [(i, (i + 1) % n) for i in range(n)])


def odd_hole(k: int) -> Multigraph:
    """The chordless cycle on ``2k+1`` nodes, ``k >= 2``."""
    if k < 2:
        raise GraphInputError(f"odd holes need k >= 2, got k={k}")
    return cycle(2 * k + 1)


def odd_hole_plus_double(k: int) -> Multigraph:
    """Odd hole with a second copy of the edge ``0 - 1``."""
    return odd_hole(k).add_edges([(0, 1)])


def odd_hole_plus_chord(k: int, span: int = 2) -> Multigraph:
    """Odd hole with a chord from node 0 to node ``span``."""
    n = 2 * k + 1
    if k < 2:
        raise GraphInputError(f"odd holes need k >= 2, got k={k}")
    if not 2 <= span <= n - 2:
        raise GraphInputError(
            f"chord span must join non-adjacent hole nodes (2 <= span <= {n - 2}), got {span}"
        )
    return odd_hole(k).add_edges([(0, span)])


def odd_hole_plus_path(k: int, length: int = 3, distance: int = 2) -> Multigraph:
    """Odd hole with an odd path of ``length`` edges from node 0 to node ``distance``.

    The ``length - 1`` internal nodes are numbered ``2k+1, 2k+2, ...``.
    """
    n = 2 * k + 1
    if k < 2:
        raise GraphInputError(f"odd holes need k >= 2, got k={k}")
    if length < 3 or length % 2 == 0:
        raise GraphInputError(f"the attached path must be odd with length >= 3, got {length}")
    if not 2 <= distance <= n - 2:
        raise GraphInputError(
            f"path endpoints must be non-adjacent hole nodes (2 <= distance <= {n - 2}), got {distance}"
        )
    path = [0] + list(range(n, n + length - 1)) + [distance]
    return odd_hole(k).add_edges(list(zip(path, path[1:])))


def odd_hole_plus(kind: FamilyKind | str, k: int, span: int = 2, length: int = 3, distance: int = 2) -> Multigraph:
    kind = FamilyKind(kind)
    if kind is FamilyKind.DOUBLE:
        return odd_hole_plus_double(k)
    if kind is FamilyKind.CHORD:
        return odd_hole_plus_chord(k, span)
    if kind is FamilyKind.PATH:
        return odd_hole_plus_path(k, length, distance)
    raise GraphInputError(f"not an odd-hole-plus family: {kind.value}")


def antiweb_is_degenerate(n: int, k: int) -> bool:
    return not (n >= 2 and k >= 1 and 2 * k <= n)


def antiweb(n: int, k: int) -> Multigraph:
    """``A^k_n``: nodes ``0..n-1``, edge ``ij`` iff ``k <= |i-j| <= n-k``.

    Degenerate parameters give an edgeless graph; check them with
    :func:`antiweb_is_degenerate`.
    """
    if n < 0:
        raise GraphInputError("antiweb needs n >= 0")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if k <= j - i <= n - k]
    return Multigraph.from_pairs(n, pairs)


def web(n: int, k: int) -> Multigraph:
    """Complement of the antiweb ``A^k_n``."""
    return complement(antiweb(n, k))


def is_prime_antiweb(n: int, k: int) -> bool:
    return gcd(k + 1, n) == 1


def antiweb_parameters(g: Multigraph) -> tuple[int, int] | None:
    """``(n, k)`` with ``g`` isomorphic to ``A^k_n`` (smallest such k), else None."""
    n = g.n
    if n == 0 or not g.is_simple:
        return None
    degrees = {len(g.neighbors(v)) for v in g.nodes}
    if len(degrees) != 1:
        return None
    for k in range(1, n // 2 + 1):
        # A^k_n is (n - 2k + 1)-regular
        if n - 2 * k + 1 in degrees and are_isomorphic(g, antiweb(n, k)):
            return n, k
    if n == 1:
        return 1, 1
    return None


def is_near_bipartite(g: Multigraph) -> bool:
    """Deleting any node together with its neighbours leaves a bipartite graph."""
    for v in g.nodes:
        rest = [w for w in g.nodes if w != v and w not in g.neighbors(v)]
        if bipartition(induced_subgraph(g, rest)) is None:
            return False
    return True


def claw() -> Multigraph:
    """Star with centre 0 and three leaves."""
    return Multigraph.from_pairs(4, [(0, 1), (0, 2), (0, 3)])


def odd_wheel(k: int) -> Multigraph:
    """``W_{2k+1}``: hub ``2k+1`` joined to every node of the odd hole ``C_{2k+1}``."""
    hole = odd_hole(k)
    hub = hole.n
    return hole.add_edges([(hub, i) for i in range(hole.n)])


def contains_induced_claw(g: Multigraph) -> bool:
    for v in g.nodes:
        nb = sorted(g.neighbors(v))
        for i, a in enumerate(nb):
            for j in range(i + 1, len(nb)):
                b = nb[j]
                if g.adjacent(a, b):
                    continue
                for c in nb[j + 1:]:
                    if not g.adjacent(a, c) and not g.adjacent(b, c):
                        return True
    return False


def glt() -> Multigraph:
    """``L(C5 + d)``, six nodes."""
    return line_graph(odd_hole_plus_double(2)).graph


def gemn() -> Multigraph:
    """``L(C5 + c)``, six nodes."""
    return line_graph(odd_hole_plus_chord(2, 2)).graph


def named_graph(name: str, k: int = 2) -> Multigraph:
    key = name.lower().replace("_", "-")
    if key == "glt":
        return glt()
    if key == "gemn":
        return gemn()
    if key == "claw":
        return claw()
    if key in ("odd-wheel", "wheel"):
        return odd_wheel(k)
    raise GraphInputError(f"unknown named graph {name!r}")
