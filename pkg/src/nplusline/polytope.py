"""Exact stable set polytope oracle for small graphs.

Facets of STAB(G) are computed with the double description method over
Python integers (no floating point), classified against the constraint
families used for line graphs, and compared with linear relaxations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Any

from .errors import ContractError, ResourceLimitError
from .families import antiweb_parameters, is_prime_antiweb
from .linegraph import LineGraphResult, line_graph
from .matching import is_hypomatchable
from .multigraph import (
    Multigraph,
    complement,
    connected_components,
    induced_subgraph,
    is_clique,
    is_odd_hole,
    is_two_connected,
)

ALPHA_NODE_LIMIT = 24
STABLE_SET_NODE_LIMIT = 24
HULL_NODE_LIMIT = 14
RSTAB_NODE_LIMIT = 16


# -- inequalities ------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Inequality:
    """``a . x <= b`` over the sorted node list of a graph, integer and gcd-reduced."""

    a: tuple[int, ...]
    b: int

    @classmethod
    def make(cls, a: list[int] | tuple[int, ...], b: int) -> Inequality:
        g = reduce(gcd, a, abs(b))
        if g > 1:
            a = [x // g for x in a]
            b //= g
        return cls(tuple(a), b)

    @classmethod
    def rank(cls, n: int, support: list[int] | tuple[int, ...], rhs: int) -> Inequality:
        a = [0] * n
        for i in support:
            a[i] = 1
        return cls.make(a, rhs)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, x in enumerate(self.a) if x)

    def value(self, point: tuple[int, ...] | list[int]) -> int:
        return sum(x * y for x, y in zip(self.a, point))

    def to_json(self) -> dict[str, Any]:
        return {"a": list(self.a), "b": self.b}

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.a):
            if c:
                terms.append(f"{'+' if c > 0 else '-'}{abs(c) if abs(c) != 1 else ''}x{i}")
        lhs = " ".join(terms).lstrip("+") or "0"
        return f"{lhs} <= {self.b}"


def _check_size(g: Multigraph, limit: int, what: str) -> None:
    if g.n > limit:
        raise ResourceLimitError(f"{what} limited to {limit} nodes, got {g.n}", limit=limit, size=g.n)


def _index(g: Multigraph) -> tuple[list[int], list[int]]:
    """Dense positions and neighbourhood bitmasks over the sorted node list."""
    nodes = list(g.nodes)
    pos = {v: i for i, v in enumerate(nodes)}
    masks = [0] * len(nodes)
    for v in nodes:
        for w in g.neighbors(v):
            masks[pos[v]] |= 1 << pos[w]
    return nodes, masks


# -- stable sets -------------------------------------------------------------


def _alpha_masks(masks: list[int], cand: int) -> int:
    if not cand:
        return 0
    v = (cand & -cand).bit_length() - 1
    rest = cand & ~(1 << v)
    if not masks[v] & rest:
        return 1 + _alpha_masks(masks, rest)
    return max(1 + _alpha_masks(masks, rest & ~masks[v]), _alpha_masks(masks, rest))


def alpha(g: Multigraph, limit: int = ALPHA_NODE_LIMIT) -> int:
    """Stability number."""
    _check_size(g, limit, "stability number")
    _, masks = _index(g)
    return _alpha_masks(masks, (1 << g.n) - 1)


def alpha_of(g: Multigraph, nodes: list[int] | tuple[int, ...]) -> int:
    """Stability number of the subgraph induced by ``nodes``."""
    return alpha(induced_subgraph(g, nodes))


def _stable_masks(masks: list[int], n: int) -> list[int]:
    out = []

    def grow(i: int, current: int, blocked: int) -> None:
        if i == n:
            out.append(current)
            return
        grow(i + 1, current, blocked)
        if not blocked >> i & 1:
            grow(i + 1, current | 1 << i, blocked | masks[i])

    grow(0, 0, 0)
    return out


def enumerate_stable_sets(g: Multigraph, limit: int = STABLE_SET_NODE_LIMIT) -> list[frozenset[int]]:
    """Every stable set (including the empty set), by size then node list."""
    _check_size(g, limit, "stable set enumeration")
    nodes, masks = _index(g)
    sets = [frozenset(nodes[i] for i in range(g.n) if m >> i & 1) for m in _stable_masks(masks, g.n)]
    return sorted(sets, key=lambda s: (len(s), sorted(s)))


def stable_set_vectors(g: Multigraph) -> list[tuple[int, ...]]:
    """Incidence vectors over the sorted node list."""
    nodes, masks = _index(g)
    return [tuple(m >> i & 1 for i in range(g.n)) for m in _stable_masks(masks, g.n)]


# -- exact linear algebra ----------------------------------------------------


def rank(rows: list[list[int]] | list[tuple[int, ...]]) -> int:
    """Rank over the rationals (fraction-free Gaussian elimination)."""
    mat = [list(r) for r in rows]
    if not mat:
        return 0
    r = 0
    cols = len(mat[0])
    for c in range(cols):
        piv = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        p = mat[r]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [p[c] * x - f * y for x, y in zip(mat[i], p)]
        r += 1
        if r == len(mat):
            break
    return r


def affine_rank(points: list[tuple[int, ...]]) -> int:
    """Number of affinely independent points among ``points``."""
    return rank([(1,) + tuple(p) for p in points])


# -- double description ------------------------------------------------------


def _normalize_ray(r: list[int]) -> tuple[int, ...]:
    g = reduce(gcd, r, 0)
    return tuple(x // g for x in r) if g > 1 else tuple(r)


def _dd_extreme_rays(rows: list[tuple[int, ...]], initial: list[int]) -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone ``{y : rows . y >= 0}``.

    ``initial`` indexes a square nonsingular subsystem whose inverse columns
    seed the iteration; the remaining rows are added one at a time and new
    rays are formed only from combinatorially adjacent pairs.
    """
    d = len(rows[0])
    sub = [rows[i] for i in initial]
    inv_cols = _integer_inverse_columns(sub)
    rays: list[tuple[tuple[int, ...], int]] = []
    for col in inv_cols:
        ray = _normalize_ray(col)
        zero = 0
        for i in initial:
            if sum(a * b for a, b in zip(rows[i], ray)) == 0:
                zero |= 1 << i
        rays.append((ray, zero))
    remaining = [i for i in range(len(rows)) if i not in set(initial)]
    for i in remaining:
        row = rows[i]
        pos, neg, zer = [], [], []
        for ray, zero in rays:
            val = sum(a * b for a, b in zip(row, ray))
            if val > 0:
                pos.append((ray, zero, val))
            elif val < 0:
                neg.append((ray, zero, val))
            else:
                zer.append((ray, zero | 1 << i))
        new = list(zer) + [(ray, zero) for ray, zero, _ in pos]
        if neg:
            for rp, zp, vp in pos:
                for rn, zn, vn in neg:
                    common = zp & zn
                    if bin(common).count("1") < d - 2:
                        continue
                    # adjacent iff no third ray's zero set contains the common one
                    if any((z & common) == common and z != zp and z != zn for _, z in rays):
                        continue
                    # vp*rn - vn*rp with vp > 0 > vn vanishes on the new row
                    comb = [vp * a - vn * b for a, b in zip(rn, rp)]
                    new.append((_normalize_ray(comb), common | 1 << i))
        rays = new
    return sorted({ray for ray, _ in rays})


def _integer_inverse_columns(mat: list[tuple[int, ...]]) -> list[list[int]]:
    """Columns of ``mat^{-1}`` scaled to integer vectors (direction only)."""
    n = len(mat)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    cols = []
    for j in range(n):
        col = [aug[i][n + j] for i in range(n)]
        den = reduce(lambda x, y: x * y // gcd(x, y), (f.denominator for f in col), 1)
        cols.append([int(f * den) for f in col])
    return cols


def stab_facets(g: Multigraph, limit: int = HULL_NODE_LIMIT) -> list[Inequality]:
    """Complete irredundant facet list of STAB(g), coefficients over sorted nodes."""
    _check_size(g, limit, "facet enumeration")
    n = g.n
    if n == 0:
        return []
    points = stable_set_vectors(g)
    index_of = {p: i for i, p in enumerate(points)}
    zero = tuple([0] * n)
    units = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    # 0 and the unit vectors are stable sets, so STAB(g) is full-dimensional
    assert zero in index_of and all(u in index_of for u in units)
    assert affine_rank(points) == n + 1
    rows = [(1,) + p for p in points]
    initial = [index_of[zero]] + [index_of[u] for u in units]
    rays = _dd_extreme_rays(rows, initial)
    facets = sorted(Inequality.make([-x for x in ray[1:]], ray[0]) for ray in rays)
    return facets


# -- facet classification ----------------------------------------------------


class FacetKind(str, Enum):
    NONNEGATIVITY = "Nonnegativity"
    CLIQUE = "Clique"
    ODD_HOLE_RANK = "OddHoleRank"
    HYPOMATCHABLE_LINE_RANK = "HypomatchableLineRank"
    FULL_RANK = "FullRank"
    JOINED_ANTIWEB = "JoinedAntiweb"
    OTHER = "Other"


@dataclass(frozen=True)
class FacetClass:
    kind: FacetKind
    witness: dict[str, Any] = field(default_factory=dict, compare=False)

    def to_json(self) -> dict[str, Any]:
        return {"class": self.kind.value, "witness": self.witness}


def facet_problems(g: Multigraph, f: Inequality, points: list[tuple[int, ...]] | None = None) -> list[str]:
    """Why ``f`` fails to define a facet of STAB(g) (empty when it does)."""
    points = points if points is not None else stable_set_vectors(g)
    if len(f.a) != g.n:
        return ["dimension"]
    problems = []
    values = [f.value(p) for p in points]
    if any(v > f.b for v in values):
        problems.append("invalid")
    tight = [p for p, v in zip(points, values) if v == f.b]
    if affine_rank(tight) < g.n:
        problems.append("not tight on n affinely independent stable sets")
    return problems


def line_rank_witness(root: Multigraph, lg: LineGraphResult, f: Inequality, line_nodes: list[int]) -> dict[str, Any] | None:
    """Root subgraph ``H'`` with ``L(H')`` = support of ``f``, 2-connected and
    hypomatchable, and ``f = x(L(H')) <= (|V(H')|-1)/2``; None otherwise."""
    support = f.support
    if not support or any(f.a[i] != 1 for i in support):
        return None
    node_to_edge = lg.node_to_edge
    edge_ids = [node_to_edge[line_nodes[i]] for i in support]
    touched = set()
    for eid in edge_ids:
        e = root.edge(eid)
        touched.update((e.u, e.v))
    sub = induced_subgraph(root, touched)
    if set(sub.edge_ids) != set(edge_ids):
        return None
    if not is_two_connected(sub) or not is_hypomatchable(sub):
        return None
    if f.b != (sub.n - 1) // 2:
        return None
    return {"root_nodes": list(sub.nodes), "root_edges": sorted(edge_ids)}


def joined_antiweb_decomposition(g: Multigraph, f: Inequality) -> dict[str, Any] | None:
    """Split the support of ``f`` into a clique ``Q`` and prime antiwebs,
    pairwise completely joined, with coefficient ``b`` on ``Q`` and
    ``b / alpha(A)`` on each antiweb ``A``.

    The parts of a complete join are unions of co-components; a prime antiweb
    with stability number at least two is co-connected, so each antiweb is a
    single co-component and every remaining co-component is a node of ``Q``.
    """
    nodes = list(g.nodes)
    support = f.support
    if f.b <= 0 or not support or any(f.a[i] <= 0 for i in support):
        return None
    sub_nodes = [nodes[i] for i in support]
    coef = {nodes[i]: f.a[i] for i in support}
    sub = induced_subgraph(g, sub_nodes)
    clique: list[int] = []
    antiwebs = []
    for comp in connected_components(complement(sub)):
        values = {coef[v] for v in comp}
        if len(values) != 1:
            return None
        (c,) = values
        if len(comp) == 1:
            if c != f.b:
                return None
            clique.extend(comp)
            continue
        part = induced_subgraph(g, comp)
        params = antiweb_parameters(part)
        if params is None:
            return None
        n_a, k_a = params
        if not is_prime_antiweb(n_a, k_a):
            return None
        a_alpha = alpha(part)
        if c * a_alpha != f.b:
            return None
        antiwebs.append({"nodes": comp, "n": n_a, "k": k_a, "alpha": a_alpha})
    if not is_clique(g, clique):
        return None
    return {"clique": sorted(clique), "antiwebs": antiwebs}


def classify_facet(
    g: Multigraph,
    f: Inequality,
    root: Multigraph | None = None,
    lg: LineGraphResult | None = None,
    points: list[tuple[int, ...]] | None = None,
) -> FacetClass:
    """Match a facet of STAB(g) against the known constraint families.

    With ``root`` given, ``g`` must be ``L(root)`` (node ``i`` = edge ``i`` of
    the root, as produced by :func:`line_graph`).
    """
    problems = facet_problems(g, f, points)
    if problems:
        raise ContractError(f"not a facet of STAB(G): {', '.join(problems)}", predicate="facet")
    nodes = list(g.nodes)
    support = f.support
    sup_nodes = [nodes[i] for i in support]
    unit = all(f.a[i] == 1 for i in support)
    if len(support) == 1 and f.a[support[0]] == -1 and f.b == 0:
        return FacetClass(FacetKind.NONNEGATIVITY, {"node": sup_nodes[0]})
    if unit and f.b == 1 and is_clique(g, sup_nodes):
        return FacetClass(FacetKind.CLIQUE, {"clique": sup_nodes})
    line_witness = None
    if root is not None:
        lg = lg or line_graph(root)
        if lg.graph.n != g.n:
            raise ContractError("graph is not the line graph of the given root", predicate="root")
        line_witness = line_rank_witness(root, lg, f, nodes)
    if unit and is_odd_hole(induced_subgraph(g, sup_nodes)) and f.b == (len(support) - 1) // 2:
        witness: dict[str, Any] = {"hole": sup_nodes}
        if line_witness is not None:
            witness.update(line_witness)
        return FacetClass(FacetKind.ODD_HOLE_RANK, witness)
    if line_witness is not None:
        return FacetClass(FacetKind.HYPOMATCHABLE_LINE_RANK, line_witness)
    if unit and len(support) == g.n and f.b == alpha(g):
        return FacetClass(FacetKind.FULL_RANK, {"alpha": f.b})
    joined = joined_antiweb_decomposition(g, f)
    if joined is not None:
        return FacetClass(FacetKind.JOINED_ANTIWEB, joined)
    return FacetClass(FacetKind.OTHER)


@dataclass(frozen=True)
class ClassifiedFacet:
    inequality: Inequality
    facet_class: FacetClass

    def to_json(self) -> dict[str, Any]:
        return {**self.inequality.to_json(), **self.facet_class.to_json()}


def classified_facets(g: Multigraph, root: Multigraph | None = None, limit: int = HULL_NODE_LIMIT) -> list[ClassifiedFacet]:
    points = stable_set_vectors(g) if g.n <= limit else None
    lg = line_graph(root) if root is not None else None
    return [
        ClassifiedFacet(f, classify_facet(g, f, root, lg, points)) for f in stab_facets(g, limit)
    ]


# -- relaxations -------------------------------------------------------------


def maximal_cliques(g: Multigraph) -> list[list[int]]:
    """Bron-Kerbosch with pivoting; cliques as sorted node lists, sorted."""
    out: list[list[int]] = []

    def expand(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(sorted(r))
            return
        pivot = max(p | x, key=lambda u: len(g.neighbors(u) & p))
        for v in sorted(p - g.neighbors(pivot)):
            nb = g.neighbors(v)
            expand(r | {v}, p & nb, x & nb)
            p = p - {v}
            x = x | {v}

    if g.n:
        expand(set(), set(g.nodes), set())
    return sorted(out)


def _nonnegativity(n: int) -> list[Inequality]:
    return [Inequality.make([-int(i == j) for j in range(n)], 0) for i in range(n)]


def estab_constraints(g: Multigraph) -> list[Inequality]:
    """Nonnegativity and one ``x_i + x_j <= 1`` per adjacent pair."""
    pos = {v: i for i, v in enumerate(g.nodes)}
    pairs = sorted({tuple(sorted((pos[e.u], pos[e.v]))) for e in g.edges})
    return _nonnegativity(g.n) + [Inequality.rank(g.n, p, 1) for p in pairs]


def qstab_constraints(g: Multigraph) -> list[Inequality]:
    """Nonnegativity and one clique constraint per maximal clique."""
    pos = {v: i for i, v in enumerate(g.nodes)}
    return _nonnegativity(g.n) + [
        Inequality.rank(g.n, [pos[v] for v in q], 1) for q in maximal_cliques(g)
    ]


def rstab_constraints(g: Multigraph, limit: int = RSTAB_NODE_LIMIT) -> list[Inequality]:
    """One rank constraint ``x(G') <= alpha(G')`` per nonempty node subset."""
    _check_size(g, limit, "rank relaxation")
    _, masks = _index(g)
    out = set()
    for m in range(1, 1 << g.n):
        sup = [i for i in range(g.n) if m >> i & 1]
        out.add(Inequality.rank(g.n, sup, _alpha_masks(masks, m)))
    return sorted(out)


# -- reports -----------------------------------------------------------------


@dataclass
class EdmondsReport:
    passed: bool
    facets: list[ClassifiedFacet]
    failures: list[ClassifiedFacet]

    @property
    def classes(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for cf in self.facets:
            counts[cf.facet_class.kind.value] = counts.get(cf.facet_class.kind.value, 0) + 1
        return dict(sorted(counts.items()))

    @property
    def h_perfect(self) -> bool:
        """Only nonnegativity, clique and odd hole facets occur."""
        allowed = {FacetKind.NONNEGATIVITY, FacetKind.CLIQUE, FacetKind.ODD_HOLE_RANK}
        return all(cf.facet_class.kind in allowed for cf in self.facets)

    def to_json(self) -> dict[str, Any]:
        return {
            "passed": self.passed,
            "classes": self.classes,
            "facets": [cf.to_json() for cf in self.facets],
        }


def verify_edmonds_description(h: Multigraph, limit: int = HULL_NODE_LIMIT) -> EdmondsReport:
    """Check that every facet of STAB(L(h)) is nonnegativity, a clique, or a
    rank constraint of the line graph of a 2-connected hypomatchable induced
    subgraph of ``h`` (odd holes of ``L(h)`` must carry such a root witness)."""
    lg = line_graph(h)
    facets = classified_facets(lg.graph, h, limit)
    failures = []
    for cf in facets:
        kind = cf.facet_class.kind
        if kind in (FacetKind.NONNEGATIVITY, FacetKind.CLIQUE, FacetKind.HYPOMATCHABLE_LINE_RANK):
            continue
        if kind is FacetKind.ODD_HOLE_RANK and "root_nodes" in cf.facet_class.witness:
            continue
        failures.append(cf)
    return EdmondsReport(not failures, facets, failures)


def is_h_perfect_graph(g: Multigraph, limit: int = HULL_NODE_LIMIT) -> bool:
    """STAB(g) is given by nonnegativity, clique and odd hole constraints."""
    allowed = {FacetKind.NONNEGATIVITY, FacetKind.CLIQUE, FacetKind.ODD_HOLE_RANK}
    return all(cf.facet_class.kind in allowed for cf in classified_facets(g, None, limit))


def is_joined_a_perfect(g: Multigraph, root: Multigraph | None = None, limit: int = HULL_NODE_LIMIT) -> bool:
    """Every facet of STAB(g) is nonnegativity or a joined antiweb constraint.

    ``root`` is accepted for symmetry with the other checks and not needed:
    the join decomposition is read from ``g`` alone.
    """
    for f in stab_facets(g, limit):
        if len(f.support) == 1 and f.a[f.support[0]] == -1 and f.b == 0:
            continue
        if joined_antiweb_decomposition(g, f) is None:
            return False
    return True
