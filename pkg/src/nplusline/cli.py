"""Command line front end.

    nplusline generate odd-hole-plus-chord --k 2 --span 2 -o c5c.txt
    nplusline certify c5c.txt
    nplusline facets --root c5c.txt
    nplusline verify --max-edges 7 --edmonds --corollary2 --joined-a

Exit codes: 0 success (``certify``: N+-perfect), 1 imperfect verdict or a
failed cross-check, 2 input or limit error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any

from . import families
from .classify import SUBSET_SCAN_NODE_LIMIT, decide_line_nplus_perfect
from .corpus import connected_multigraphs, random_multigraphs
from .errors import NPlusLineError
from .linegraph import line_graph
from .multigraph import Multigraph, find_isomorphism, format_edge_list, is_connected, read_edge_list
from .polytope import HULL_NODE_LIMIT, classified_facets, is_joined_a_perfect, verify_edmonds_description

SKIPPED = "skipped: limit"
VERIFY_EDGE_LIMIT = 9


def dump(payload: Any, compact: bool = False) -> str:
    if compact:
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return json.dumps(payload, sort_keys=True, indent=2)


def _emit(payload: Any, args: argparse.Namespace) -> None:
    sys.stdout.write(dump(payload, getattr(args, "json", False)) + "\n")


# -- generate ----------------------------------------------------------------


def build_family(args: argparse.Namespace) -> Multigraph:
    kind = families.FamilyKind(args.kind)
    if kind is families.FamilyKind.ODD_HOLE:
        return families.odd_hole(args.k)
    if kind in (families.FamilyKind.DOUBLE, families.FamilyKind.CHORD, families.FamilyKind.PATH):
        return families.odd_hole_plus(kind, args.k, span=args.span, length=args.length, distance=args.distance)
    if kind is families.FamilyKind.ANTIWEB:
        return families.antiweb(args.n, args.k)
    if kind is families.FamilyKind.WEB:
        return families.web(args.n, args.k)
    if kind is families.FamilyKind.ODD_WHEEL:
        return families.odd_wheel(args.k)
    return families.named_graph(kind.value)


def cmd_generate(args: argparse.Namespace) -> int:
    g = build_family(args)
    if args.kind in ("antiweb", "web") and families.antiweb_is_degenerate(args.n, args.k):
        print(f"warning: degenerate antiweb parameters n={args.n} k={args.k}", file=sys.stderr)
    text = format_edge_list(g, comment=f"{args.kind} {_describe_params(args)}".strip())
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _describe_params(args: argparse.Namespace) -> str:
    keys = {
        "odd-hole": ["k"],
        "odd-hole-plus-double": ["k"],
        "odd-hole-plus-chord": ["k", "span"],
        "odd-hole-plus-path": ["k", "length", "distance"],
        "antiweb": ["n", "k"],
        "web": ["n", "k"],
        "odd-wheel": ["k"],
    }.get(args.kind, [])
    return " ".join(f"{k}={getattr(args, k)}" for k in keys)


# -- certify -----------------------------------------------------------------


def analysis_report(h: Multigraph, max_nodes: int, hull_limit: int, with_facets: bool) -> dict[str, Any]:
    start = time.perf_counter()
    cert = decide_line_nplus_perfect(h, max_nodes=max_nodes)
    report: dict[str, Any] = {
        "input": {"n": h.n, "m": h.m, "parallel_edges": h.parallel_edge_count},
        "certificate": cert.to_json(),
    }
    verdicts: dict[str, Any] = {"nplus_perfect": cert.perfect}
    if h.m <= hull_limit:
        lg = line_graph(h)
        facets = classified_facets(lg.graph, h, hull_limit)
        allowed = {"Nonnegativity", "Clique", "OddHoleRank"}
        verdicts["h_perfect"] = all(cf.facet_class.kind.value in allowed for cf in facets)
        verdicts["joined_a_perfect"] = is_joined_a_perfect(lg.graph, h, hull_limit)
        if with_facets:
            report["facets"] = [cf.to_json() for cf in facets]
    else:
        verdicts["h_perfect"] = SKIPPED
        verdicts["joined_a_perfect"] = SKIPPED
        if with_facets:
            report["facets"] = SKIPPED
    report["verdicts"] = verdicts
    report["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    return report


def cmd_certify(args: argparse.Namespace) -> int:
    h = read_edge_list(args.root_graph)
    report = analysis_report(h, args.max_nodes, args.hull_limit, args.facets)
    _emit(report, args)
    return 0 if report["verdicts"]["nplus_perfect"] else 1


# -- facets ------------------------------------------------------------------


def cmd_facets(args: argparse.Namespace) -> int:
    if args.graph is None and args.root is None:
        raise NPlusLineError("facets needs a graph file, --root, or both")
    root = read_edge_list(args.root) if args.root else None
    if args.line_graph_only:
        root_for_tags = None
    else:
        root_for_tags = root
    if args.graph is not None:
        g = read_edge_list(args.graph)
        if root is not None:
            lg = line_graph(root).graph
            if g != lg:
                mapping = find_isomorphism(g, lg)
                if mapping is None:
                    raise NPlusLineError("graph is not the line graph of the given root")
                g = g.relabel(mapping)
    else:
        assert root is not None
        g = line_graph(root).graph
    facets = classified_facets(g, root_for_tags, args.hull_limit)
    _emit([cf.to_json() for cf in facets], args)
    return 0


# -- verify ------------------------------------------------------------------


def _verify_item(item: tuple[int, list[tuple[int, int]], tuple[str, ...], int]) -> dict[str, Any]:
    n, pairs, checks, hull_limit = item
    h = Multigraph.from_pairs(n, pairs)
    out: dict[str, Any] = {}
    lg = line_graph(h)
    decided = None
    if "edmonds" in checks or "corollary2" in checks:
        report = verify_edmonds_description(h, hull_limit)
        if "edmonds" in checks:
            out["edmonds"] = report.passed
        if "corollary2" in checks:
            decided = decide_line_nplus_perfect(h).perfect
            out["corollary2"] = decided == report.h_perfect
    if "joined_a" in checks:
        if decided is None:
            decided = decide_line_nplus_perfect(h).perfect
        out["joined_a"] = is_joined_a_perfect(lg.graph, h, hull_limit) == decided
    return out


def cmd_verify(args: argparse.Namespace) -> int:
    if args.max_edges > VERIFY_EDGE_LIMIT:
        raise NPlusLineError(f"--max-edges is limited to {VERIFY_EDGE_LIMIT}")
    checks = tuple(
        name for name, on in (("edmonds", args.edmonds), ("corollary2", args.corollary2), ("joined_a", args.joined_a)) if on
    ) or ("edmonds", "corollary2", "joined_a")
    corpus = connected_multigraphs(args.max_edges, args.max_multiplicity)
    if args.random:
        extra = random_multigraphs(args.random, args.max_nodes_random, seed=args.seed)
        corpus += [g for g in extra if g.m and g.m <= HULL_NODE_LIMIT and is_connected(g)]
    items = [(g.n, g.pairs(), checks, args.hull_limit) for g in corpus]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_verify_item, items, chunksize=16))
    else:
        results = [_verify_item(item) for item in items]
    summary: dict[str, Any] = {
        "corpus_size": len(corpus),
        "max_edges": args.max_edges,
        "max_multiplicity": args.max_multiplicity,
        "checks": {},
    }
    ok = True
    for name in checks:
        passed = sum(1 for r in results if r[name])
        entry: dict[str, Any] = {"passed": passed, "failed": len(results) - passed}
        bad = next((g for g, r in zip(corpus, results) if not r[name]), None)
        if bad is not None:
            ok = False
            entry["first_counterexample"] = {"n": bad.n, "edges": [list(p) for p in bad.pairs()]}
        summary["checks"][name] = entry
    _emit(summary, args)
    return 0 if ok else 1


# -- entry point -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nplusline", description="N+-perfection of line graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a named graph in edge-list format")
    gen.add_argument("kind", choices=[k.value for k in families.FamilyKind])
    gen.add_argument("--k", type=int, default=2)
    gen.add_argument("--n", type=int, default=5)
    gen.add_argument("--span", type=int, default=2)
    gen.add_argument("--length", type=int, default=3)
    gen.add_argument("--distance", type=int, default=2)
    gen.add_argument("-o", "--out")
    gen.set_defaults(func=cmd_generate)

    cert = sub.add_parser("certify", help="decide N+-perfection of L(H) for a root graph H")
    cert.add_argument("root_graph")
    cert.add_argument("--max-nodes", type=int, default=SUBSET_SCAN_NODE_LIMIT)
    cert.add_argument("--hull-limit", type=int, default=HULL_NODE_LIMIT)
    cert.add_argument("--facets", action="store_true", help="include the classified facet table")
    cert.add_argument("--json", action="store_true", help="compact single-line JSON")
    cert.set_defaults(func=cmd_certify)

    fac = sub.add_parser("facets", help="facets of STAB(G) with their classes")
    fac.add_argument("graph", nargs="?")
    fac.add_argument("--root", help="root graph H with G = L(H)")
    fac.add_argument("--line-graph-only", action="store_true", help="do not use the root for tags")
    fac.add_argument("--hull-limit", type=int, default=HULL_NODE_LIMIT)
    fac.add_argument("--json", action="store_true")
    fac.set_defaults(func=cmd_facets)

    ver = sub.add_parser("verify", help="cross-check the characterisations on all small connected multigraphs")
    ver.add_argument("--max-edges", type=int, default=6)
    ver.add_argument("--max-multiplicity", type=int, default=2)
    ver.add_argument("--edmonds", action="store_true", help="facets of STAB(L(h)) are nonnegativity, clique or root rank")
    ver.add_argument("--corollary2", action="store_true", help="N+-perfect verdict agrees with h-perfection")
    ver.add_argument("--joined-a", action="store_true", help="joined a-perfection agrees with h-perfection")
    ver.add_argument("--jobs", type=int, default=1)
    ver.add_argument("--random", type=int, default=0, help="add this many random multigraphs")
    ver.add_argument("--max-nodes-random", type=int, default=7)
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--hull-limit", type=int, default=HULL_NODE_LIMIT)
    ver.add_argument("--json", action="store_true")
    ver.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NPlusLineError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
