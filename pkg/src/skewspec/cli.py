"""Command-line front end: ``skewspec <subcommand> ...``.

Exit codes: 0 success, 1 a verification failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import census as census_mod
from .covers import (
    cover_routing_sign,
    cover_term,
    enumerate_covers,
    verify_theorem1_cancellation,
)
from .errors import SkewSpecError
from .exactpoly import charpoly, holds_problem1_identity, matching_counts, matching_polynomial
from .graph import Graph, generate, parse_edge_list, parse_graph6
from .orientation import Orientation, skew_matrix, switching_class_representatives, theorem1_orientation
from .spectra import (
    check_extremal_bounds,
    fmt_float,
    max_skew_spectral_radius,
    spectral_radius_adjacency,
    spectral_radius_skew,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _f(x: float) -> str:
    return f"{x:.12g}"


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        for line in lines:
            print(line)


def load_graph(args) -> Graph:
    if args.graph6 is not None:
        return parse_graph6(args.graph6)
    if args.edges is not None:
        try:
            with open(args.edges, encoding="utf-8") as fh:
                return parse_edge_list(fh.read())
        except OSError as exc:
            raise UsageError(f"cannot read edge list: {exc}") from None
    name, _, rest = args.family.partition(",")
    try:
        params = [int(p) for p in rest.split(",") if p.strip()]
    except ValueError:
        raise UsageError(f"family parameters must be integers: {args.family!r}") from None
    return generate(name.strip(), params)


def resolve_orientations(g: Graph, spec: str | None) -> list[Orientation]:
    if spec is None or spec == "canonical":
        return [Orientation.all_plus(g)]
    if spec == "all-classes":
        return switching_class_representatives(g)
    if len(spec) != g.m:
        raise UsageError(f"orientation has {len(spec)} signs but the graph has {g.m} edges")
    return [Orientation.from_text(g, spec)]


def poly_payload(p) -> dict:
    return {"text": str(p), "coefficients": p.descending()}


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_matching_poly(args) -> int:
    g = load_graph(args)
    counts = matching_counts(g)
    p = matching_polynomial(g)
    _emit(args, {"n": g.n, "m": g.m, "matching_polynomial": poly_payload(p), "matching_counts": counts},
          [f"m(G,x) = {p}", "m_k = " + " ".join(f"{k}:{c}" for k, c in enumerate(counts))])
    return EXIT_OK


def cmd_skew_charpoly(args) -> int:
    g = load_graph(args)
    rows = []
    for o in resolve_orientations(g, args.orientation):
        rows.append({"orientation": o.text(), "charpoly": poly_payload(charpoly(skew_matrix(o)))})
    _emit(args, {"n": g.n, "m": g.m, "results": rows},
          [f"{r['orientation'] or '(none)'}  {r['charpoly']['text']}" for r in rows])
    return EXIT_OK


def cmd_covers(args) -> int:
    g = load_graph(args)
    if args.orientation == "all-classes":
        raise UsageError("covers takes a single orientation")
    (o,) = resolve_orientations(g, args.orientation)
    covers = enumerate_covers(g, args.k)
    items, lines = [], []
    total = 0
    for u in covers:
        term = cover_term(o, u)
        total += term
        items.append({
            "edges": [list(e) for e in u.edges],
            "cycles": [{"vertices": list(c.vertices), "routing_sign": cover_routing_sign(o, c)} for c in u.cycles],
            "term": term,
        })
        lines.append(f"{u.describe():40s} term {term:+d}")
    matchings = sum(1 for u in covers if not u.cycles)
    cycle_sum = total - matchings
    lines.append(f"m_{args.k} = {matchings}; cycle terms = {cycle_sum:+d}; s_{args.k} = {total}")
    _emit(args, {"k": args.k, "orientation": o.text(), "covers": items,
                 "m_k": matchings, "cycle_sum": cycle_sum, "s_k": total}, lines)
    return EXIT_OK


def cmd_verify_theorem1(args) -> int:
    m = args.m
    g, o = theorem1_orientation(m)
    identity = holds_problem1_identity(g, o)
    reports = [verify_theorem1_cancellation(m, k) for k in range(2 * m, 4 * m - 1, 2)]
    ok = identity and all(r.ok for r in reports)
    lines = [f"k={r.k}: count1={r.count1} count2={r.count2} sum={r.sum} {'PASS' if r.ok else 'FAIL'}"
             for r in reports]
    lines.append(f"identity p_S(x) = (-i)^n m(G,ix): {'PASS' if identity else 'FAIL'}")
    lines.append(f"charpoly: {charpoly(skew_matrix(o))}")
    _emit(args, {"m": m, "n": g.n, "orientation": o.text(), "identity": identity,
                 "cancellation": [r.to_dict() for r in reports], "pass": ok}, lines)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_rho(args) -> int:
    g = load_graph(args)
    if args.adjacency:
        rho = spectral_radius_adjacency(g)
        _emit(args, {"rho_adjacency": fmt_float(rho)}, [_f(rho)])
        return EXIT_OK
    if args.orientation is not None and args.orientation != "all-classes":
        (o,) = resolve_orientations(g, args.orientation)
        rho = spectral_radius_skew(skew_matrix(o))
        _emit(args, {"orientation": o.text(), "rho": fmt_float(rho)}, [_f(rho)])
        return EXIT_OK
    rep = max_skew_spectral_radius(g)
    if args.profile:
        lines = [_f(r) for r in rep.rho_profile]
    else:
        lines = [f"{_f(rep.rho_max_skew)}  (argmax {rep.argmax_orientation.text()}, rho(A) = {_f(rep.rho_adjacency)})"]
    _emit(args, rep.to_dict(), lines)
    return EXIT_OK


def cmd_bounds(args) -> int:
    g = load_graph(args)
    b = check_extremal_bounds(g)
    d = b.to_dict()
    lines = [f"{k}: {v}" for k, v in d.items()]
    _emit(args, d, lines)
    return EXIT_OK if b.consistent else EXIT_FAIL


def cmd_census(args) -> int:
    checks = census_mod.parse_checks(args.checks)
    try:
        with open(args.input, encoding="ascii") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc}") from None
    summary = census_mod.run_census(lines, checks, args.out, workers=args.workers)
    print(json.dumps(summary))
    return EXIT_OK if summary["with_violations"] == summary["parse_errors"] == 0 else EXIT_FAIL


# ---------------------------------------------------------------------------

def _add_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6", metavar="STRING", help="graph in graph6 form")
    src.add_argument("--edges", metavar="FILE", help="edge-list file: 'n m' then 'u v' lines")
    src.add_argument("--family", metavar="NAME,PARAMS",
                     help="built-in family, e.g. cycle,4 or complete_bipartite,3,4 or theorem1,2")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="skewspec", description="Skew spectra of oriented graphs.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, source=True):
        p = sub.add_parser(name, help=help_)
        if source:
            _add_source(p)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    add("matching-poly", cmd_matching_poly, "matching polynomial and m_k counts")

    p = add("skew-charpoly", cmd_skew_charpoly, "exact skew characteristic polynomial(s)")
    p.add_argument("--orientation", default="canonical", metavar="SIGNS|canonical|all-classes")

    p = add("covers", cmd_covers, "list covers of k vertices and their signed sum")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--orientation", default="canonical", metavar="SIGNS|canonical")

    p = add("verify-theorem1", cmd_verify_theorem1, "check the two-cycle construction", source=False)
    p.add_argument("-m", type=int, required=True)

    p = add("rho", cmd_rho, "spectral radii")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--max", action="store_true", help="max over orientations (default)")
    mode.add_argument("--profile", action="store_true", help="distinct radii over switching classes")
    mode.add_argument("--adjacency", action="store_true", help="ordinary adjacency radius")
    p.add_argument("--orientation", default=None, metavar="SIGNS|canonical",
                   help="radius of a single orientation")

    add("bounds", cmd_bounds, "extremal bound report")

    p = add("census", cmd_census, "batch classification of a graph6 file", source=False)
    p.add_argument("input", metavar="FILE.g6")
    p.add_argument("--checks", default="cospectral", help="comma list of cospectral,problem1,problem2,bounds")
    p.add_argument("--out", required=True, metavar="FILE.jsonl")
    p.add_argument("--workers", type=int, default=None,
                   help="worker processes (default: SKEWSPEC_THREADS or CPU count)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, SkewSpecError) as exc:
        print(f"skewspec {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
