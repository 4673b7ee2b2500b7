"""Command-line interface.

Every command reads one input file (or a builder name) and writes a single
report to stdout.  Exit status: 0 success, 1 invariant violation or oracle
mismatch, 2 malformed or oversized input.
"""
from __future__ import annotations

import argparse
import os
import sys
from typing import Optional

from .betti import (BettiSupport, betti_support_sbc, betti_support_weakly_chordal, hochster_multigraded,
                    support_of_disjoint_union)
from .closed import ClosedGraph, binomial_invariants, initial_graph, is_closed_labeling
from .constructions import GapParams, build_g0, build_g0t, build_h0, build_h0_doubleprime, random_sbc
from .families import brute_force_d, d_recursive, d_stratified, stratified_table
from .formats import FormatError, dumps, family_to_json, load, profile_to_json, to_json
from .graph_core import (BipartiteGraph, GraphError, SimpleGraph, brute_force_inm, connected_components,
                         induced_subgraph, is_weakly_chordal)
from .sbc import (IsolatedVertexError, ProfileError, SbcProfile, Violation, check_strongly_biconvex,
                  greedy_induced_matching, profile_to_graph)

DEFAULT_SIZE_LIMIT = 14


class Exit(Exception):
    def __init__(self, code: int, message: str, report: Optional[dict] = None):
        super().__init__(message)
        self.code = code
        self.report = report


def size_limit() -> int:
    raw = os.environ.get("SBC_SIZE_LIMIT")
    if raw is None:
        return DEFAULT_SIZE_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise Exit(2, f"SBC_SIZE_LIMIT must be an integer, got {raw!r}")


def _guard(nverts: int, args, what: str):
    limit = size_limit()
    if nverts > limit and not args.force:
        raise Exit(2, f"{what} refuses {nverts} vertices (limit {limit}); use --force or SBC_SIZE_LIMIT")


def _profile_of(obj) -> SbcProfile:
    if isinstance(obj, SbcProfile):
        return obj
    if isinstance(obj, BipartiteGraph):
        prof = check_strongly_biconvex(obj)
        if isinstance(prof, Violation):
            raise Exit(1, f"not strongly biconvex: {prof.message}",
                       {"strongly_biconvex": False, "condition": prof.condition,
                        "witness": list(prof.witness), "message": prof.message})
        return prof
    if isinstance(obj, ClosedGraph):
        return initial_graph(obj)[1]
    raise Exit(2, f"expected a bipartite graph, profile or closed graph, got {type(obj).__name__}")


def _pairs(pairs) -> list:
    return [list(p) for p in pairs]


# ---------------------------------------------------------------------------
# commands


def cmd_check(args) -> dict:
    obj = load(args.file)
    if isinstance(obj, BipartiteGraph):
        prof = _profile_of(obj)
        return {"strongly_biconvex": True, "profile": profile_to_json(prof)}
    if isinstance(obj, SbcProfile):
        return {"strongly_biconvex": True, "profile": profile_to_json(obj)}
    if isinstance(obj, ClosedGraph):
        _, prof = initial_graph(obj)
        return {"closed": True, "closed_graph": to_json(obj), "initial": profile_to_json(prof)}
    ok, cliques = is_closed_labeling(obj)
    report = {"type": "simple", "n": obj.n, "closed_labeling": ok,
              "cliques": _pairs(cliques) if ok else None}
    if obj.n <= size_limit() or args.force:
        report["weakly_chordal"] = is_weakly_chordal(obj)
    return report


def cmd_inm(args) -> dict:
    obj = load(args.file)
    if isinstance(obj, SimpleGraph):
        _guard(obj.n, args, "brute-force inm")
        size, m = brute_force_inm(obj)
        return {"size": size, "pairs": _pairs(m.edges), "method": "brute_force"}
    prof = _profile_of(obj)
    trace = greedy_induced_matching(prof)
    report = {"size": trace.m, "pairs": _pairs(trace.pairs), "method": "greedy"}
    if args.oracle:
        _guard(prof.num_vertices, args, "brute-force inm")
        size, _ = brute_force_inm(profile_to_graph(prof))
        report["oracle_size"] = size
        if size != trace.m:
            raise Exit(1, f"oracle mismatch: greedy {trace.m}, brute force {size}", report)
    return report


def cmd_d(args) -> dict:
    obj = load(args.file)
    if isinstance(obj, SimpleGraph):
        _guard(obj.n, args, "brute-force d")
        val, _ = brute_force_d(obj, args.r)
        return {"d": val, "r": args.r, "method": "brute_force"}
    prof = _profile_of(obj)
    if args.r is None:
        val = d_recursive(prof)
        report = {"d": val, "method": "recursive"}
    else:
        val, fam = d_stratified(prof, args.r)
        report = {"d": val, "r": args.r, "method": "stratified",
                  "family": family_to_json(fam) if fam is not None else None}
    if args.oracle:
        _guard(prof.num_vertices, args, "brute-force d")
        oval, _ = brute_force_d(profile_to_graph(prof), args.r)
        report["oracle_d"] = oval
        if oval != val:
            raise Exit(1, f"oracle mismatch: fast {val}, brute force {oval}", report)
    return report


def cmd_betti(args) -> dict:
    obj = load(args.file)
    if isinstance(obj, SimpleGraph):
        _guard(obj.n, args, "family-search Betti support")
        if not is_weakly_chordal(obj):
            raise Exit(1, "graph is not weakly chordal")
        support = betti_support_weakly_chordal(obj)
        graph = obj
    else:
        prof = _profile_of(obj)
        support = betti_support_sbc(prof)
        graph = profile_to_graph(prof)
    report = support.to_json()
    if args.hochster_char is not None:
        _guard(len(graph.vertices), args, "Hochster verification")
        try:
            h = hochster_multigraded(graph, args.hochster_char, max_vertices=None)
        except ValueError as exc:
            raise Exit(2, str(exc))
        hs = BettiSupport.from_positions((i, len(s)) for s, i in h)
        agrees = hs.positions == support.positions
        report["hochster"] = {"char": args.hochster_char, "agrees": agrees}
        if not agrees:
            raise Exit(1, "Hochster support differs from the family-derived support", report)
    return report


def cmd_closed(args) -> dict:
    obj = load(args.file)
    if not isinstance(obj, ClosedGraph):
        raise Exit(2, "expected a closed graph input")
    if args.what == "initial":
        ini, prof = initial_graph(obj)
        return {"initial": to_json(ini), "profile": profile_to_json(prof)}
    return binomial_invariants(obj).to_json()


def _profile_pipeline(prof: SbcProfile) -> dict:
    trace = greedy_induced_matching(prof)
    table = stratified_table(prof)
    support = betti_support_sbc(prof)
    p, r = support.projdim, support.reg
    return {
        "vertices": prof.num_vertices,
        "edges": prof.num_edges,
        "inm": trace.m,
        "matching": _pairs(trace.pairs),
        "d": d_recursive(prof),
        "d_r": {str(k): v for k, v in table.items()},
        "projdim": p,
        "reg": r,
        "top_corner": [p, p + r],
        "top_corner_present": (p, p + r) in support.positions,
        "extremal": [list(x) for x in support.extremal],
        "unique_extremal": support.unique_extremal,
        "positions": [list(x) for x in sorted(support.positions)],
    }


def _reproduce_h0() -> dict:
    return {"construction": "h0", "profile": profile_to_json(build_h0()), **_profile_pipeline(build_h0())}


def _reproduce_g0() -> dict:
    g0 = build_g0()
    _, ini = initial_graph(g0)
    hpp = build_h0_doubleprime()
    binom = binomial_invariants(g0)
    p, r = binom.projdim, binom.reg
    trace = greedy_induced_matching(ini)
    return {
        "construction": "g0",
        "closed_graph": to_json(g0),
        "initial": profile_to_json(ini),
        "initial_equals_h0_doubleprime": ini == hpp,
        "initial_pipeline": _profile_pipeline(ini),
        "inm": trace.m,
        "matching": _pairs(trace.pairs),
        "reg": r,
        "projdim": p,
        "vanishing_at_top_corner": (p, p + r) in binom.vanishing,
        "top_corner": [p, p + r],
        "unique_extremal": binom.to_json()["unique_extremal"],
        "binomial": binom.to_json(),
    }


def _reproduce_g0t(t: int) -> dict:
    c = build_g0t(t)
    ini_graph, ini = initial_graph(c)
    binom = binomial_invariants(c)
    p1 = binomial_invariants(build_g0()).projdim
    hpp = build_h0_doubleprime()
    comps = sorted(connected_components(ini_graph), key=lambda s: min(i for side, i in s if side == "x"))
    matches = []
    for k, comp in enumerate(comps):
        sub = check_strongly_biconvex(induced_subgraph(ini_graph, comp))
        matches.append(sub == hpp.shifted(16 * k))
    union = support_of_disjoint_union([betti_support_sbc(hpp)] * t)
    p, r = binom.projdim, binom.reg
    return {
        "construction": "g0t",
        "t": t,
        "n": c.n,
        "reg": r,
        "projdim": p,
        "projdim_g0": p1,
        "projdim_is_t_times_g0": p == t * p1,
        "top_corner": [p, p + r],
        "vanishing_at_top_corner": (p, p + r) in binom.vanishing,
        "unique_extremal": binom.to_json()["unique_extremal"],
        "initial_components": len(comps),
        "components_equal_shifted_h0_doubleprime": matches,
        "support_equals_disjoint_union": union.positions == binom.initial_support.positions,
        "binomial": binom.to_json(),
    }


def cmd_reproduce(args) -> dict:
    if args.which == "h0":
        return _reproduce_h0()
    if args.which == "g0":
        return _reproduce_g0()
    if args.t < 1:
        raise Exit(2, "--t must be at least 1")
    return _reproduce_g0t(args.t)


def cmd_gen(args) -> dict:
    params = GapParams(max_qprime_gap=args.max_qprime_gap, max_tail=args.max_tail,
                       jump_prob=args.jump_prob, max_jump=args.max_jump, max_vertices=args.max_vertices)
    try:
        return profile_to_json(random_sbc(args.seed, args.nx, params))
    except ValueError as exc:
        raise Exit(2, str(exc))


# ---------------------------------------------------------------------------
# rendering


def render_text(report, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(report, dict):
        positions = report.get("positions")
        for key, val in report.items():
            if key == "positions" and isinstance(val, list):
                continue
            if isinstance(val, dict):
                lines.append(f"{pad}{key}:")
                lines.append(render_text(val, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(val)}")
        if isinstance(positions, list):
            lines.append(f"{pad}betti table (rows j-i, columns i; * = nonzero):")
            lines.extend(pad + "  " + row for row in betti_table(positions))
    else:
        lines.append(pad + _scalar(report))
    return "\n".join(lines)


def _scalar(val) -> str:
    if isinstance(val, bool):
        return "yes" if val else "no"
    if isinstance(val, list):
        if val and all(isinstance(v, list) and len(v) == 2 for v in val):
            return " ".join(f"({a},{b})" for a, b in val)
        return ", ".join(_scalar(v) for v in val)
    return str(val)


def betti_table(positions) -> list[str]:
    pos = {tuple(p) for p in positions}
    if not pos:
        return ["(only beta_0,0)"]
    pmax = max(i for i, _ in pos)
    rmax = max(j - i for i, j in pos)
    width = len(str(pmax)) + 1
    header = "    " + "".join(str(i).rjust(width) for i in range(pmax + 1))
    rows = [header]
    for s in range(rmax + 1):
        cells = []
        for i in range(pmax + 1):
            nonzero = (i, i + s) in pos or (i == 0 and s == 0)
            cells.append(("*" if nonzero else ".").rjust(width))
        rows.append(f"{s:>3} " + "".join(cells))
    return rows


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sbcgraph", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--force", action="store_true", help="ignore desk-scale size guards")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="validate an input and print its profile")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("inm", parents=[common], help="greedy maximum induced matching")
    p.add_argument("file")
    p.add_argument("--oracle", action="store_true", help="cross-check with brute force")
    p.set_defaults(func=cmd_inm)

    p = sub.add_parser("d", parents=[common], help="d(H), or the best value with exactly R blocks")
    p.add_argument("file")
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=cmd_d)

    p = sub.add_parser("betti", parents=[common], help="Betti support report")
    p.add_argument("file")
    p.add_argument("--hochster-char", type=int, default=None, metavar="P")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("closed", parents=[common], help="initial graph or binomial transfer report")
    p.add_argument("file")
    p.add_argument("what", choices=("initial", "invariants"))
    p.set_defaults(func=cmd_closed)

    p = sub.add_parser("reproduce", parents=[common], help="run a named construction end to end")
    p.add_argument("which", choices=("h0", "g0", "g0t"))
    p.add_argument("--t", type=int, default=2)
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("gen", parents=[common], help="emit a random strongly biconvex profile")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--nx", type=int, required=True)
    p.add_argument("--max-qprime-gap", type=int, default=GapParams.max_qprime_gap)
    p.add_argument("--max-tail", type=int, default=GapParams.max_tail)
    p.add_argument("--jump-prob", type=float, default=GapParams.jump_prob)
    p.add_argument("--max-jump", type=int, default=GapParams.max_jump)
    p.add_argument("--max-vertices", type=int, default=None)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = args.func(args)
        code = 0
    except Exit as exc:
        print(exc, file=sys.stderr)
        if exc.report is None:
            return exc.code
        report, code = exc.report, exc.code
    except (FormatError, IsolatedVertexError, GraphError, OSError) as exc:
        print(f"malformed input: {exc}", file=sys.stderr)
        return 2
    except ProfileError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 1
    if args.format == "text":
        print(render_text(report))
    else:
        print(dumps(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
