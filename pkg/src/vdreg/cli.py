"""Command-line interface.

Exit codes follow the checker contract: 0 verified / success, 1 refuted,
2 invalid input, 3 inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .betti import MAX_BETTI_RING, betti_table, is_sequentially_cm, regularity
from .complexes import complex_stats, independence_complex
from .decomp import is_vertex_decomposable
from .graphs import graph_stats, induced_matching_number
from .homology import DEFAULT_CHARS
from .ideals import edge_ideal, height, minimal_primes, stanley_reisner_ideal
from .reports import HuntConfig, hunt, report_counterexample1, report_counterexample2
from .serialize import (
    betti_to_json,
    complex_from_json,
    graph_from_json,
    ideal_from_json,
    ideal_to_json,
    load_document,
    shelling_order_from_json,
    shelling_order_to_json,
)
from .shelling import find_shelling, verify_shelling

OK, REFUTED, INVALID, INCONCLUSIVE = 0, 1, 2, 3


def _emit(payload) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def _cmd_analyze_graph(args) -> int:
    g = graph_from_json(load_document(args.file))
    stats = graph_stats(g)
    ideal = edge_ideal(g)
    out = {
        "type": "graph_analysis",
        "n": g.n,
        "edge_count": g.edge_count(),
        "independence_number": stats.independence_number,
        "min_vertex_cover_size": stats.min_vertex_cover_size,
        "is_well_covered": stats.is_well_covered,
        "has_degree_one_vertex": stats.has_degree_one_vertex,
        "isolated_vertices": list(stats.isolated_vertices),
        "induced_matching_number": induced_matching_number(g),
        "edge_ideal": ideal_to_json(ideal),
    }
    if not ideal.is_zero:
        out["height"] = height(ideal)
        out["minimal_prime_count"] = len(minimal_primes(ideal))
    if g.n <= MAX_BETTI_RING and not ideal.is_zero:
        for p in DEFAULT_CHARS:
            out[f"reg_quotient[char={p}]"] = regularity(ideal, "quotient", p)
            out[f"sequentially_cm[char={p}]"] = is_sequentially_cm(g, p)
    else:
        out["skipped"] = f"regularity and sequential CM need edges and n <= {MAX_BETTI_RING}"
    _emit(out)
    return OK


def _cmd_analyze_complex(args) -> int:
    delta = complex_from_json(load_document(args.file))
    st = complex_stats(delta)
    out = {
        "type": "complex_analysis",
        "ground_n": delta.ground_n,
        "facet_count": st.facet_count,
        "dimension": None if delta.is_void else st.dimension,
        "is_pure": st.is_pure,
        "is_simplex": st.is_simplex,
        "f_vector": list(st.f_vector),
        "stanley_reisner_ideal": ideal_to_json(stanley_reisner_ideal(delta)),
    }
    search = find_shelling(delta)
    out["shelling"] = {"status": search.status, "reason": search.reason}
    if search.order is not None:
        out["shelling"]["order"] = shelling_order_to_json(delta, search.order_facets())
    _emit(out)
    return OK


def _parse_chars(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise ValueError(f"bad --char list {text!r}") from exc


def _cmd_betti(args) -> int:
    ideal = ideal_from_json(load_document(args.file))
    chars = _parse_chars(args.char)
    tables = [betti_to_json(betti_table(ideal, args.subject, p)) for p in chars]
    _emit({"type": "betti_tables", "subject": args.subject, "tables": tables})
    return OK


def _cmd_shelling(args) -> int:
    delta = complex_from_json(load_document(args.complex))
    if args.action == "verify":
        order = shelling_order_from_json(delta, load_document(args.order))
        good = verify_shelling(delta, order)
        _emit({"type": "shelling_verdict", "verified": good})
        return OK if good else REFUTED
    search = find_shelling(delta)
    out = {"type": "shelling_search", "status": search.status, "expanded": search.expanded}
    if search.reason:
        out["reason"] = search.reason
    if search.order is not None:
        out["order"] = shelling_order_to_json(delta, search.order_facets())
    _emit(out)
    if search.status == "shellable":
        return OK
    if search.status == "not_shellable":
        return REFUTED
    return INCONCLUSIVE


def _cmd_vd(args) -> int:
    g = graph_from_json(load_document(args.file))
    res = is_vertex_decomposable(g, budget=args.budget)
    _emit(res.trace)
    if res.verdict is True:
        return OK
    if res.verdict is False:
        return REFUTED
    return INCONCLUSIVE


def _cmd_paper(args) -> int:
    report = report_counterexample1() if args.which == "ex1" else report_counterexample2()
    print(report.to_json())
    return OK if report.status == "PASSED" else REFUTED


def _cmd_hunt(args) -> int:
    cfg = HuntConfig(
        n=args.n,
        samples=args.samples,
        seed=args.seed,
        model=args.model,
        edge_probability=args.p,
        vd_budget=args.budget,
    )
    found = 0
    for report in hunt(cfg):
        print(report.to_json())
        found += 1
    print(f"examined {cfg.samples} samples, {found} violators", file=sys.stderr)
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vdreg",
        description="Invariants of graphs, simplicial complexes, and square-free monomial ideals",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze-graph", help="invariants of a graph JSON file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_analyze_graph)

    p = sub.add_parser("analyze-complex", help="invariants of a complex JSON file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_analyze_complex)

    p = sub.add_parser("betti", help="Betti tables of an ideal JSON file")
    p.add_argument("file")
    p.add_argument("--char", default="2,32003", help="comma-separated primes")
    p.add_argument("--subject", choices=["quotient", "ideal"], default="quotient")
    p.set_defaults(func=_cmd_betti)

    p = sub.add_parser("shelling", help="verify or search for shelling orders")
    act = p.add_subparsers(dest="action", required=True)
    v = act.add_parser("verify", help="check a proposed order")
    v.add_argument("complex")
    v.add_argument("order")
    v.set_defaults(func=_cmd_shelling)
    f = act.add_parser("find", help="search for an order")
    f.add_argument("complex")
    f.set_defaults(func=_cmd_shelling)

    p = sub.add_parser("vd", help="vertex decomposability of a graph with trace")
    p.add_argument("file")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=_cmd_vd)

    p = sub.add_parser("paper", help="run a bundled counterexample report")
    p.add_argument("which", choices=["ex1", "ex2"])
    p.set_defaults(func=_cmd_paper)

    p = sub.add_parser("hunt", help="random search for violators of the three statements")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--model", choices=["gnp", "tree"], default="gnp")
    p.add_argument("--p", type=float, default=0.35, help="edge probability for gnp")
    p.add_argument("--budget", type=int, default=50_000, help="per-sample vd budget")
    p.set_defaults(func=_cmd_hunt)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INVALID


if __name__ == "__main__":
    sys.exit(main())
