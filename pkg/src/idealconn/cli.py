"""Command-line front end.

    idealconn recognize GRAPH          class memberships with certificates
    idealconn ideal GRAPH [--table]    flow-oracle ideality report
    idealconn decompose GRAPH          kappa-clique cut, S-subgraphs, structure conditions
    idealconn cliquetree GRAPH         maximal cliques, a clique tree, K^j profile, universality
    idealconn paths GRAPH U V          internally disjoint paths, one per line
    idealconn avg GRAPH                average connectivity (exact)
    idealconn menger GRAPH M           strong m-Menger check
    idealconn analyze GRAPH            full report
    idealconn batch [FILE]             JSON-lines report per graph6 line
    idealconn gen KIND                 graph6 lines on stdout

GRAPH is a graph6 string, a file name, or ``-`` for stdin. Exit codes: 0 on
success, 2 on unreadable input, 3 when a theorem-based verdict disagrees
with the flow oracle.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter
from functools import partial
from multiprocessing import Pool
from pathlib import Path

from . import cliquetree as ct
from .connectivity import average_connectivity, disjoint_paths, is_ideally_connected, is_strongly_m_menger
from .decomposition import find_kappa_clique_cut, s_subgraphs, verify_structure_theorem
from .errors import GraphError
from .generators import (
    all_graphs,
    fig1_threshold16,
    fig4_split_counterexample,
    random_chordal,
    random_cograph,
    random_graph,
    random_threshold,
)
from .graph import Graph, parse_edgelist, parse_graph6, to_dot, to_graph6
from .recognizers import (
    classify,
    is_2k2_free,
    recognize_chordal,
    recognize_cograph,
    recognize_split,
    recognize_threshold,
)
from .theorems import NO_THM, fast_verdict

EXIT_OK, EXIT_PARSE, EXIT_DISAGREE = 0, 2, 3


class InputError(Exception):
    pass


class Disagreement(Exception):
    pass


def _read_source(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    path = Path(source)
    if path.is_file():
        return path.read_text()
    return source


def load_graph(source: str, fmt: str) -> Graph:
    text = _read_source(source)
    try:
        if fmt == "edgelist":
            return parse_edgelist(text)
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise InputError(f"expected exactly one graph6 line, got {len(lines)}")
        return parse_graph6(lines[0].strip())
    except GraphError as exc:
        raise InputError(str(exc)) from exc


def _emit(args, payload, text: str | None = None) -> None:
    if args.json or text is None:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# --- reports --------------------------------------------------------------------


def _decomposition_summary(g: Graph) -> dict | None:
    if g.n == 0 or g.is_complete() or not g.is_connected():
        return None
    cut = find_kappa_clique_cut(g)
    if cut is None:
        return {"cut": None}
    d = s_subgraphs(g, cut)
    report = verify_structure_theorem(g, cut, d)
    return {"cut": cut.sorted(), "t": cut.t, "parts": len(d.subgraphs), "conditions": report.to_json()}


def _cliquetree_summary(g: Graph) -> dict | None:
    if not recognize_chordal(g) or g.n == 0:
        return None
    cliques = ct.maximal_cliques_chordal(g)
    pair = ct.gavril_clique_tree(g)
    out = {
        "cliques": [sorted(c) for c in cliques],
        "profile": list(ct.kj_profile(g)),
        "tree": pair.to_json(cliques),
        "star": ct.star_clique_tree_check(g),
    }
    if len(cliques) <= ct.MAX_UNIVERSAL_CLIQUES:
        res = ct.is_clique_tree_universal(g)
        out["universal"] = res.universal
        out["failing_tree"] = None if res.failing_tree is None else res.failing_tree.to_json()
    return out


def build_report(g: Graph, input_id, decomposition: bool = False, cliquetree: bool = False) -> dict:
    """The per-graph record used by ``analyze`` and ``batch``."""
    started = time.perf_counter()
    oracle = is_ideally_connected(g)
    fast = fast_verdict(g) if g.n else None
    agreement = fast is None or fast.applicable_theorem == NO_THM or fast.ideally_connected == oracle.ideally_connected
    report = {
        "input_id": input_id,
        "graph6": to_graph6(g),
        "n": g.n,
        "m": g.m,
        "classes": classify(g),
        "ideal": oracle.to_json(),
        "fast": None if fast is None or fast.applicable_theorem == NO_THM else fast.to_json(),
        "agreement": agreement,
    }
    if decomposition:
        report["decomposition"] = _decomposition_summary(g)
    if cliquetree:
        report["cliquetree"] = _cliquetree_summary(g)
    report["timing_ms"] = round(1000 * (time.perf_counter() - started), 3)
    return report


def _batch_line(item, decomposition, cliquetree):
    lineno, line = item
    try:
        g = parse_graph6(line.strip())
    except GraphError as exc:
        return {"input_id": lineno, "error": str(exc)}
    return build_report(g, lineno, decomposition, cliquetree)


# --- subcommands -------------------------------------------------------------------


def cmd_recognize(args):
    g = load_graph(args.graph, args.format)
    recs = [
        recognize_cograph(g),
        recognize_chordal(g),
        recognize_split(g),
        recognize_threshold(g),
        is_2k2_free(g),
    ]
    payload = [r.to_json() for r in recs]
    _emit(args, payload, "\n".join(f"{r.graph_class}: {r.member}" for r in recs))
    return EXIT_OK


def cmd_ideal(args):
    g = load_graph(args.graph, args.format)
    rep = is_ideally_connected(g, table=args.table)
    payload = rep.to_json()
    if args.table:
        payload["local_table"] = rep.local_table
    text = f"ideal: {rep.ideally_connected}\nkappa: {rep.kappa}"
    if rep.witness:
        w = rep.witness
        text += f"\nwitness: {w.u} {w.v} local={w.local} bound={w.bound}"
    _emit(args, payload, text)
    fast = fast_verdict(g) if g.n else None
    if fast is not None and fast.applicable_theorem != NO_THM and fast.ideally_connected != rep.ideally_connected:
        raise Disagreement(f"{fast.applicable_theorem} says {fast.ideally_connected}, oracle says {rep.ideally_connected}")
    return EXIT_OK


def cmd_decompose(args):
    g = load_graph(args.graph, args.format)
    summary = _decomposition_summary(g)
    if summary is None or summary["cut"] is None:
        _emit(args, {"decomposition": summary}, "no kappa-clique cut")
        return EXIT_OK
    d = s_subgraphs(g, find_kappa_clique_cut(g))
    payload = {"decomposition": d.to_json(), "conditions": summary["conditions"]}
    oracle = is_ideally_connected(g).ideally_connected
    payload["oracle_ideal"] = oracle
    text = (
        f"cut: {summary['cut']}\nparts: {summary['parts']}\n"
        f"conditions hold: {summary['conditions']['overall']}\noracle ideal: {oracle}"
    )
    _emit(args, payload, text)
    if summary["conditions"]["overall"] != oracle:
        raise Disagreement("structure conditions disagree with the oracle")
    return EXIT_OK


def cmd_cliquetree(args):
    g = load_graph(args.graph, args.format)
    summary = _cliquetree_summary(g)
    if summary is None:
        _emit(args, {"cliquetree": None}, "graph is not chordal")
        return EXIT_OK
    if args.dot:
        cliques = ct.maximal_cliques_chordal(g)
        sys.stdout.write(ct.gavril_clique_tree(g).to_dot(cliques))
        return EXIT_OK
    text = "\n".join(f"{k}: {v}" for k, v in summary.items())
    _emit(args, summary, text)
    return EXIT_OK


def cmd_paths(args):
    g = load_graph(args.graph, args.format)
    ps = disjoint_paths(g, args.u, args.v)
    _emit(args, {"source": ps.source, "target": ps.target, "paths": [list(p) for p in ps.paths]},
          "\n".join(ps.lines()))
    return EXIT_OK


def cmd_avg(args):
    g = load_graph(args.graph, args.format)
    value = average_connectivity(g)
    _emit(args, {"average": str(value), "numerator": value.numerator, "denominator": value.denominator},
          str(value))
    return EXIT_OK


def cmd_menger(args):
    g = load_graph(args.graph, args.format)
    res = is_strongly_m_menger(g, args.m)
    payload = {"m": args.m, "strongly_menger": res.strongly_menger,
               "fault_set": None if res.fault_set is None else list(res.fault_set)}
    _emit(args, payload, f"strongly {args.m}-Menger: {res.strongly_menger}"
          + ("" if res.fault_set is None else f"\nfault set: {list(res.fault_set)}"))
    return EXIT_OK


def cmd_analyze(args):
    g = load_graph(args.graph, args.format)
    report = build_report(g, args.graph if len(args.graph) < 64 else "input", args.decomposition, args.cliquetree)
    if args.dot:
        sys.stdout.write(to_dot(g))
    print(json.dumps(report, sort_keys=True, indent=None if args.json else 2))
    if not report["agreement"]:
        raise Disagreement("fast verdict disagrees with the oracle")
    return EXIT_OK


def cmd_batch(args):
    stream = sys.stdin if args.input == "-" else open(args.input)
    items = [(i, line) for i, line in enumerate(stream, 1) if line.strip()]
    if stream is not sys.stdin:
        stream.close()
    if args.strict:
        for lineno, line in items:
            try:
                parse_graph6(line.strip())
            except GraphError as exc:
                raise InputError(f"line {lineno}: {exc}") from exc
    worker = partial(_batch_line, decomposition=args.decomposition, cliquetree=args.cliquetree)
    if args.jobs > 1 and len(items) > 1:
        with Pool(args.jobs) as pool:
            records = pool.imap(worker, items, chunksize=16)
            summary = _write_records(records)
    else:
        summary = _write_records(map(worker, items))
    print(json.dumps({"summary": summary}, sort_keys=True), file=sys.stderr)
    if summary["disagreements"]:
        raise Disagreement(f"{len(summary['disagreements'])} fast/oracle disagreements")
    return EXIT_OK


def _write_records(records) -> dict:
    classes: Counter = Counter()
    total = errors = ideal = 0
    disagreements = []
    for rec in records:
        print(json.dumps(rec, sort_keys=True))
        total += 1
        if "error" in rec:
            errors += 1
            continue
        classes.update(k for k, v in rec["classes"].items() if v)
        ideal += rec["ideal"]["ideal"]
        if not rec["agreement"]:
            disagreements.append(rec["input_id"])
    return {"records": total, "errors": errors, "ideal": ideal, "classes": dict(classes),
            "disagreements": disagreements}


def cmd_gen(args):
    kind = args.kind
    if kind == "fig1":
        graphs = [fig1_threshold16()]
    elif kind == "fig4":
        graphs = [fig4_split_counterexample()]
    elif kind == "all":
        graphs = all_graphs(args.n)
    else:
        make = {
            "threshold": random_threshold,
            "cograph": random_cograph,
            "chordal": random_chordal,
            "random": random_graph,
        }[kind]
        graphs = (make(args.n, args.seed + i) for i in range(args.count))
    for g in graphs:
        print(to_graph6(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    shared.add_argument("--json", action="store_true", help="machine-readable output")
    shared.add_argument("--seed", type=int, default=0)
    shared.add_argument("--jobs", type=int, default=1, help="worker processes for batch work")

    parser = argparse.ArgumentParser(prog="idealconn", description="Ideal connectedness toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help_text):
        p = sub.add_parser(name, parents=[shared], help=help_text)
        p.add_argument("graph", nargs="?", default="-", help="graph6 string, file, or - for stdin")
        p.set_defaults(func=func)
        return p

    graph_cmd("recognize", cmd_recognize, "class recognizers with certificates")
    p = graph_cmd("ideal", cmd_ideal, "flow-oracle ideal connectedness")
    p.add_argument("--table", action="store_true", help="include the full local connectivity matrix")
    graph_cmd("decompose", cmd_decompose, "kappa-clique cut decomposition")
    p = graph_cmd("cliquetree", cmd_cliquetree, "clique trees of chordal graphs")
    p.add_argument("--dot", action="store_true", help="emit the clique tree as DOT")
    p = sub.add_parser("paths", parents=[shared], help="internally disjoint u-v paths")
    p.add_argument("graph")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p.set_defaults(func=cmd_paths)
    graph_cmd("avg", cmd_avg, "average connectivity")
    p = sub.add_parser("menger", parents=[shared], help="strong m-Menger connectivity")
    p.add_argument("graph")
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_menger)
    p = graph_cmd("analyze", cmd_analyze, "full per-graph report")
    p.add_argument("--decomposition", action="store_true")
    p.add_argument("--cliquetree", action="store_true")
    p.add_argument("--dot", action="store_true", help="also print the graph as DOT")
    p = sub.add_parser("batch", parents=[shared], help="JSON-lines reports for a graph6 corpus")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--strict", action="store_true", help="abort on the first unreadable line")
    p.add_argument("--decomposition", action="store_true")
    p.add_argument("--cliquetree", action="store_true")
    p.set_defaults(func=cmd_batch)
    p = sub.add_parser("gen", parents=[shared], help="emit graph6 lines")
    p.add_argument("kind", choices=("threshold", "cograph", "chordal", "random", "all", "fig1", "fig4"))
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--count", type=int, default=1)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"idealconn: input error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except Disagreement as exc:
        print(f"idealconn: DISAGREEMENT: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except GraphError as exc:
        print(f"idealconn: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
