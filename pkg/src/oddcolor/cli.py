"""Command line interface.

Exit codes: 0 success, 1 verification failure or exhausted budget, 2 bad
usage or unparsable input.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from . import io
from .chords import ChordDiagram, generate_gn, intersection_graph
from .complexity import eta, eta_sampled
from .errors import BudgetExceeded, InputError, OddColorError
from .exact import (
    SearchBudget,
    exact_fundcut_outcome,
    exact_min_odd_coloring,
    exact_one_sided_min,
    is_odd_coloring,
    is_one_sided_odd,
    problem51_scan,
    problem52_scan,
    verify_fundcut_coloring,
)
from .fundcut import circle98, fund_cut_color
from .generators import connected_multigraphs, planar_instance, random_bipartite, spanning_trees, stacked_triangulation, thin_two_edge_connected
from .graph import BipartiteGraph, bfs_spanning_forest
from .matroid import graphic_fundamental_graph
from .onesided import greedy_proper_color, improper_odd_color, one_sided_odd_color, product_odd_color


class VerificationFailed(Exception):
    pass


def _budget(args) -> SearchBudget:
    return SearchBudget(max_nodes=args.budget_nodes, max_seconds=args.budget_seconds)


def _emit(obj, args) -> None:
    text = io.dump_json(obj, args.out)
    if not args.out:
        sys.stdout.write(text)


def _tree_for(mg, args):
    if getattr(args, "tree", None):
        return io.parse_tree(io.read_text(args.tree))
    return bfs_spanning_forest(mg)


def _left(args, meta, n: int) -> int:
    k = args.left if args.left is not None else meta.get("left")
    if k is None:
        raise InputError("one-sided coloring needs --left (or a '# left k' line in the graph file)")
    k = int(k)
    if not 0 <= k <= n:
        raise InputError(f"--left {k} out of range")
    return k


def cmd_gen(args) -> int:
    if args.kind == "gn":
        if args.n is None:
            raise InputError("gen gn needs --n")
        inst = generate_gn(args.n)
        text = io.format_graph(inst.graph, {"vertices": " ".join(f"{a},{b}" for a, b in inst.vertices)})
    elif args.kind == "planar":
        n = args.n if args.n is not None else 20
        if n < 3:
            raise InputError("planar generator needs n >= 3")
        rng = random.Random(args.seed)
        emb = stacked_triangulation(n, rng)
        if args.thin:
            emb = thin_two_edge_connected(emb, args.thin, rng)
        text = io.format_embedding(emb)
        if args.tree_out:
            from .graph import random_spanning_forest

            open(args.tree_out, "w").write(io.format_tree(random_spanning_forest(emb.graph, rng)))
    elif args.kind == "chord":
        if not args.word:
            raise InputError("gen chord needs --word")
        text = io.format_graph(intersection_graph(ChordDiagram.parse(args.word)))
    else:
        rng = random.Random(args.seed)
        nl, nr = args.nx, args.ny
        if nl < 0 or nr < 0 or not 0 <= args.p <= 1:
            raise InputError("need nx, ny >= 0 and 0 <= p <= 1")
        bg = random_bipartite(nl, nr, args.p, rng)
        text = io.format_graph(bg.graph, {"left": nl})
    if args.out:
        open(args.out, "w").write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_color(args) -> int:
    alg = args.algorithm
    if alg == "circle98":
        emb = io.parse_embedding(io.read_text(args.input))
        T = _tree_for(emb.graph, args)
        res, report = circle98(emb, T, args.method)
        out = res.to_dict() | {"report": report}
        out["seed"] = args.seed
        _emit(out, args)
        return 0 if report["verification"] and res.num_colors <= 98 else 1
    if alg == "fundcut":
        mg, rest, _ = io.parse_multigraph(io.read_text(args.input))
        T = _tree_for(mg, args)
        res = fund_cut_color(mg, T, args.method)
        ok, bad = verify_fundcut_coloring(mg, T, res.edge_colors)
        out = res.to_dict() | {"tree": sorted(T), "seed": args.seed}
        _emit(out, args)
        if not ok:
            print(f"verification failed at tree edge {bad}", file=sys.stderr)
        return 0 if ok else 1
    g, meta = io.parse_graph(io.read_text(args.input))
    if alg == "one-sided":
        k = _left(args, meta, g.n)
        bg = BipartiteGraph(g, tuple(range(k)), tuple(range(k, g.n)))
        res = one_sided_odd_color(bg)
        ok, bad = is_one_sided_odd(g.adj, bg.X, res.colors)
    elif alg == "improper-odd":
        res = improper_odd_color(g)
        ok, bad = is_odd_coloring(g, res.colors)
    else:
        res = product_odd_color(g, improper_odd_color(g), greedy_proper_color(g))
        ok, bad = is_odd_coloring(g, res.colors, require_proper=True)
    res.seed = args.seed
    _emit(res.to_dict() | {"verification": ok}, args)
    if not ok:
        print(f"verification failed at vertex {bad}", file=sys.stderr)
    return 0 if ok else 1


def cmd_check(args) -> int:
    data = io.load_json(args.coloring)
    if "edge_colors" in data:
        mg, _, _ = io.parse_multigraph(io.read_text(args.input))
        T = io.parse_tree(io.read_text(args.tree)) if args.tree else frozenset(data.get("tree", ())) or bfs_spanning_forest(mg)
        colors = {int(k): int(v) for k, v in data["edge_colors"].items()}
        ok, bad = verify_fundcut_coloring(mg, T, colors)
        rec = {"kind": "fundcut", "valid": ok, "failing_tree_edge": bad}
    elif data.get("algorithm") == "circle98":
        # vertex colors of F(G,T), keyed by edge id of G
        mg, _, _ = io.parse_multigraph(io.read_text(args.input))
        T = _tree_for(mg, args)
        bg, order = graphic_fundamental_graph(mg, T).to_bipartite()
        colors = {int(k): int(v) for k, v in data["colors"].items()}
        if set(colors) != set(order):
            raise InputError("coloring must cover every edge of the graph")
        ok, bad = is_odd_coloring(bg.graph, {i: colors[lab] for i, lab in enumerate(order)}, require_proper=True)
        rec = {"kind": "fundamental-graph", "proper": True, "valid": ok,
               "failing_edge": None if bad is None else order[bad]}
    else:
        g, meta = io.parse_graph(io.read_text(args.input))
        colors = {int(k): int(v) for k, v in data["colors"].items()}
        if data.get("algorithm") == "one-sided":
            k = _left(args, meta, g.n)
            ok, bad = is_one_sided_odd(g.adj, range(k), colors)
            proper = False
        else:
            proper = args.proper or bool(data.get("proper"))
            ok, bad = is_odd_coloring(g, colors, require_proper=proper)
        rec = {"kind": "vertex", "proper": proper, "valid": ok, "failing_vertex": bad}
    _emit(rec, args)
    if not ok:
        print(f"invalid coloring: {rec}", file=sys.stderr)
    return 0 if ok else 1


def cmd_exact(args) -> int:
    budget = _budget(args)
    rec = {"instance_id": args.input, "parameter": args.param, "value": None, "nodes": 0, "seconds": 0.0}
    t0 = time.perf_counter()
    try:
        if args.param == "fundcut":
            mg, _, _ = io.parse_multigraph(io.read_text(args.input))
            o, _ = exact_fundcut_outcome(mg, _tree_for(mg, args), budget)
        else:
            g, meta = io.parse_graph(io.read_text(args.input))
            if args.param == "one-sided":
                k = _left(args, meta, g.n)
                o = exact_one_sided_min(g.adj, range(k), range(k, g.n), budget)
            else:
                o = exact_min_odd_coloring(g, args.param == "chi-o", budget)
        rec.update(value=o.value, nodes=o.nodes)
        code = 0
    except BudgetExceeded as exc:
        rec.update(nodes=exc.nodes, lower=exc.lower, upper=exc.upper, note=str(exc))
        code = 1
    rec["seconds"] = round(time.perf_counter() - t0, 4)
    _emit(rec, args)
    return code


def cmd_eta(args) -> int:
    g, _ = io.parse_graph(io.read_text(args.input))
    t0 = time.perf_counter()
    if args.samples:
        val = eta_sampled(g, args.m, args.samples, args.seed)
        param = f"eta_sampled(m={args.m})"
    else:
        val = eta(g, args.m)
        param = f"eta(m={args.m})"
    _emit({"instance_id": args.input, "parameter": param, "value": val, "nodes": 0,
           "seconds": round(time.perf_counter() - t0, 4)}, args)
    return 0


def cmd_scan51(args) -> int:
    corpus = []
    for i in range(args.count):
        emb, T = planar_instance(args.seed * 100003 + i, n_min=4, n_max=args.n_max)
        corpus.append((f"planar-{args.seed}-{i}", emb.graph, T))
    recs = problem51_scan(corpus, _budget(args), args.max_vertices)
    vals = [r["value"] for r in recs if r["value"] is not None]
    _emit({"records": recs, "max_value": max(vals, default=None),
           "flagged": [r["instance_id"] for r in recs if r.get("flagged")]}, args)
    return 0


def cmd_scan52(args) -> int:
    corpus = []
    for gi, g in enumerate(connected_multigraphs(args.max_edges)):
        for ti, T in enumerate(spanning_trees(g)):
            corpus.append((f"g{gi}-t{ti}", g, T))
    recs = problem52_scan(corpus, _budget(args))
    vals = [r["value"] for r in recs if r["value"] is not None]
    _emit({"instances": len(recs), "max_value": max(vals, default=None), "records": recs}, args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="write the result here instead of stdout")
    common.add_argument("--budget-nodes", type=int, default=None)
    common.add_argument("--budget-seconds", type=float, default=None)
    common.add_argument("--method", choices=["auto", "treewidth2", "generic"], default="auto",
                        help="star forest decomposition for fundamental cut colorings")

    p = argparse.ArgumentParser(prog="oddcolor", description="Odd colorings of graphs and fundamental graphs")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate instances")
    g.add_argument("kind", choices=["gn", "planar", "chord", "random-bipartite"])
    g.add_argument("pos_n", nargs="?", type=int, help="size (same as --n)")
    g.add_argument("--n", type=int)
    g.add_argument("--thin", type=float, default=0.0, help="fraction of edges to delete (planar)")
    g.add_argument("--tree-out", help="also write a random spanning tree (planar)")
    g.add_argument("--word", help="chord word, e.g. 012012")
    g.add_argument("--nx", type=int, default=5)
    g.add_argument("--ny", type=int, default=5)
    g.add_argument("--p", type=float, default=0.5)
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("color", parents=[common], help="run a coloring algorithm and verify it")
    c.add_argument("algorithm", choices=["improper-odd", "one-sided", "product", "fundcut", "circle98"])
    c.add_argument("input")
    c.add_argument("--tree")
    c.add_argument("--left", type=int)
    c.set_defaults(func=cmd_color)

    k = sub.add_parser("check", parents=[common], help="verify a coloring file")
    k.add_argument("input")
    k.add_argument("coloring")
    k.add_argument("--tree")
    k.add_argument("--left", type=int)
    k.add_argument("--proper", action="store_true")
    k.set_defaults(func=cmd_check)

    e = sub.add_parser("exact", parents=[common], help="exact minimum palette")
    e.add_argument("param", choices=["chi-o", "chi-io", "one-sided", "fundcut"])
    e.add_argument("input")
    e.add_argument("--tree")
    e.add_argument("--left", type=int)
    e.set_defaults(func=cmd_exact)

    h = sub.add_parser("eta", parents=[common], help="neighbourhood complexity")
    h.add_argument("input")
    h.add_argument("--m", type=int, required=True)
    h.add_argument("--samples", type=int, default=0, help="sample this many subsets instead of enumerating")
    h.set_defaults(func=cmd_eta)

    s1 = sub.add_parser("scan51", parents=[common], help="exact odd chromatic numbers of small planar fundamental graphs")
    s1.add_argument("--count", type=int, default=20)
    s1.add_argument("--n-max", type=int, default=7)
    s1.add_argument("--max-vertices", type=int, default=14)
    s1.set_defaults(func=cmd_scan51)

    s2 = sub.add_parser("scan52", parents=[common], help="exact fundamental-cut palette minima on the small catalog")
    s2.add_argument("--max-edges", type=int, default=5)
    s2.set_defaults(func=cmd_scan52)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "pos_n", None) is not None and args.n is None:
        args.n = args.pos_n
    try:
        return args.func(args)
    except (InputError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OddColorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
