"""Acceptance suite: one test per criterion, one PASS/FAIL line per criterion.

Lines are printed in the pytest terminal summary (see conftest.py) and
when this file is run directly with ``python tests/test_acceptance.py``.
Time limits are wall-clock seconds and are pinned below.
"""

from __future__ import annotations

import random
import time
from itertools import combinations

from oddcolor.chords import generate_gn, xor_neighborhood_check
from oddcolor.complexity import eta
from oddcolor.exact import (
    exact_chi_io,
    exact_chi_o,
    exact_one_sided_min,
    has_odd_coloring,
    is_odd_coloring,
    is_one_sided_odd,
    verify_fundcut_coloring,
)
from oddcolor.fundcut import LaminarFamily, circle98, cut_local_9color, fund_cut_color, laminar_odd_3color, laminar_good
from oddcolor.errors import InfeasibleError
from oddcolor.generators import (
    connected_multigraphs,
    laminar_families,
    planar_corpus,
    planar_instance,
    random_bipartite,
    random_standard_matroid,
    spanning_trees,
)
from oddcolor.graph import Graph, RootedForest
from oddcolor.matroid import dual_matroid, fundamental_graph, graphic_fundamental_graph, remove_element
from oddcolor.onesided import greedy_proper_color, improper_odd_color, one_sided_odd_color, product_odd_color
from oddcolor.planar import cotree_dual_forest, dual_graph, fundamental_cut, fundamental_cycle

from oracles import cut_local_ok, eta_brute, fundcut_ok, laminar_goodmasks

LIMIT_C1 = 1.0
LIMIT_C2 = 60.0
LIMIT_C4 = 30.0
LIMIT_C6 = 10.0

CORPUS_SIZE = 100
CORPUS_SEED = 0
CORPUS_NMAX = 40
SOUNDNESS_INSTANCES = 500

RESULTS: dict[int, tuple[bool, str]] = {}


def record(n: int, ok: bool, detail: str) -> None:
    prev = RESULTS.get(n)
    if prev is not None:
        ok = ok and prev[0]
        detail = prev[1] + "; " + detail
    RESULTS[n] = (ok, detail)


_corpus = None


def corpus():
    global _corpus
    if _corpus is None:
        _corpus = planar_corpus(CORPUS_SIZE, seed=CORPUS_SEED, n_max=CORPUS_NMAX)
    return _corpus


def test_criterion_1_c4_odd_chromatic_number():
    C4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    t0 = time.perf_counter()
    val = exact_chi_o(C4)
    dt = time.perf_counter() - t0
    ok = val == 4 and dt < LIMIT_C1
    record(1, ok, f"exact_chi_o(C4)={val} in {dt:.4f}s (limit {LIMIT_C1}s)")
    assert val == 4
    assert dt < LIMIT_C1


def test_criterion_2_circle98_on_planar_corpus():
    t0 = time.perf_counter()
    failures = []
    max_colors = 0
    tw_runs = 0
    tw_over = []
    max_nontree = 0
    for i, (emb, T) in enumerate(corpus()):
        res, rep = circle98(emb, T)
        # independent re-check of the whole fundamental graph
        bg, order = graphic_fundamental_graph(emb.graph, T).to_bipartite()
        ok, _ = is_odd_coloring(bg.graph, {j: res.colors[lab] for j, lab in enumerate(order)}, require_proper=True)
        if not (ok and rep["verification"] and res.num_colors <= 98):
            failures.append(i)
        max_colors = max(max_colors, res.num_colors)
        if all("treewidth2" in m for m in rep["nontree_methods"]):
            tw_runs += 1
            max_nontree = max(max_nontree, rep["nontree_colors"])
            if rep["nontree_colors"] > 49 or rep["nontree_max_color"] > 49:
                tw_over.append(i)
    dt = time.perf_counter() - t0
    ok = not failures and not tw_over and dt < LIMIT_C2
    record(2, ok, f"{CORPUS_SIZE} instances, failures={failures}, max colors={max_colors} (<=98), "
                  f"treewidth2 on every layer in {tw_runs}, max non-tree colors={max_nontree} (<=49), "
                  f"{dt:.2f}s (limit {LIMIT_C2}s)")
    assert not failures
    assert not tw_over
    assert dt < LIMIT_C2


def test_criterion_3_fundamental_cut_bound():
    bad = []
    runs = 0
    for i, (emb, T) in enumerate(corpus()):
        r = fund_cut_color(emb.graph, T)
        runs += 1
        if not verify_fundcut_coloring(emb.graph, T, r.edge_colors)[0] or r.max_color > 16 * r.slots + 1:
            bad.append(("planar", i))
    small = 0
    for gi, g in enumerate(connected_multigraphs(6)):
        for T in spanning_trees(g):
            r = fund_cut_color(g, T)
            runs += 1
            small += 1
            ok = verify_fundcut_coloring(g, T, r.edge_colors)[0] and fundcut_ok(g.n, g.edges, T, r.edge_colors)
            if not ok or r.max_color > 16 * r.slots + 1:
                bad.append(("catalog", gi))
    record(3, not bad, f"{runs} runs ({small} catalog graph/tree pairs), violations={bad[:5]}")
    assert not bad


def test_criterion_4_lower_bound_family():
    t0 = time.perf_counter()
    g4 = generate_gn(4)
    chi_io_g4 = exact_chi_io(g4.graph)
    part_a = chi_io_g4 == 3
    part_b = has_odd_coloring(generate_gn(5).graph, 2) is None
    failing = []
    total = 0
    for n in range(3, 9):
        inst = generate_gn(n)
        for a in range(1, n + 1):
            for b, c in combinations(range(a + 1, n + 1), 2):
                total += 1
                if not xor_neighborhood_check(inst, a, b, c):
                    failing.append((n, a, b, c))
    part_c = not failing
    dt = time.perf_counter() - t0
    ok = part_a and part_b and part_c and dt < LIMIT_C4
    record(4, ok, f"(a) exact_chi_io(G_4)={chi_io_g4} (want 3): {'ok' if part_a else 'FAIL'}; "
                  f"(b) no improper odd 2-coloring of G_5: {'ok' if part_b else 'FAIL'}; "
                  f"(c) xor identity fails on {len(failing)}/{total} triples, first {failing[:1]}: "
                  f"{'ok' if part_c else 'FAIL'}; {dt:.2f}s (limit {LIMIT_C4}s)")
    assert part_b
    assert dt < LIMIT_C4
    assert part_a, f"exact_chi_io(G_4) = {chi_io_g4}"
    assert part_c, f"{len(failing)} triples fail, e.g. {failing[:3]}"


def test_criterion_5_laminar_and_single_cut():
    mismatches = []
    invalid = []
    families = 0
    infeasible = 0
    for g in range(1, 6):
        strict, _ = laminar_goodmasks(g)
        for fam in laminar_families(g):
            families += 1
            need = 0
            for s in fam:
                need |= 1 << s
            brute = any(gm & need == need for gm in strict)
            L = LaminarFamily(g, fam)
            try:
                col = laminar_odd_3color(L)
                algo = True
                if not laminar_good(L, col, (1, 2)):
                    invalid.append((g, fam))
            except InfeasibleError:
                algo = False
                infeasible += 1
            if algo != brute:
                mismatches.append((g, fam))
    triples = 0
    cut_bad = []
    for gi, G in enumerate(connected_multigraphs(7)):
        for T in spanning_trees(G):
            forest = RootedForest(G, T)
            for f0 in sorted(T):
                cc = cut_local_9color(G, forest, f0)
                triples += 1
                if not cut_local_ok(G.n, G.edges, T, cc.colors) or any(not 1 <= c <= 9 for c in cc.colors.values()):
                    cut_bad.append((gi, sorted(T), f0))
    ok = not mismatches and not invalid and not cut_bad
    record(5, ok, f"{families} laminar families, DP/brute mismatches={len(mismatches)}, invalid outputs={len(invalid)}, "
                  f"strictly infeasible={infeasible}; {triples} (graph, tree, f0) triples, failures={len(cut_bad)}")
    assert not mismatches
    assert not invalid
    assert not cut_bad


def test_criterion_6_matroid_identities():
    t0 = time.perf_counter()
    rng = random.Random(6)
    mats = [random_standard_matroid(rng, r_max=8, m_max=16) for _ in range(200)]
    dual_bad = [i for i, M in enumerate(mats)
                if not fundamental_graph(dual_matroid(M)).swapped().same_as(fundamental_graph(M))]
    minor_bad = []
    checks = 0
    for i, M in enumerate(mats[:50]):
        F = fundamental_graph(M)
        for e in M.labels:
            checks += 1
            if not fundamental_graph(remove_element(M, e)).same_as(F.delete(e)):
                minor_bad.append((i, e))
    dt = time.perf_counter() - t0
    ok = not dual_bad and not minor_bad and dt < LIMIT_C6
    record(6, ok, f"200 dual checks (bad={len(dual_bad)}), {checks} deletion/contraction checks "
                  f"(bad={len(minor_bad)}), {dt:.3f}s (limit {LIMIT_C6}s)")
    assert not dual_bad and not minor_bad
    assert dt < LIMIT_C6


def test_criterion_7_neighbourhood_complexity():
    bad = []
    for n in range(2, 9):
        K = Graph.from_edges(n, list(combinations(range(n), 2)))
        for m in range(1, n):
            val = eta(K, m)
            if val != m + 1 or eta_brute(n, K.adj, m) != val:
                bad.append((n, m, val))
    P3 = Graph.from_edges(3, [(0, 1), (1, 2)])
    p3 = eta(P3, 2)
    ok = not bad and p3 == 2
    record(7, ok, f"eta(K_n,m)=m+1 for 2<=n<=8, 1<=m<n: mismatches={bad}; eta(P3,2)={p3}")
    assert not bad and p3 == 2


def _soundness_instances():
    """(label, BipartiteGraph) pairs: planar fundamental graphs and random bipartite graphs, <= 60 vertices."""
    out = []
    rng = random.Random(8)
    i = 0
    while len(out) < SOUNDNESS_INSTANCES // 2:
        emb, T = planar_instance(10_000 + i, n_min=3, n_max=22)
        i += 1
        bg, _ = graphic_fundamental_graph(emb.graph, T).to_bipartite()
        if bg.graph.n <= 60:
            out.append((f"planar-{i}", bg))
    while len(out) < SOUNDNESS_INSTANCES:
        nx_, ny_ = rng.randint(1, 30), rng.randint(1, 30)
        out.append((f"bip-{len(out)}", random_bipartite(nx_, ny_, rng.random() * 0.5, rng)))
    return out


def test_criterion_8_onesided_soundness():
    invalid = []
    sanity = []
    product_bad = []
    small = 0
    for label, bg in _soundness_instances():
        g = bg.graph
        for side in (bg, bg.swapped()):
            r = one_sided_odd_color(side)
            if not is_one_sided_odd(g.adj, side.X, r.colors)[0]:
                invalid.append((label, "one-sided"))
        imp = improper_odd_color(g)
        if not is_odd_coloring(g, imp.colors)[0]:
            invalid.append((label, "improper"))
        prop = greedy_proper_color(g)
        prod = product_odd_color(g, imp, prop)
        if not is_odd_coloring(g, prod.colors, require_proper=True)[0] or prod.num_colors > imp.num_colors * max(prop, default=1):
            product_bad.append(label)
        if g.n <= 12:
            small += 1
            e_io = exact_chi_io(g)
            e_o = exact_chi_o(g)
            e_one = exact_one_sided_min(g.adj, bg.X, bg.Y).value
            r = one_sided_odd_color(bg)
            if imp.num_colors < e_io or r.num_colors < e_one:
                sanity.append(label)
            if e_o > e_io * max(prop, default=1):
                product_bad.append(label + ":exact")
    ok = not invalid and not sanity and not product_bad
    record(8, ok, f"{SOUNDNESS_INSTANCES} instances ({small} with <=12 vertices): invalid={invalid[:3]}, "
                  f"palette below exact={sanity[:3]}, product inequality violations={product_bad[:3]}")
    assert not invalid and not sanity and not product_bad


def test_criterion_9_cut_cycle_duality_and_cotree():
    pairs = 0
    bad = []
    for gi, g in enumerate(connected_multigraphs(6)):
        for T in spanning_trees(g):
            forest = RootedForest(g, T)
            cuts = {f: fundamental_cut(g, forest, f) for f in T}
            for e in range(g.m):
                if e in T:
                    continue
                cyc = fundamental_cycle(g, forest, e)
                for f in T:
                    pairs += 1
                    if (f in cyc) != (e in cuts[f]):
                        bad.append((gi, e, f))
    cot_bad = []
    for i, (emb, T) in enumerate(corpus()):
        cot = cotree_dual_forest(emb, T)
        dual, _ = dual_graph(emb)
        if len(cot) != dual.n - 1 or cot != frozenset(range(emb.graph.m)) - frozenset(T):
            cot_bad.append(i)
    ok = not bad and not cot_bad
    record(9, ok, f"{pairs} (tree edge, chord) pairs, duality violations={len(bad)}; "
                  f"{CORPUS_SIZE} cotrees, non-spanning={cot_bad}")
    assert not bad and not cot_bad


def summary_lines() -> list[str]:
    lines = []
    for n in range(1, 10):
        if n in RESULTS:
            ok, detail = RESULTS[n]
            lines.append(f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}")
        else:
            lines.append(f"criterion {n}: NOT RUN")
    return lines


if __name__ == "__main__":
    import sys

    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failed = 0
    for t in tests:
        try:
            t()
        except AssertionError:
            failed += 1
    print("\n".join(summary_lines()))
    sys.exit(1 if failed else 0)
