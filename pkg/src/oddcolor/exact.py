"""Independent verifiers and exact minimum searches.

Nothing here calls the constructive algorithms; these are the oracles they
are checked against.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import BudgetExceeded, InputError
from .graph import Graph, Multigraph, RootedForest, find_bridges


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int | None = None
    max_seconds: float | None = None
    max_colors: int | None = None

    def __post_init__(self) -> None:
        for name in ("max_nodes", "max_seconds", "max_colors"):
            v = getattr(self, name)
            if v is not None and v <= 0:
                raise InputError(f"{name} must be positive")


UNLIMITED = SearchBudget()


def _as_map(colors, n: int) -> dict[int, int]:
    m = dict(enumerate(colors)) if isinstance(colors, (list, tuple)) else dict(colors)
    missing = [v for v in range(n) if v not in m]
    if missing:
        raise InputError(f"coloring is missing vertex {missing[0]}")
    return m


def is_odd_coloring(G: Graph, colors, require_proper: bool = False) -> tuple[bool, int | None]:
    """(ok, first failing vertex).  Parity tallies are recomputed from scratch."""
    col = _as_map(colors, G.n)
    for v in range(G.n):
        nb = G.adj[v]
        if require_proper and any(col[u] == col[v] for u in nb):
            return False, v
        if not nb:
            continue
        parity: dict[int, int] = {}
        for u in nb:
            parity[col[u]] = parity.get(col[u], 0) ^ 1
        if not any(parity.values()):
            return False, v
    return True, None


def is_one_sided_odd(adj: Sequence[Sequence[int]], xs: Iterable[int], colors: Mapping[int, int]) -> tuple[bool, int | None]:
    """Every x in xs with a neighbour sees some color an odd number of times."""
    for x in xs:
        if not adj[x]:
            continue
        try:
            parity: dict[int, int] = {}
            for y in adj[x]:
                parity[colors[y]] = parity.get(colors[y], 0) ^ 1
        except KeyError as exc:
            raise InputError(f"coloring is missing vertex {exc.args[0]}") from None
        if not any(parity.values()):
            return False, x
    return True, None


@dataclass
class SearchOutcome:
    value: int
    assignment: list[int]
    nodes: int
    seconds: float


class _Search:
    """Backtracking over colorings of variables 0..N-1.

    Each constraint is a variable set that must see some color an odd number
    of times; each conflict pair must get different colors.  Variable i may
    only use colors up to 1 + the largest color among earlier variables.
    """

    def __init__(self, nvars: int, constraints: Sequence[Sequence[int]], conflicts: Iterable[tuple[int, int]], budget: SearchBudget):
        self.n = nvars
        self.budget = budget
        cons = [sorted(set(c)) for c in constraints if c]
        order = self._order(nvars, cons)
        pos = {v: i for i, v in enumerate(order)}
        self.order = order
        self.cons = [[pos[v] for v in c] for c in cons]
        self.var_cons: list[list[int]] = [[] for _ in range(nvars)]
        for ci, c in enumerate(self.cons):
            for i in c:
                self.var_cons[i].append(ci)
        self.earlier_conf: list[list[int]] = [[] for _ in range(nvars)]
        for a, b in conflicts:
            i, j = pos[a], pos[b]
            if i == j:
                raise InputError("conflict pair on a single variable")
            if i < j:
                i, j = j, i
            self.earlier_conf[i].append(j)
        self.nodes = 0
        self.t0 = time.perf_counter()

    @staticmethod
    def _order(n: int, cons: list[list[int]]) -> list[int]:
        """Greedy order that closes constraints early."""
        rem = [len(c) for c in cons]
        var_cons: list[list[int]] = [[] for _ in range(n)]
        for ci, c in enumerate(cons):
            for v in c:
                var_cons[v].append(ci)
        done = [False] * n
        order = []
        for _ in range(n):
            best = None
            for v in range(n):
                if done[v]:
                    continue
                key = (min((rem[c] for c in var_cons[v]), default=n + 1), -len(var_cons[v]), v)
                if best is None or key < best:
                    best = key
            v = best[2]
            done[v] = True
            order.append(v)
            for c in var_cons[v]:
                rem[c] -= 1
        return order

    def _tick(self, k: int, upper: int | None) -> None:
        self.nodes += 1
        b = self.budget
        if b.max_nodes is not None and self.nodes > b.max_nodes:
            raise BudgetExceeded(f"node budget {b.max_nodes} exhausted at k={k}", k, upper, self.nodes)
        if b.max_seconds is not None and self.nodes % 1024 == 0 and time.perf_counter() - self.t0 > b.max_seconds:
            raise BudgetExceeded(f"time budget {b.max_seconds}s exhausted at k={k}", k, upper, self.nodes)

    def solve_k(self, k: int, upper: int | None) -> list[int] | None:
        n = self.n
        col = [0] * n
        par = [0] * len(self.cons)
        rem = [len(c) for c in self.cons]
        maxc = [0] * (n + 1)

        def rec(i: int) -> bool:
            if i == n:
                return True
            top = min(k, maxc[i] + 1)
            for c in range(1, top + 1):
                self._tick(k, upper)
                if any(col[j] == c for j in self.earlier_conf[i]):
                    continue
                bit = 1 << c
                ok = True
                touched = self.var_cons[i]
                for ci in touched:
                    par[ci] ^= bit
                    rem[ci] -= 1
                    if rem[ci] == 0 and par[ci] == 0:
                        ok = False
                if ok:
                    col[i] = c
                    maxc[i + 1] = max(maxc[i], c)
                    if rec(i + 1):
                        return True
                    col[i] = 0
                for ci in touched:
                    par[ci] ^= bit
                    rem[ci] += 1
            return False

        if rec(0):
            out = [0] * n
            for i, v in enumerate(self.order):
                out[v] = col[i]
            return out
        return None

    def minimize(self, lower: int, upper: int) -> SearchOutcome:
        cap = self.budget.max_colors
        for k in range(lower, upper + 1):
            if cap is not None and k > cap:
                raise BudgetExceeded(f"palette cap {cap} reached", k, upper, self.nodes)
            sol = self.solve_k(k, upper)
            if sol is not None:
                return SearchOutcome(k, sol, self.nodes, time.perf_counter() - self.t0)
        raise InputError("no valid coloring within the trivial upper bound")


def _vertex_constraints(G: Graph) -> list[list[int]]:
    return [list(G.adj[v]) for v in range(G.n) if G.adj[v]]


def exact_min_odd_coloring(G: Graph, proper: bool, budget: SearchBudget = UNLIMITED) -> SearchOutcome:
    if G.n == 0:
        return SearchOutcome(0, [], 0, 0.0)
    lower = 2 if (proper and G.m) else 1
    s = _Search(G.n, _vertex_constraints(G), G.edges if proper else (), budget)
    return s.minimize(lower, G.n)


def exact_chi_o(G: Graph, budget: SearchBudget = UNLIMITED) -> int:
    return exact_min_odd_coloring(G, True, budget).value


def exact_chi_io(G: Graph, budget: SearchBudget = UNLIMITED) -> int:
    return exact_min_odd_coloring(G, False, budget).value


def has_odd_coloring(G: Graph, k: int, proper: bool = False, budget: SearchBudget = UNLIMITED) -> list[int] | None:
    """A k-coloring with the odd property, or None if none exists."""
    if G.n == 0:
        return []
    s = _Search(G.n, _vertex_constraints(G), G.edges if proper else (), budget)
    return s.solve_k(k, None)


def exact_one_sided_min(adj: Sequence[Sequence[int]], xs: Sequence[int], ys: Sequence[int], budget: SearchBudget = UNLIMITED) -> SearchOutcome:
    """Fewest colors on ys so that every non-isolated x sees an odd color."""
    ys = list(ys)
    if not ys:
        return SearchOutcome(0, [], 0, 0.0)
    local = {y: i for i, y in enumerate(ys)}
    cons = [[local[y] for y in adj[x]] for x in xs if adj[x]]
    s = _Search(len(ys), cons, (), budget)
    out = s.minimize(1, len(ys))
    return out


def _fundcut_constraints(G: Multigraph, T: Iterable[int]) -> tuple[list[int], list[list[int]]]:
    forest = RootedForest(G, T)
    cotree = [e for e in range(G.m) if e not in forest.tree]
    local = {e: i for i, e in enumerate(cotree)}
    cons = []
    for f in sorted(forest.tree):
        side = set(forest.subtree(forest.child_of(f)))
        cut = [local[e] for e in cotree if (G.edges[e][0] in side) != (G.edges[e][1] in side)]
        if cut:
            cons.append(cut)
    return cotree, cons


def verify_fundcut_coloring(G: Multigraph, T: Iterable[int], coloring: Mapping[int, int]) -> tuple[bool, int | None]:
    """(ok, first failing tree edge).  Every non-bridge tree edge f needs an odd color on C*(T,f) minus f."""
    forest = RootedForest(G, T)
    cotree = {e for e in range(G.m) if e not in forest.tree}
    if set(coloring) != cotree:
        raise InputError("coloring must be defined exactly on the non-tree edges")
    bridges = find_bridges(G)
    for f in sorted(forest.tree):
        if f in bridges:
            continue
        side = set(forest.subtree(forest.child_of(f)))
        parity: dict[int, int] = {}
        for e in cotree:
            u, v = G.edges[e]
            if (u in side) != (v in side):
                parity[coloring[e]] = parity.get(coloring[e], 0) ^ 1
        if not any(parity.values()):
            return False, f
    return True, None


def exact_fundcut_min(G: Multigraph, T: Iterable[int], budget: SearchBudget = UNLIMITED) -> int:
    return exact_fundcut_outcome(G, T, budget)[0].value


def exact_fundcut_outcome(G: Multigraph, T: Iterable[int], budget: SearchBudget = UNLIMITED):
    cotree, cons = _fundcut_constraints(G, T)
    if not cons:
        return SearchOutcome(0, [0] * len(cotree), 0, 0.0), cotree
    s = _Search(len(cotree), cons, (), budget)
    return s.minimize(1, len(cotree)), cotree


def problem51_scan(corpus, budget: SearchBudget = UNLIMITED, max_vertices: int = 14) -> list[dict]:
    """Exact proper odd chromatic number of F(G,T) for each (instance_id, multigraph, tree).

    Values above 4 are flagged.  Oversized or over-budget instances get a
    record with value None and a note.
    """
    from .matroid import graphic_fundamental_graph

    out = []
    for iid, G, T in corpus:
        F = graphic_fundamental_graph(G, T)
        bg, _ = F.to_bipartite()
        g = bg.graph
        rec = {"instance_id": iid, "parameter": "chi_o(F)", "value": None, "nodes": 0, "seconds": 0.0}
        if g.n > max_vertices:
            rec["note"] = f"skipped: {g.n} vertices > {max_vertices}"
        else:
            try:
                o = exact_min_odd_coloring(g, True, budget)
                rec.update(value=o.value, nodes=o.nodes, seconds=round(o.seconds, 4), flagged=o.value > 4)
            except BudgetExceeded as exc:
                rec.update(nodes=exc.nodes, note=f"budget: {exc} (lower {exc.lower})")
        out.append(rec)
    return out


def problem52_scan(corpus, budget: SearchBudget = UNLIMITED) -> list[dict]:
    """Exact fundamental-cut palette minimum for each (instance_id, multigraph, tree)."""
    out = []
    for iid, G, T in corpus:
        rec = {"instance_id": iid, "parameter": "fundcut_min", "value": None, "nodes": 0, "seconds": 0.0}
        try:
            o, _ = exact_fundcut_outcome(G, T, budget)
            rec.update(value=o.value, nodes=o.nodes, seconds=round(o.seconds, 4))
        except BudgetExceeded as exc:
            rec.update(nodes=exc.nodes, note=f"budget: {exc} (lower {exc.lower})")
        out.append(rec)
    return out
