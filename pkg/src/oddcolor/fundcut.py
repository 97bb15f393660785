"""Odd colorings of fundamental cuts.

Given a multigraph G and a spanning forest T, color the non-tree edges so
that for every non-bridge tree edge f some color occurs an odd number of
times on C*(T,f) minus f.  Pieces, bottom up:

* a parity DP for laminar families,
* a 9-coloring of the chords of a single cut (color 9 is never needed as an
  odd witness),
* a layering of G by fundamental cycles grown from a root,
* star-forest decompositions of the contracted layer graphs,
* the layered coloring with 16*l + 1 colors, and the two-sided coloring of
  the fundamental graph of a plane graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InfeasibleError, InputError, InvariantError, MethodError
from .graph import Graph, Multigraph, RootedForest, contract_bridges, degeneracy_order, find_bridges
from .results import ColoringResult, EdgeColoringResult, odd_witness


# ---------------------------------------------------------------- laminar


@dataclass(frozen=True)
class LaminarFamily:
    ground: int
    sets: tuple[int, ...]

    def __post_init__(self) -> None:
        for s in self.sets:
            if s <= 0 or s >> self.ground:
                raise InputError(f"set {s:b} is empty or leaves the ground set")
        if len(set(self.sets)) != len(self.sets):
            raise InputError("laminar family has repeated members")
        for a, b in combinations(self.sets, 2):
            i = a & b
            if i and i != a and i != b:
                raise InputError(f"sets {_elems(a)} and {_elems(b)} cross")

    @classmethod
    def of(cls, ground: int, sets: Iterable[Iterable[int]]) -> "LaminarFamily":
        masks = []
        for s in sets:
            m = 0
            for x in s:
                m |= 1 << x
            masks.append(m)
        return cls(ground, tuple(dict.fromkeys(masks)))


def _elems(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def laminar_good(L: LaminarFamily, colors: Sequence[int], witnesses: Iterable[int]) -> bool:
    """Every member has an odd number of elements of some witness color."""
    ws = set(witnesses)
    for s in L.sets:
        cnt: dict[int, int] = {}
        for x in _elems(s):
            cnt[colors[x]] = cnt.get(colors[x], 0) ^ 1
        if not any(v for c, v in cnt.items() if c in ws):
            return False
    return True


def _laminar_dp(L: LaminarFamily, w: int, free: bool) -> list[int]:
    """Exact DP over the containment forest.

    Colors 1..w are witnesses; color w+1 exists (and is neutral) iff ``free``.
    A node's state is the parity vector of the witness colors on its set.
    """
    sets = sorted(L.sets, key=lambda s: (s.bit_count(), s))
    parent: dict[int, int | None] = {}
    for i, s in enumerate(sets):
        parent[s] = next((t for t in sets[i + 1:] if t & s == s), None)
    children: dict[int, list[int]] = {s: [] for s in sets}
    for s, p in parent.items():
        if p is not None:
            children[p].append(s)
    private = {}
    for s in sets:
        covered = 0
        for c in children[s]:
            covered |= c
        private[s] = s & ~covered

    nstates = 1 << w
    feas: dict[int, dict[int, None]] = {}
    trail: dict[int, list[dict[int, tuple[int, int]]]] = {}
    for s in sets:
        p = private[s].bit_count()
        cur: dict[int, tuple[int, int]] = {}
        for st in range(nstates):
            k = st.bit_count()
            if k <= p and (free or (p - k) % 2 == 0):
                cur[st] = (-1, -1)
        steps = [cur]
        for ch in children[s]:
            nxt: dict[int, tuple[int, int]] = {}
            for a in cur:
                for b in feas[ch]:
                    nxt.setdefault(a ^ b, (a, b))
            cur = nxt
            steps.append(cur)
        ok = {st: None for st in sorted(cur) if st}
        if not ok:
            raise InfeasibleError(f"no valid coloring: set {_elems(s)} cannot be made odd")
        feas[s] = ok
        trail[s] = steps

    neutral = w + 1 if free else 1
    colors = [w + 1 if free else w] * L.ground
    stack = [(s, min(feas[s])) for s in sets if parent[s] is None]
    while stack:
        s, st = stack.pop()
        steps = trail[s]
        for k in range(len(children[s]), 0, -1):
            a, b = steps[k][st]
            stack.append((children[s][k - 1], b))
            st = a
        elems = _elems(private[s])
        i = 0
        for c in range(w):
            if st >> c & 1:
                colors[elems[i]] = c + 1
                i += 1
        for x in elems[i:]:
            colors[x] = neutral
    return colors


def laminar_odd_3color(L: LaminarFamily, relaxed: bool = False) -> list[int]:
    """3-color the ground set so every member has an odd count of color 1 or of color 2.

    With ``relaxed`` any of the three colors may be the odd one.  Raises
    InfeasibleError when no such coloring exists.
    """
    if relaxed:
        return _laminar_dp(L, 3, False)
    return _laminar_dp(L, 2, True)


# ---------------------------------------------------------------- one cut


def _cut_families(G: Multigraph, forest: RootedForest, f0: int, D: list[int]) -> tuple[list[int], list[int]]:
    c = forest.child_of(f0)
    p = G.other(f0, c)
    below = set(forest.subtree(c))
    full = (1 << len(D)) - 1
    m1: dict[int, int] = {f0: full}
    m2: dict[int, int] = {f0: full}
    for i, e in enumerate(D):
        u, v = G.edges[e]
        a, b = (u, v) if u in below else (v, u)
        x = a
        while x != c:
            f = forest.parent_edge[x]
            m1[f] = m1.get(f, 0) | 1 << i
            x = forest.parent[x]
        for f in forest.path_edges(b, p):
            m2[f] = m2.get(f, 0) | 1 << i
    s1 = list(dict.fromkeys(v for v in m1.values() if v))
    s2 = list(dict.fromkeys(v for v in m2.values() if v))
    return s1, s2


def _pair(a: int, b: int) -> int:
    return 9 if (a, b) == (3, 3) else 3 * (a - 1) + b


def _repair(sets: list[int], col: list[int], max_rounds: int = 4000) -> bool:
    """Local search inside colors 1..8 until every set has an odd color other than 9."""
    n = len(col)
    member: list[list[int]] = [[] for _ in range(n)]
    for si, s in enumerate(sets):
        for x in _elems(s):
            member[x].append(si)
    par = [0] * len(sets)
    for si, s in enumerate(sets):
        for x in _elems(s):
            par[si] ^= 1 << col[x]
    mask8 = 0x1FE

    def bad_count() -> int:
        return sum(1 for p in par if not p & mask8)

    cur = bad_count()
    last = -1
    for _ in range(max_rounds):
        if cur == 0:
            return True
        target = next(si for si, p in enumerate(par) if not p & mask8)
        best = None
        for x in _elems(sets[target]):
            if x == last:
                continue
            old = col[x]
            for c in range(1, 9):
                if c == old:
                    continue
                delta = 0
                flip = (1 << old) | (1 << c)
                for si in member[x]:
                    before = not par[si] & mask8
                    after = not (par[si] ^ flip) & mask8
                    delta += after - before
                if best is None or delta < best[0]:
                    best = (delta, x, c)
        if best is None:
            return False
        _, x, c = best
        flip = (1 << col[x]) | (1 << c)
        for si in member[x]:
            par[si] ^= flip
        col[x] = c
        cur = bad_count()
        last = x
    return cur == 0


@dataclass
class CutColoring:
    colors: dict[int, int]
    method: str


def cut_local_9color(G: Multigraph, T: Iterable[int] | RootedForest, f0: int,
                     domain: Iterable[int] | None = None) -> CutColoring:
    """Color chords of C*(T,f0) (or a given subset) with 1..9.

    Every tree edge whose cut meets the colored set sees a color from 1..8 an
    odd number of times there.  Uses the product of two laminar 3-colorings
    when both exist; otherwise relaxed factors repaired by local search.
    """
    forest = T if isinstance(T, RootedForest) else RootedForest(G, T)
    if f0 not in forest.tree:
        raise InputError(f"edge {f0} is not a tree edge")
    below = set(forest.subtree(forest.child_of(f0)))
    full = [e for e in range(G.m) if e not in forest.tree and (G.edges[e][0] in below) != (G.edges[e][1] in below)]
    if domain is None:
        D = full
    else:
        D = sorted(set(domain))
        extra = set(D) - set(full)
        if extra:
            raise InputError(f"edges {sorted(extra)} are not chords of the cut of {f0}")
    if not D:
        return CutColoring({}, "empty")
    s1, s2 = _cut_families(G, forest, f0, D)
    L1 = LaminarFamily(len(D), tuple(s1))
    L2 = LaminarFamily(len(D), tuple(s2))
    factors = []
    strict = True
    for L in (L1, L2):
        try:
            factors.append(laminar_odd_3color(L))
        except InfeasibleError:
            strict = False
            try:
                factors.append(laminar_odd_3color(L, relaxed=True))
            except InfeasibleError:
                factors.append([1] * len(D))
    col = [_pair(a, b) for a, b in zip(*factors)]
    method = "product"
    if not strict:
        method = "repair"
        sets = list(dict.fromkeys(s1 + s2))
        if not _repair(sets, col):
            col = _search8(len(D), sets)
            method = "search"
    return CutColoring({e: col[i] for i, e in enumerate(D)}, method)


def _search8(n: int, sets: list[int]) -> list[int]:
    """Exhaustive fallback: an 8-coloring with every set odd somewhere."""
    from .exact import SearchBudget, _Search

    s = _Search(n, [_elems(x) for x in sets], (), SearchBudget(max_nodes=5_000_000))
    sol = s.solve_k(8, None)
    if sol is None:
        raise InvariantError("no 8-coloring of the cut chords exists")
    return sol


# ---------------------------------------------------------------- layering


@dataclass
class CutLayering:
    root: int
    A: list[frozenset[int]]
    B: list[frozenset[int]]
    tree_vertices: list[frozenset[int]]
    layer_of: dict[int, int] = field(repr=False)

    @property
    def x(self) -> int:
        return len(self.A) - 1

    def G_edges(self, i: int) -> frozenset[int]:
        out: set[int] = set()
        for j in range(1, i + 1):
            out |= self.A[j] | self.B[j]
        return frozenset(out)


def build_cut_layering(G: Multigraph, T: Iterable[int] | RootedForest, root: int = 0,
                       check_window: bool = True) -> CutLayering:
    """Grow G_0 = {root} by all fundamental cycles meeting the previous vertex set.

    Works on the component of ``root``.  Index 0 of A and B is empty.
    Asserts that the cut of a tree edge added in step i only meets chords
    added in steps i and i+1.
    """
    forest = T if isinstance(T, RootedForest) else RootedForest(G, T)
    comp_root = forest.root[root]
    bridges = find_bridges(G)
    if any(forest.root[G.edges[e][0]] == comp_root for e in bridges):
        raise InputError("graph has bridges; contract them first")
    chords = [e for e in range(G.m) if e not in forest.tree and forest.root[G.edges[e][0]] == comp_root]
    path: dict[int, list[int]] = {}
    verts: dict[int, set[int]] = {}
    for e in chords:
        u, v = G.edges[e]
        path[e] = forest.path_edges(u, v)
        verts[e] = set(forest.path_vertices(u, v))
    A: list[frozenset[int]] = [frozenset()]
    B: list[frozenset[int]] = [frozenset()]
    tv: list[frozenset[int]] = [frozenset([root])]
    layer_of: dict[int, int] = {}
    todo = list(chords)
    while todo:
        prev = tv[-1]
        i = len(A)
        Bi = [e for e in todo if verts[e] & prev]
        if not Bi:
            raise InputError("layering stalled; graph is not connected through fundamental cycles")
        Ai = set()
        vs = set(prev)
        for e in Bi:
            vs |= verts[e]
            for f in path[e]:
                if f not in layer_of:
                    Ai.add(f)
        for f in Ai:
            layer_of[f] = i
        for e in Bi:
            layer_of[e] = i
        A.append(frozenset(Ai))
        B.append(frozenset(Bi))
        tv.append(frozenset(vs))
        done = set(Bi)
        todo = [e for e in todo if e not in done]
    comp_tree = [f for f in forest.tree if forest.root[G.edges[f][0]] == comp_root]
    missing = [f for f in comp_tree if f not in layer_of]
    if missing:
        raise InputError(f"tree edge {missing[0]} lies on no fundamental cycle (bridge)")
    lay = CutLayering(root, A, B, tv, layer_of)
    _check_subtrees(G, forest, lay)
    if check_window:
        _check_layer_window(G, forest, lay)
    return lay


def _check_subtrees(G: Multigraph, forest: RootedForest, lay: CutLayering) -> None:
    for i in range(1, len(lay.A)):
        vs = lay.tree_vertices[i]
        for v in vs:
            if v != lay.root and forest.parent[v] not in vs:
                raise InvariantError(f"T_{i} is not a subtree containing the root")
        tree_here = {f for j in range(1, i + 1) for f in lay.A[j]}
        if len(tree_here) != len(vs) - 1:
            raise InvariantError(f"T_{i} edge count does not match its vertex set")


def _check_layer_window(G: Multigraph, forest: RootedForest, lay: CutLayering) -> None:
    for i in range(1, len(lay.A)):
        for f in lay.A[i]:
            side = set(forest.subtree(forest.child_of(f)))
            for j in range(1, len(lay.B)):
                for e in lay.B[j]:
                    u, v = G.edges[e]
                    if (u in side) != (v in side) and not i <= j <= i + 1:
                        raise InvariantError(
                            f"tree edge {f} in layer {i} is cut by chord {e} of layer {j}"
                        )


# ---------------------------------------------------------------- star forests


@dataclass
class StarForestDecomposition:
    """``forests[x]`` lists (center, leaf) pairs; ``home[v]`` is a forest where v is never a leaf."""

    forests: list[list[tuple[int, int]]]
    home: list[int]
    method: str

    @property
    def slots(self) -> int:
        return len(self.forests)

    @property
    def nonempty(self) -> int:
        return sum(1 for f in self.forests if f)

    def edge_sets(self) -> list[set[tuple[int, int]]]:
        return [{(min(a, b), max(a, b)) for a, b in f} for f in self.forests]


def _treewidth2(G: Graph) -> StarForestDecomposition:
    nb = [set(r) for r in G.adj]
    alive = set(range(G.n))
    elim: list[tuple[int, list[int]]] = []
    while alive:
        # low current degree first; among ties keep high-degree vertices for later
        v = min((u for u in alive if len(nb[u]) <= 2), key=lambda u: (len(nb[u]), len(G.adj[u]), u), default=None)
        if v is None:
            raise MethodError("graph has treewidth at least 3")
        outs = sorted(nb[v])
        if len(outs) == 2:
            a, b = outs
            nb[a].add(b)
            nb[b].add(a)
        for u in outs:
            nb[u].discard(v)
        alive.discard(v)
        elim.append((v, outs))
    pos = {v: i for i, (v, _) in enumerate(elim)}
    color = [0] * G.n
    for v, outs in reversed(elim):
        used = {color[u] for u in outs}
        color[v] = min(c for c in range(3) if c not in used)
    forests: list[list[tuple[int, int]]] = [[], [], []]
    for u, v in G.edges:
        first, later = (u, v) if pos[u] < pos[v] else (v, u)
        forests[color[later]].append((later, first))
    return StarForestDecomposition(forests, color, "treewidth2")


def _generic(G: Graph) -> StarForestDecomposition:
    order, d = degeneracy_order(G)
    pos = {v: i for i, v in enumerate(order)}
    outs = [sorted((u for u in G.adj[v] if pos[u] > pos[v]), key=lambda u: pos[u]) for v in range(G.n)]
    if d == 0:
        return StarForestDecomposition([[]], [0] * G.n, "generic")
    forests: list[list[tuple[int, int]]] = [[] for _ in range(2 * d)]
    home = [0] * G.n
    for j in range(d):
        depth: dict[int, int] = {}
        for v in reversed(order):
            depth[v] = depth[outs[v][j]] + 1 if len(outs[v]) > j else 0
        for v in range(G.n):
            if len(outs[v]) > j:
                head = outs[v][j]
                forests[2 * j + depth[head] % 2].append((head, v))
            if j == 0:
                home[v] = depth[v] % 2
    return StarForestDecomposition(forests, home, "generic")


def star_forest_decomposition(G: Graph, method: str = "treewidth2") -> StarForestDecomposition:
    """Partition E(G) into star forests.

    ``treewidth2``: eliminate vertices of degree <= 2 with fill-in, 3-color the
    resulting 2-tree, send each edge to the forest of its later endpoint's
    color (3 forests; MethodError if treewidth >= 3).  ``generic``: split
    each forest of a degeneracy orientation by depth parity (2*d forests).
    """
    if method == "treewidth2":
        return _treewidth2(G)
    if method == "generic":
        return _generic(G)
    raise InputError(f"unknown star forest method {method!r}")


def check_star_forests(G: Graph, dec: StarForestDecomposition) -> tuple[bool, str]:
    """Partition of E(G) into forests whose components are stars; home vertices are never leaves."""
    seen: set[tuple[int, int]] = set()
    for x, es in enumerate(dec.edge_sets()):
        if seen & es:
            return False, f"forest {x} repeats an edge"
        seen |= es
        adj: dict[int, set[int]] = {}
        for a, b in es:
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)
        done: set[int] = set()
        for s in adj:
            if s in done:
                continue
            comp = {s}
            stack = [s]
            while stack:
                y = stack.pop()
                for z in adj[y]:
                    if z not in comp:
                        comp.add(z)
                        stack.append(z)
            done |= comp
            ne = sum(len(adj[y]) for y in comp) // 2
            if ne != len(comp) - 1:
                return False, f"forest {x} has a cycle"
            if not any(len(adj[y]) == len(comp) - 1 for y in comp):
                return False, f"forest {x} has a component that is not a star"
        centers = {c for c, _ in dec.forests[x]}
        leaves = [v for _, v in dec.forests[x]]
        if len(set(leaves)) != len(leaves) or centers & set(leaves):
            return False, f"forest {x} has inconsistent star centers"
        if any(dec.home[v] == x for v in leaves):
            return False, f"a vertex is a leaf of its home forest {x}"
    if seen != set(G.edges):
        return False, "forests do not cover the edge set"
    return True, ""


# ---------------------------------------------------------------- layered coloring


NINTH = 0  # placeholder until the palette count is known


def _color_component(G: Multigraph, forest: RootedForest, root: int, method: str,
                     out: dict[int, int], log: list[str]) -> int:
    lay = build_cut_layering(G, forest, root)
    slots_used = 0
    for i in range(1, len(lay.A)):
        prev = lay.tree_vertices[i - 1]
        new = lay.tree_vertices[i] - prev
        comp_of: dict[int, int] = {}
        tops: list[int] = []
        for v in sorted(new, key=lambda v: (forest.depth[v], v)):
            if forest.parent[v] in comp_of:
                comp_of[v] = comp_of[forest.parent[v]]
            else:
                comp_of[v] = len(tops)
                tops.append(v)
        apex_chords: dict[int, list[int]] = {}
        pair_chords: dict[tuple[int, int], list[int]] = {}
        for e in sorted(lay.B[i]):
            u, v = G.edges[e]
            cu, cv = comp_of.get(u), comp_of.get(v)
            if cu is None and cv is None:
                out[e] = NINTH
            elif cu is None or cv is None:
                apex_chords.setdefault(cu if cv is None else cv, []).append(e)
            elif cu == cv:
                raise InvariantError(f"chord {e} of layer {i} stays inside one new component")
            else:
                pair_chords.setdefault((min(cu, cv), max(cu, cv)), []).append(e)
        H = Graph.from_edges(len(tops), pair_chords)
        if method == "auto":
            try:
                dec = _treewidth2(H)
            except MethodError:
                dec = _generic(H)
        else:
            dec = star_forest_decomposition(H, method)
        ok, why = check_star_forests(H, dec)
        if not ok:
            raise InvariantError(f"layer {i}: bad star forest decomposition: {why}")
        slots_used = max(slots_used, dec.slots)
        bank = i % 2
        cut_methods: dict[str, int] = {}
        for x, pairs in enumerate(dec.forests):
            stars: dict[int, list[int]] = {}
            for center, leaf in pairs:
                stars.setdefault(center, []).extend(pair_chords[(min(center, leaf), max(center, leaf))])
            for v in range(len(tops)):
                if dec.home[v] == x and v in apex_chords:
                    stars.setdefault(v, []).extend(apex_chords[v])
            for center, chords in sorted(stars.items()):
                t0 = forest.parent_edge[tops[center]]
                cc = cut_local_9color(G, forest, t0, chords)
                cut_methods[cc.method] = cut_methods.get(cc.method, 0) + 1
                for e, c in cc.colors.items():
                    out[e] = NINTH if c == 9 else (x * 2 + bank) * 8 + c
        summary = ", ".join(f"{k}={v}" for k, v in sorted(cut_methods.items()))
        log.append(f"layer {i}: {dec.method}, {dec.slots} forests, {len(tops)} parts; cuts {summary or 'none'}")
    return slots_used


def fund_cut_color(G: Multigraph, T: Iterable[int], method: str = "auto") -> EdgeColoringResult:
    """Color E(G) minus T so every non-bridge tree edge sees an odd color on its cut.

    Uses at most 16*l + 1 colors where l is the largest number of star
    forests used on any layer.  ``method`` is auto, treewidth2 or generic.
    """
    from .exact import verify_fundcut_coloring

    tree = frozenset(T)
    RootedForest(G, tree)
    bc = contract_bridges(G)
    H = bc.graph
    htree = frozenset(bc.edge_map[e] for e in tree if e in bc.edge_map)
    forest = RootedForest(H, htree)
    hcol: dict[int, int] = {}
    log: list[str] = []
    slots = 0
    for comp in H.components():
        slots = max(slots, _color_component(H, forest, min(comp), method, hcol, log))
    ninth = 16 * slots + 1
    back = {h: e for e, h in bc.edge_map.items()}
    colors = {}
    for h, c in hcol.items():
        colors[back[h]] = ninth if c == NINTH else c
    # loops and other chords outside every layer (loops at isolated vertices)
    for e in range(G.m):
        if e not in tree and e not in colors:
            colors[e] = ninth
    if any(c > ninth for c in colors.values()):
        raise InvariantError("color above the 16l+1 bound")
    ok, bad = verify_fundcut_coloring(G, tree, colors)
    if not ok:
        raise InvariantError(f"fundamental cut of tree edge {bad} has no odd color")
    return EdgeColoringResult(colors, log, ok, ninth if colors else 0, slots)


# ---------------------------------------------------------------- both sides


def circle98(emb, T: Iterable[int], method: str = "auto") -> tuple[ColoringResult, dict]:
    """Proper odd coloring of the fundamental graph F(G,T) of a plane graph.

    Non-tree edges are colored through the cuts of T in G, tree edges through
    the cuts of the cotree in the dual; the two palettes are disjoint.
    Returns the coloring keyed by edge id and a report dict.
    """
    from .exact import is_odd_coloring
    from .matroid import graphic_fundamental_graph
    from .planar import dual_cotree, trace_faces

    trace_faces(emb)
    G = emb.graph
    tree = frozenset(T)
    dual, cotree = dual_cotree(emb, tree)
    side1 = fund_cut_color(G, tree, method)
    side2 = fund_cut_color(dual, cotree, method)
    offset = max(49, side1.max_color)
    colors = dict(side1.edge_colors)
    for e, c in side2.edge_colors.items():
        colors[e] = c + offset
    F = graphic_fundamental_graph(G, tree)
    bg, order = F.to_bipartite()
    vcol = {i: colors[lab] for i, lab in enumerate(order)}
    ok, bad = is_odd_coloring(bg.graph, vcol, require_proper=True)
    if not ok:
        raise InvariantError(f"fundamental graph vertex {order[bad]} has no odd color")
    witness = {}
    for i, lab in enumerate(order):
        if bg.graph.adj[i]:
            witness[lab] = odd_witness(bg.graph.adj[i], vcol)
    res = ColoringResult(colors, witness, proper=True, algorithm="circle98")
    report = {
        "nontree_colors": side1.num_colors,
        "nontree_max_color": side1.max_color,
        "nontree_slots": side1.slots,
        "tree_colors": side2.num_colors,
        "tree_slots": side2.slots,
        "nontree_methods": list(side1.method_per_layer),
        "tree_methods": list(side2.method_per_layer),
        "verification": ok,
    }
    return res, report
