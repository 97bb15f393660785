"""One-sided odd coloring of bipartite graphs and the graph colorings built on it.

The one-sided routine colors Y so that every X-vertex with a neighbour sees
some color an odd number of times.  It works by peeling near-twin pairs off
Y and coloring each pair with a shared color that no affected X-vertex
depends on.
"""

from __future__ import annotations

from collections import Counter

from .errors import InputError
from .graph import BipartiteGraph, Graph, degeneracy_order, is_bipartite, tensor_with_k2
from .results import ColoringResult, odd_witness


def _reduced_x(masks, xs, ymask: int) -> list[int]:
    """X-vertices with >= 2 neighbours in ymask, one per distinct neighbourhood."""
    seen: dict[int, int] = {}
    for x in xs:
        nb = masks[x] & ymask
        if nb.bit_count() >= 2 and nb not in seen:
            seen[nb] = x
    return sorted(seen.values())


def _independent_candidates(masks, xs, ys: list[int], ymask: int) -> list[int]:
    """Largest greedy color class of the graph joining the two neighbours of each degree-2 x."""
    local = {y: i for i, y in enumerate(ys)}
    edges = set()
    for x in xs:
        nb = masks[x] & ymask
        if nb.bit_count() == 2:
            a = (nb & -nb).bit_length() - 1
            b = nb.bit_length() - 1
            edges.add((local[a], local[b]))
    h = Graph.from_edges(len(ys), edges)
    order, _ = degeneracy_order(h)
    col = [0] * len(ys)
    for v in reversed(order):
        used = {col[u] for u in h.adj[v] if col[u]}
        c = 1
        while c in used:
            c += 1
        col[v] = c
    classes = Counter(col)
    best = min(classes, key=lambda c: (-classes[c], c))
    return [ys[i] for i in range(len(ys)) if col[i] == best]


def one_sided_odd_color(G: BipartiteGraph) -> ColoringResult:
    """Color Y so each non-isolated X-vertex has an odd witness among its neighbours."""
    masks = G.graph.masks
    X = list(G.X)
    ys = sorted(G.Y)
    ymask = 0
    for y in ys:
        ymask |= 1 << y
    frames: list[tuple[int, int]] = []
    while True:
        xs = _reduced_x(masks, X, ymask)
        cand = _independent_candidates(masks, xs, ys, ymask) if len(ys) >= 2 else ys
        if len(cand) < 2:
            break
        best = None
        for i, u in enumerate(cand):
            for v in cand[i + 1:]:
                d = (masks[u] ^ masks[v]) & _xmask(xs)
                k = d.bit_count()
                if best is None or k < best[0]:
                    best = (k, u, v)
        _, u, v = best
        frames.append((u, v))
        ymask &= ~((1 << u) | (1 << v))
        ys = [y for y in ys if y != u and y != v]

    colors = {y: i + 1 for i, y in enumerate(ys)}
    for u, v in reversed(frames):
        bad: set[int] = set()
        for x in X:
            if (masks[x] >> u & 1) == (masks[x] >> v & 1):
                continue
            nb = [y for y in G.graph.adj[x] if y in colors]
            cnt = Counter(colors[y] for y in nb)
            odd = [c for c, k in cnt.items() if k % 2]
            if len(odd) == 1:
                bad.add(odd[0])
        top = max(colors.values(), default=0)
        c = next((c for c in range(1, top + 1) if c not in bad), top + 1)
        colors[u] = colors[v] = c

    witness = {}
    for x in X:
        if G.graph.adj[x]:
            w = odd_witness(G.graph.adj[x], colors)
            if w is not None:
                witness[x] = w
    return ColoringResult(colors, witness, proper=False, algorithm="one-sided")


def _xmask(xs: list[int]) -> int:
    m = 0
    for x in xs:
        m |= 1 << x
    return m


def improper_odd_color(G: Graph) -> ColoringResult:
    """Odd coloring of G (not necessarily proper) via the one-sided routine on G x K2."""
    n = G.n
    res = one_sided_odd_color(tensor_with_k2(G))
    colors = {v: res.colors[n + v] for v in range(n)}
    witness = {}
    for v in range(n):
        if G.adj[v]:
            w = odd_witness(G.adj[v], colors)
            if w is not None:
                witness[v] = w
    return ColoringResult(colors, witness, proper=False, algorithm="improper-odd")


def greedy_proper_color(G: Graph) -> list[int]:
    """Proper coloring (1-based): two colors if bipartite, else greedy along reverse degeneracy order."""
    ok, side = is_bipartite(G)
    if ok:
        return [s + 1 for s in side]
    order, _ = degeneracy_order(G)
    col = [0] * G.n
    for v in reversed(order):
        used = {col[u] for u in G.adj[v]}
        c = 1
        while c in used:
            c += 1
        col[v] = c
    return col


def product_odd_color(G: Graph, improper: ColoringResult | dict, proper) -> ColoringResult:
    """Combine an improper odd coloring with a proper coloring into a proper odd coloring.

    Each vertex gets the pair (odd color, proper color), renumbered densely.
    """
    from .exact import is_odd_coloring

    imp = improper.colors if isinstance(improper, ColoringResult) else dict(improper)
    prop = dict(enumerate(proper)) if isinstance(proper, (list, tuple)) else dict(proper)
    ok, bad = is_odd_coloring(G, imp, require_proper=False)
    if not ok:
        raise InputError(f"improper coloring is not odd at vertex {bad}")
    if set(prop) != set(range(G.n)):
        raise InputError("proper coloring must cover every vertex")
    for u, v in G.edges:
        if prop[u] == prop[v]:
            raise InputError(f"proper coloring is not proper on edge ({u},{v})")
    pairs = sorted({(imp[v], prop[v]) for v in range(G.n)})
    rank = {p: i + 1 for i, p in enumerate(pairs)}
    colors = {v: rank[(imp[v], prop[v])] for v in range(G.n)}
    witness = {}
    for v in range(G.n):
        if G.adj[v]:
            w = odd_witness(G.adj[v], colors)
            if w is not None:
                witness[v] = w
    return ColoringResult(colors, witness, proper=True, algorithm="product")
