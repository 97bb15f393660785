"""Simple graphs, bipartite graphs and multigraphs over dense integer ids.

Everything here is immutable after construction.  Neighbourhoods are kept
both as sorted tuples (for deterministic iteration) and as int bitmasks (for
set algebra).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InputError


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise InputError(f"adjacency has {len(self.adj)} rows, expected {self.n}")
        for v, row in enumerate(self.adj):
            if list(row) != sorted(set(row)):
                raise InputError(f"adjacency of {v} is not a sorted duplicate-free list")
            for u in row:
                if not 0 <= u < self.n:
                    raise InputError(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise InputError(f"self-loop at {v}")
        for v, row in enumerate(self.adj):
            for u in row:
                if v not in self.adj[u]:
                    raise InputError(f"asymmetric adjacency {v}->{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, tuple(() for _ in range(n)))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Open neighbourhood of each vertex as a bitmask."""
        out = []
        for row in self.adj:
            m = 0
            for u in row:
                m |= 1 << u
            out.append(m)
        return tuple(out)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def induced(self, keep: Sequence[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``keep`` (relabelled densely) and the old ids."""
        keep = sorted(set(keep))
        new_id = {v: i for i, v in enumerate(keep)}
        edges = [(new_id[u], new_id[v]) for u, v in self.edges if u in new_id and v in new_id]
        return Graph.from_edges(len(keep), edges), keep

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InputError(f"vertex {v} out of range for n={self.n}")


@dataclass(frozen=True)
class BipartiteGraph:
    graph: Graph
    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self) -> None:
        ls, rs = set(self.left), set(self.right)
        if ls & rs:
            raise InputError("bipartition sides overlap")
        if ls | rs != set(range(self.graph.n)):
            raise InputError("bipartition does not cover the vertex set")
        for u, v in self.graph.edges:
            if (u in ls) == (v in ls):
                raise InputError(f"edge ({u},{v}) lies inside one side")

    @classmethod
    def from_sides(cls, n_left: int, n_right: int, edges: Iterable[Sequence[int]]) -> "BipartiteGraph":
        """Left vertices are 0..n_left-1, right vertices follow; ``edges`` are (left, right-index) pairs."""
        g = Graph.from_edges(n_left + n_right, [(x, n_left + y) for x, y in edges])
        return cls(g, tuple(range(n_left)), tuple(range(n_left, n_left + n_right)))

    @property
    def X(self) -> tuple[int, ...]:
        return self.left

    @property
    def Y(self) -> tuple[int, ...]:
        return self.right

    def swapped(self) -> "BipartiteGraph":
        return BipartiteGraph(self.graph, self.right, self.left)


@dataclass(frozen=True)
class Multigraph:
    """Edge ``eid`` joins ``edges[eid]``; loops and parallel edges are allowed."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for eid, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge {eid}=({u},{v}) out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Multigraph":
        return cls(n, tuple((int(u), int(v)) for u, v in edges))

    @classmethod
    def from_graph(cls, g: Graph) -> "Multigraph":
        return cls(g.n, g.edges)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids at each vertex (a loop is listed twice)."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for eid, (u, v) in enumerate(self.edges):
            inc[u].append(eid)
            inc[v].append(eid)
        return tuple(tuple(x) for x in inc)

    def other(self, eid: int, v: int) -> int:
        u, w = self.edges[eid]
        return w if u == v else u

    def to_graph(self) -> Graph:
        """Underlying simple graph; loops and repeated edges are dropped."""
        return Graph.from_edges(self.n, {(min(u, v), max(u, v)) for u, v in self.edges if u != v})

    def components(self) -> list[list[int]]:
        comp = component_labels(self)
        groups: dict[int, list[int]] = {}
        for v, c in enumerate(comp):
            groups.setdefault(c, []).append(v)
        return [groups[c] for c in sorted(groups)]


def neighborhood_symdiff(g: Graph, u: int, v: int) -> int:
    """|N(u) Δ N(v)| with open neighbourhoods."""
    g._check(u)
    g._check(v)
    if u == v:
        raise InputError("neighborhood_symdiff needs two distinct vertices")
    return (g.masks[u] ^ g.masks[v]).bit_count()


def tensor_with_k2(g: Graph) -> BipartiteGraph:
    """G x K2.  Vertex (v,1) gets id v, vertex (v,2) gets id n+v."""
    n = g.n
    edges = []
    for u, v in g.edges:
        edges.append((u, n + v))
        edges.append((v, n + u))
    h = Graph.from_edges(2 * n, edges)
    return BipartiteGraph(h, tuple(range(n)), tuple(range(n, 2 * n)))


def component_labels(mg: Multigraph | Graph) -> list[int]:
    """Component index per vertex, numbered by smallest member."""
    n = mg.n
    nbrs = _neighbor_lists(mg)
    comp = [-1] * n
    c = 0
    for s in range(n):
        if comp[s] != -1:
            continue
        comp[s] = c
        stack = [s]
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if comp[y] == -1:
                    comp[y] = c
                    stack.append(y)
        c += 1
    return comp


def _neighbor_lists(mg: Multigraph | Graph) -> list[list[int]]:
    if isinstance(mg, Graph):
        return [list(r) for r in mg.adj]
    out: list[list[int]] = [[] for _ in range(mg.n)]
    for u, v in mg.edges:
        out[u].append(v)
        out[v].append(u)
    return out


def find_bridges(mg: Multigraph) -> set[int]:
    """Edge ids of all bridges (iterative lowpoint search over edge ids)."""
    n = mg.n
    inc = mg.incidence
    disc = [-1] * n
    low = [0] * n
    bridges: set[int] = set()
    t = 0
    for s in range(n):
        if disc[s] != -1:
            continue
        disc[s] = low[s] = t
        t += 1
        # frame: vertex, edge used to enter, iterator position
        stack = [(s, -1, 0)]
        while stack:
            v, pe, i = stack[-1]
            if i < len(inc[v]):
                stack[-1] = (v, pe, i + 1)
                eid = inc[v][i]
                if eid == pe:
                    continue
                w = mg.other(eid, v)
                if w == v:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, eid, 0))
                else:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > disc[p]:
                        bridges.add(pe)
    return bridges


@dataclass(frozen=True)
class BridgeContraction:
    graph: Multigraph
    vertex_map: tuple[int, ...]
    edge_map: dict[int, int] = field(compare=False, hash=False)


def contract_bridges(mg: Multigraph) -> BridgeContraction:
    """Contract every bridge.

    Returns the contracted multigraph, the old-vertex -> class map, and the
    old-eid -> new-eid map for surviving edges.  Contracting only bridges can
    never turn another edge into a loop, so surviving edges keep their
    multiplicity; pre-existing loops are kept.
    """
    bridges = find_bridges(mg)
    parent = list(range(mg.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for eid in sorted(bridges):
        a, b = find(mg.edges[eid][0]), find(mg.edges[eid][1])
        if a != b:
            parent[max(a, b)] = min(a, b)
    roots = sorted({find(v) for v in range(mg.n)})
    rid = {r: i for i, r in enumerate(roots)}
    vmap = tuple(rid[find(v)] for v in range(mg.n))
    new_edges = []
    emap: dict[int, int] = {}
    for eid, (u, v) in enumerate(mg.edges):
        if eid in bridges:
            continue
        emap[eid] = len(new_edges)
        new_edges.append((vmap[u], vmap[v]))
    return BridgeContraction(Multigraph(len(roots), tuple(new_edges)), vmap, emap)


def degeneracy_order(g: Graph) -> tuple[list[int], int]:
    """Smallest-last ordering and the degeneracy.

    Repeatedly removes a minimum-degree vertex (smallest id on ties).  Every
    vertex has at most ``d`` neighbours later in the returned order.
    """
    n = g.n
    deg = [len(r) for r in g.adj]
    removed = [False] * n
    order: list[int] = []
    d = 0
    buckets: dict[int, set[int]] = {}
    for v in range(n):
        buckets.setdefault(deg[v], set()).add(v)
    for _ in range(n):
        k = min(k for k, b in buckets.items() if b)
        v = min(buckets[k])
        buckets[k].discard(v)
        removed[v] = True
        order.append(v)
        d = max(d, k)
        for u in g.adj[v]:
            if not removed[u]:
                buckets[deg[u]].discard(u)
                deg[u] -= 1
                buckets.setdefault(deg[u], set()).add(u)
    return order, d


def is_bipartite(g: Graph) -> tuple[bool, list[int]]:
    """BFS two-colouring; returns (ok, side per vertex in {0,1})."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for y in g.adj[x]:
                if side[y] == -1:
                    side[y] = 1 - side[x]
                    q.append(y)
                elif side[y] == side[x]:
                    return False, side
    return True, side


class RootedForest:
    """A spanning forest of a multigraph rooted at the smallest vertex of each component.

    Answers tree-path queries; used for fundamental cycles and cuts.
    """

    def __init__(self, mg: Multigraph, tree: Iterable[int], roots: dict[int, int] | None = None):
        self.graph = mg
        self.tree = frozenset(tree)
        n = mg.n
        for eid in self.tree:
            if not 0 <= eid < mg.m:
                raise InputError(f"tree edge id {eid} out of range")
        t_inc: list[list[int]] = [[] for _ in range(n)]
        for eid in sorted(self.tree):
            u, v = mg.edges[eid]
            if u == v:
                raise InputError(f"tree edge {eid} is a loop")
            t_inc[u].append(eid)
            t_inc[v].append(eid)
        self.parent = [-1] * n
        self.parent_edge = [-1] * n
        self.depth = [0] * n
        self.root = [-1] * n
        self.order: list[int] = []
        comp = component_labels(mg)
        start_of: dict[int, int] = {}
        for v in range(n):
            start_of.setdefault(comp[v], v)
        if roots:
            for c, r in roots.items():
                start_of[c] = r
        seen_edges = 0
        for s in sorted(start_of.values()):
            if self.root[s] != -1:
                continue
            self.root[s] = s
            q = deque([s])
            while q:
                x = q.popleft()
                self.order.append(x)
                for eid in t_inc[x]:
                    y = mg.other(eid, x)
                    if eid == self.parent_edge[x]:
                        continue
                    if self.root[y] != -1:
                        raise InputError("tree edges contain a cycle")
                    self.root[y] = s
                    self.parent[y] = x
                    self.parent_edge[y] = eid
                    self.depth[y] = self.depth[x] + 1
                    seen_edges += 1
                    q.append(y)
        for v in range(n):
            if self.root[v] == -1:
                raise InputError("tree is not maximal: it does not span its component")
        if seen_edges != len(self.tree):
            raise InputError("tree edges contain a cycle")

    @cached_property
    def children(self) -> dict[int, list[int]]:
        kids: dict[int, list[int]] = {}
        for w in self.order:
            if self.parent[w] != -1:
                kids.setdefault(self.parent[w], []).append(w)
        return kids

    def child_of(self, eid: int) -> int:
        """The endpoint of tree edge ``eid`` farther from the root."""
        u, v = self.graph.edges[eid]
        return v if self.parent_edge[v] == eid else u

    def path_edges(self, u: int, v: int) -> list[int]:
        """Tree edges on the u-v path (empty if u == v); InputError across components."""
        if self.root[u] != self.root[v]:
            raise InputError(f"{u} and {v} lie in different trees")
        left: list[int] = []
        right: list[int] = []
        while self.depth[u] > self.depth[v]:
            left.append(self.parent_edge[u])
            u = self.parent[u]
        while self.depth[v] > self.depth[u]:
            right.append(self.parent_edge[v])
            v = self.parent[v]
        while u != v:
            left.append(self.parent_edge[u])
            u = self.parent[u]
            right.append(self.parent_edge[v])
            v = self.parent[v]
        return left + right[::-1]

    def path_vertices(self, u: int, v: int) -> list[int]:
        out = [u]
        x = u
        for eid in self.path_edges(u, v):
            x = self.graph.other(eid, x)
            out.append(x)
        return out

    def subtree(self, v: int) -> list[int]:
        """Vertices in the subtree rooted at v."""
        kids = self.children
        out = [v]
        i = 0
        while i < len(out):
            out.extend(kids.get(out[i], ()))
            i += 1
        return out


def bfs_spanning_forest(mg: Multigraph) -> frozenset[int]:
    """Deterministic BFS spanning forest (smallest edge id first)."""
    seen = [False] * mg.n
    tree = []
    for s in range(mg.n):
        if seen[s]:
            continue
        seen[s] = True
        q = deque([s])
        while q:
            x = q.popleft()
            for eid in sorted(mg.incidence[x]):
                y = mg.other(eid, x)
                if not seen[y]:
                    seen[y] = True
                    tree.append(eid)
                    q.append(y)
    return frozenset(tree)


def random_spanning_forest(mg: Multigraph, rng) -> frozenset[int]:
    """Kruskal over a random edge permutation drawn from ``rng`` (a random.Random)."""
    order = list(range(mg.m))
    rng.shuffle(order)
    parent = list(range(mg.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree = []
    for eid in order:
        u, v = mg.edges[eid]
        a, b = find(u), find(v)
        if a != b:
            parent[a] = b
            tree.append(eid)
    return frozenset(tree)


def is_spanning_forest(mg: Multigraph, tree: Iterable[int]) -> bool:
    try:
        RootedForest(mg, tree)
    except InputError:
        return False
    return True
