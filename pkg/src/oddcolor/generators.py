"""Seeded instance generators and exhaustive small catalogs."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations
from typing import Iterator

import networkx as nx

from .graph import BipartiteGraph, Graph, Multigraph, find_bridges, random_spanning_forest
from .matroid import Gf2Matroid
from .planar import PlanarEmbedding


def stacked_triangulation(n: int, rng: random.Random) -> PlanarEmbedding:
    """Apollonian network on n >= 3 vertices with its rotation system.

    Starts from a counter-clockwise triangle and repeatedly inserts a vertex
    into a uniformly chosen inner face, joining it to the three corners.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    orders: list[list[int]] = [[1, 2], [2, 0], [0, 1]]
    faces = [(0, 1, 2)]
    for w in range(3, n):
        i = rng.randrange(len(faces))
        x, y, z = faces[i]
        orders[x].insert(orders[x].index(y) + 1, w)
        orders[y].insert(orders[y].index(z) + 1, w)
        orders[z].insert(orders[z].index(x) + 1, w)
        orders.append([x, y, z])
        faces[i] = (x, y, w)
        faces.append((y, z, w))
        faces.append((z, x, w))
    return PlanarEmbedding.from_neighbor_orders(n, orders)


def thin_two_edge_connected(emb: PlanarEmbedding, frac: float, rng: random.Random) -> PlanarEmbedding:
    """Delete about ``frac`` of the edges at random, never creating a bridge."""
    target = int(frac * emb.graph.m)
    order = list(range(emb.graph.m))
    rng.shuffle(order)
    dropped: set[int] = set()
    for e in order:
        if len(dropped) >= target:
            break
        trial = emb.delete_edges(dropped | {e})
        if not find_bridges(trial.graph):
            dropped.add(e)
    return emb.delete_edges(dropped)


def planar_instance(seed: int, n_min: int = 4, n_max: int = 40, thin: float | None = None):
    """(embedding, spanning tree) from a seeded stacked triangulation, 2-edge-connected."""
    rng = random.Random(seed)
    n = rng.randint(n_min, n_max)
    emb = stacked_triangulation(n, rng)
    frac = rng.choice([0.0, 0.2, 0.4]) if thin is None else thin
    if frac:
        emb = thin_two_edge_connected(emb, frac, rng)
    tree = random_spanning_forest(emb.graph, rng)
    return emb, tree


def planar_corpus(count: int = 100, seed: int = 0, n_max: int = 40):
    return [planar_instance(seed * 100003 + i, n_max=n_max) for i in range(count)]


def random_bipartite(n_left: int, n_right: int, p: float, rng: random.Random) -> BipartiteGraph:
    edges = [(x, y) for x in range(n_left) for y in range(n_right) if rng.random() < p]
    return BipartiteGraph.from_sides(n_left, n_right, edges)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def random_standard_matroid(rng: random.Random, r_max: int = 8, m_max: int = 16) -> Gf2Matroid:
    r = rng.randint(1, r_max)
    m = rng.randint(r, m_max)
    A = [[rng.randint(0, 1) for _ in range(m - r)] for _ in range(r)]
    return Gf2Matroid.from_A(A)


def _to_nx(mg: Multigraph) -> nx.MultiGraph:
    h = nx.MultiGraph()
    h.add_nodes_from(range(mg.n))
    h.add_edges_from(mg.edges)
    return h


def _canonical_edges(mg: Multigraph) -> Multigraph:
    return Multigraph(mg.n, tuple(sorted((min(u, v), max(u, v)) for u, v in mg.edges)))


@lru_cache(maxsize=None)
def connected_multigraphs(max_edges: int, simple: bool = False) -> tuple[Multigraph, ...]:
    """All connected loopless multigraphs with 1..max_edges edges, up to isomorphism.

    Built by repeatedly adding an edge between existing vertices or to a new
    vertex; every connected graph arises this way.  ``simple`` forbids
    parallel edges.
    """
    layer = [Multigraph(1, ())]
    out: list[Multigraph] = []
    for _ in range(max_edges):
        buckets: dict[str, list[tuple[Multigraph, nx.MultiGraph]]] = {}
        nxt: list[Multigraph] = []
        for g in layer:
            cands = [(u, v) for u, v in combinations(range(g.n), 2)]
            cands += [(u, g.n) for u in range(g.n)]
            for u, v in cands:
                if simple and (u, v) in g.edges:
                    continue
                n = max(g.n, v + 1)
                h = _canonical_edges(Multigraph(n, g.edges + ((u, v),)))
                hx = _to_nx(h)
                key = nx.weisfeiler_lehman_graph_hash(nx.Graph(hx)) + f"|{h.n}|{sorted(d for _, d in hx.degree())}"
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(hx, other) for _, other in bucket):
                    continue
                bucket.append((h, hx))
                nxt.append(h)
        out.extend(nxt)
        layer = nxt
    return tuple(out)


def spanning_trees(mg: Multigraph) -> Iterator[frozenset[int]]:
    """Every spanning tree of a connected multigraph, by brute force over edge subsets."""
    k = mg.n - 1
    for sub in combinations(range(mg.m), k):
        parent = list(range(mg.n))
        ok = True
        for e in sub:
            u, v = mg.edges[e]
            while parent[u] != u:
                u = parent[u]
            while parent[v] != v:
                v = parent[v]
            if u == v:
                ok = False
                break
            parent[u] = v
        if ok:
            yield frozenset(sub)


def laminar_families(ground: int) -> list[tuple[int, ...]]:
    """Every laminar family of distinct nonempty subsets of {0..ground-1}, as bitmask tuples."""
    subs = list(range(1, 1 << ground))
    out: list[tuple[int, ...]] = []

    def rec(i: int, chosen: list[int]) -> None:
        out.append(tuple(chosen))
        for j in range(i, len(subs)):
            s = subs[j]
            if all(s & c == 0 or s & c == s or s & c == c for c in chosen):
                chosen.append(s)
                rec(j + 1, chosen)
                chosen.pop()

    rec(0, [])
    return out
