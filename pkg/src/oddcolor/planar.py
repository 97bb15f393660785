"""Rotation systems, faces, planar duals, fundamental cuts and cycles.

A dart ``(eid, side)`` is the half of edge ``eid`` at endpoint
``edges[eid][side]``.  The rotation at a vertex lists its darts in cyclic
order.  Embeddings are always inputs here; nothing tests planarity beyond
the Euler check on the traced faces.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InputError, InvariantError, NonPlanarEmbedding
from .graph import Multigraph, RootedForest, component_labels, find_bridges

Dart = tuple[int, int]


@dataclass(frozen=True)
class PlanarEmbedding:
    graph: Multigraph
    rotation: tuple[tuple[Dart, ...], ...]

    def __post_init__(self) -> None:
        g = self.graph
        if len(self.rotation) != g.n:
            raise InputError(f"rotation has {len(self.rotation)} vertices, graph has {g.n}")
        seen: set[Dart] = set()
        for v, rot in enumerate(self.rotation):
            for eid, side in rot:
                if not (0 <= eid < g.m and side in (0, 1)):
                    raise InputError(f"bad dart ({eid},{side}) at vertex {v}")
                if g.edges[eid][side] != v:
                    raise InputError(f"dart ({eid},{side}) listed at {v}, belongs to {g.edges[eid][side]}")
                if (eid, side) in seen:
                    raise InputError(f"dart ({eid},{side}) listed twice")
                seen.add((eid, side))
        if len(seen) != 2 * g.m:
            raise InputError("rotation misses some darts")

    @classmethod
    def from_neighbor_orders(cls, n: int, orders: Sequence[Sequence[int]]) -> "PlanarEmbedding":
        """Simple-graph convenience: ``orders[v]`` is the cyclic neighbour order at v."""
        eid_of: dict[tuple[int, int], int] = {}
        edges: list[tuple[int, int]] = []
        for v in range(n):
            for u in orders[v]:
                key = (min(u, v), max(u, v))
                if key not in eid_of:
                    eid_of[key] = len(edges)
                    edges.append(key)
        g = Multigraph(n, tuple(edges))
        rot = []
        for v in range(n):
            darts = []
            for u in orders[v]:
                e = eid_of[(min(u, v), max(u, v))]
                darts.append((e, 0 if edges[e][0] == v else 1))
            rot.append(tuple(darts))
        return cls(g, tuple(rot))

    @cached_property
    def _succ(self) -> dict[Dart, Dart]:
        succ = {}
        for rot in self.rotation:
            for i, d in enumerate(rot):
                succ[d] = rot[(i + 1) % len(rot)]
        return succ

    @cached_property
    def faces(self) -> tuple[tuple[Dart, ...], ...]:
        return tuple(trace_faces(self))

    @cached_property
    def face_of(self) -> dict[Dart, int]:
        return {d: i for i, f in enumerate(self.faces) for d in f}

    def delete_edges(self, eids: Iterable[int]) -> "PlanarEmbedding":
        """Embedding with the given edges removed (edge ids are renumbered densely)."""
        drop = set(eids)
        keep = [e for e in range(self.graph.m) if e not in drop]
        new = {e: i for i, e in enumerate(keep)}
        g = Multigraph(self.graph.n, tuple(self.graph.edges[e] for e in keep))
        rot = tuple(tuple((new[e], s) for e, s in r if e in new) for r in self.rotation)
        return PlanarEmbedding(g, rot)


def trace_faces(emb: PlanarEmbedding) -> list[tuple[Dart, ...]]:
    """Face walks: from dart d the walk continues with the rotation successor of twin(d).

    Raises NonPlanarEmbedding unless V - E + F = 2 on every component that has edges.
    """
    g = emb.graph
    succ = emb._succ
    visited: set[Dart] = set()
    faces: list[tuple[Dart, ...]] = []
    for rot in emb.rotation:
        for start in rot:
            if start in visited:
                continue
            walk = []
            d = start
            while d not in visited:
                visited.add(d)
                walk.append(d)
                e, s = d
                d = succ[(e, 1 - s)]
            if d != start:
                raise InvariantError("face walk did not close")
            faces.append(tuple(walk))
    comp = component_labels(g)
    verts: dict[int, int] = {}
    for v in range(g.n):
        if g.incidence[v]:
            verts[comp[v]] = verts.get(comp[v], 0) + 1
    edges: dict[int, int] = {}
    for u, _ in g.edges:
        edges[comp[u]] = edges.get(comp[u], 0) + 1
    nfaces: dict[int, int] = {}
    for f in faces:
        c = comp[g.edges[f[0][0]][f[0][1]]]
        nfaces[c] = nfaces.get(c, 0) + 1
    for c in edges:
        if verts[c] - edges[c] + nfaces[c] != 2:
            raise NonPlanarEmbedding(
                f"Euler check failed on component {c}: V={verts[c]} E={edges[c]} F={nfaces[c]}"
            )
    return faces


def _require_connected(g: Multigraph) -> None:
    if g.n and len(set(component_labels(g))) != 1:
        raise InputError("embedding is disconnected; process components separately")


def dual_graph(emb: PlanarEmbedding) -> tuple[Multigraph, dict[int, int]]:
    """Dual multigraph (one vertex per face) and the primal->dual edge bijection.

    Dual edge ids equal primal edge ids, so the bijection is the identity map.
    """
    _require_connected(emb.graph)
    fo = emb.face_of
    if emb.graph.m == 0:
        return Multigraph(1, ()), {}
    edges = tuple((fo[(e, 0)], fo[(e, 1)]) for e in range(emb.graph.m))
    return Multigraph(len(emb.faces), edges), {e: e for e in range(emb.graph.m)}


def fundamental_cut(G: Multigraph, T: Iterable[int] | RootedForest, f: int) -> frozenset[int]:
    """C*(T, f): all edges joining the two sides of T - f, including f itself."""
    forest = T if isinstance(T, RootedForest) else RootedForest(G, T)
    if f not in forest.tree:
        raise InputError(f"edge {f} is not a tree edge")
    side = set(forest.subtree(forest.child_of(f)))
    return frozenset(e for e, (u, v) in enumerate(G.edges) if (u in side) != (v in side))


def fundamental_cycle(G: Multigraph, T: Iterable[int] | RootedForest, e: int) -> frozenset[int]:
    """C(T, e): e plus the tree path between its endpoints."""
    forest = T if isinstance(T, RootedForest) else RootedForest(G, T)
    if e in forest.tree:
        raise InputError(f"edge {e} is a tree edge")
    if not 0 <= e < G.m:
        raise InputError(f"edge {e} out of range")
    u, v = G.edges[e]
    return frozenset([e, *forest.path_edges(u, v)])


def dual_cotree(emb: PlanarEmbedding, T: Iterable[int]) -> tuple[Multigraph, frozenset[int]]:
    """Dual multigraph and the image of E \\ T, checked to be a spanning tree of the dual."""
    tree = frozenset(T)
    RootedForest(emb.graph, tree)
    dual, bij = dual_graph(emb)
    cotree = frozenset(bij[e] for e in range(emb.graph.m) if e not in tree)
    parent = list(range(dual.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in sorted(cotree):
        a, b = (find(x) for x in dual.edges[e])
        if a == b:
            raise InvariantError(f"cotree edge {e} closes a cycle in the dual")
        parent[a] = b
    if len(cotree) != dual.n - 1:
        raise InvariantError("cotree does not span the dual")
    return dual, cotree


def cotree_dual_forest(emb: PlanarEmbedding, T: Iterable[int]) -> frozenset[int]:
    """Image of the non-tree edges in the dual; a spanning tree of the dual.

    Requires a connected, bridgeless embedding (contract bridges first).
    """
    _require_connected(emb.graph)
    if find_bridges(emb.graph):
        raise InputError("embedding has bridges; contract them first")
    return dual_cotree(emb, T)[1]
