from __future__ import annotations

import random

import networkx as nx
import pytest

from oddcolor.errors import InputError, NonPlanarEmbedding
from oddcolor.generators import connected_multigraphs, planar_corpus, spanning_trees, stacked_triangulation
from oddcolor.graph import Multigraph
from oddcolor.planar import (
    PlanarEmbedding,
    cotree_dual_forest,
    dual_cotree,
    dual_graph,
    fundamental_cut,
    fundamental_cycle,
    trace_faces,
)

from oracles import brute_cut, brute_cycle

K4_ORDERS = [[1, 2, 3], [2, 0, 3], [0, 1, 3], [0, 2, 1]]


def test_triangle_faces():
    emb = PlanarEmbedding.from_neighbor_orders(3, [[1, 2], [2, 0], [0, 1]])
    assert len(trace_faces(emb)) == 2


def test_single_edge_has_one_face():
    emb = PlanarEmbedding.from_neighbor_orders(2, [[1], [0]])
    faces = trace_faces(emb)
    assert len(faces) == 1 and len(faces[0]) == 2


def test_k4_faces_and_self_dual():
    emb = PlanarEmbedding.from_neighbor_orders(4, K4_ORDERS)
    assert len(emb.faces) == 4
    dual, bij = dual_graph(emb)
    assert bij == {e: e for e in range(6)}
    assert nx.is_isomorphic(nx.MultiGraph(list(dual.edges)), nx.complete_graph(4))


def test_bad_rotation_fails_euler():
    # K4 with the rotation at one vertex reversed is an embedding on the torus
    orders = [list(o) for o in K4_ORDERS]
    orders[0].reverse()
    emb = PlanarEmbedding.from_neighbor_orders(4, orders)
    with pytest.raises(NonPlanarEmbedding):
        trace_faces(emb)


def test_rotation_validation():
    g = Multigraph.from_edges(2, [(0, 1)])
    with pytest.raises(InputError):
        PlanarEmbedding(g, (((0, 0),), ((0, 0),)))


def test_cut_and_cycle_examples():
    K4 = Multigraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert fundamental_cut(K4, {0, 1, 2}, 0) == {0, 3, 4}
    C4 = Multigraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert fundamental_cut(C4, {0, 1, 2}, 1) == {1, 3}
    assert fundamental_cycle(C4, {0, 1, 2}, 3) == {0, 1, 2, 3}
    with pytest.raises(InputError):
        fundamental_cut(C4, {0, 1, 2}, 3)
    with pytest.raises(InputError):
        fundamental_cycle(C4, {0, 1, 2}, 0)


def test_cut_cycle_against_definitions():
    for g in connected_multigraphs(5):
        for T in spanning_trees(g):
            for f in T:
                assert fundamental_cut(g, T, f) == brute_cut(g.n, g.edges, T, f)
            for e in range(g.m):
                if e not in T and g.edges[e][0] != g.edges[e][1]:
                    assert fundamental_cycle(g, T, e) == brute_cycle(g.n, g.edges, T, e)


def test_stacked_triangulations_are_planar_triangulations():
    rng = random.Random(5)
    for n in range(3, 30):
        emb = stacked_triangulation(n, rng)
        faces = trace_faces(emb)
        assert emb.graph.m == 3 * n - 6 if n > 3 else emb.graph.m == 3
        assert all(len(f) == 3 for f in faces)


def test_cotree_is_dual_spanning_tree():
    for emb, T in planar_corpus(20, seed=3):
        cot = cotree_dual_forest(emb, T)
        dual, _ = dual_graph(emb)
        assert len(cot) == dual.n - 1


def test_cotree_requires_bridgeless():
    emb = PlanarEmbedding.from_neighbor_orders(2, [[1], [0]])
    with pytest.raises(InputError):
        cotree_dual_forest(emb, {0})
    dual, cot = dual_cotree(emb, {0})
    assert dual.n == 1 and cot == frozenset()
