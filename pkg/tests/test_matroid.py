from __future__ import annotations

import random

import pytest

from oddcolor.errors import InputError
from oddcolor.generators import random_standard_matroid
from oddcolor.graph import Multigraph
from oddcolor.matroid import (
    Gf2Matroid,
    cycle_matroid,
    dual_matroid,
    fundamental_graph,
    graphic_fundamental_graph,
    remove_element,
)


def test_standard_form_validation():
    with pytest.raises(InputError):
        Gf2Matroid.from_bits(["011", "101"])
    M = Gf2Matroid.from_A([[1], [1]])
    assert M.to_bits() == ["101", "011"]


def test_small_dual_identity():
    M = Gf2Matroid.from_A([[1], [1]])
    F = fundamental_graph(M)
    D = fundamental_graph(dual_matroid(M))
    assert F.edges == {(0, 2), (1, 2)}
    assert D.swapped().same_as(F)


def test_dual_and_minor_identities_random():
    rng = random.Random(11)
    for _ in range(60):
        M = random_standard_matroid(rng)
        F = fundamental_graph(M)
        assert fundamental_graph(dual_matroid(M)).swapped().same_as(F)
        for e in M.labels:
            assert fundamental_graph(remove_element(M, e)).same_as(F.delete(e))


def test_graphic_fundamental_graph_two_routes():
    K4 = Multigraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    T = {0, 1, 2}
    F = graphic_fundamental_graph(K4, T)
    assert len(F.edges) == 6
    assert F.neighbors(3) == {0, 1}
    assert F.same_as(fundamental_graph(cycle_matroid(K4, T)))


def test_cycle_matroid_rejects_cycle():
    C3 = Multigraph.from_edges(3, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(InputError):
        cycle_matroid(C3, {0, 1, 2})
