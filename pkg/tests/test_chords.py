from __future__ import annotations

from itertools import combinations

import pytest

from oddcolor.chords import ChordDiagram, generate_gn, interleave, intersection_graph, xor_neighborhood_check
from oddcolor.errors import InputError


def test_interleave_examples():
    assert interleave(1, 3, 2, 4, 4)
    assert not interleave(1, 2, 3, 4, 4)
    assert not interleave(1, 2, 2, 3, 3)
    with pytest.raises(InputError):
        interleave(1, 5, 2, 3, 4)


def test_intersection_graph_examples():
    assert intersection_graph(ChordDiagram.parse("0101")).edges == ((0, 1),)
    assert intersection_graph(ChordDiagram.parse("0011")).m == 0
    assert intersection_graph(ChordDiagram.parse("012012")).m == 3
    with pytest.raises(InputError):
        ChordDiagram.parse("012")
    with pytest.raises(InputError):
        ChordDiagram((0, 0, 0, 1))


def test_parse_renames_and_canonical():
    d = ChordDiagram.parse("b a b a")
    assert d.word == (0, 1, 0, 1)
    assert ChordDiagram((1, 0, 1, 0)).canonical().word == (0, 1, 0, 1)


def test_intersection_graph_matches_alternation():
    word = (0, 1, 2, 0, 3, 1, 3, 2)
    d = ChordDiagram(word)
    g = intersection_graph(d)
    for i, j in combinations(range(4), 2):
        seq = [s for s in word if s in (i, j)]
        alternate = seq[0] == seq[2]
        assert g.has_edge(i, j) == alternate


def test_gn_sizes():
    assert generate_gn(3).graph.m == 0
    g4 = generate_gn(4)
    assert g4.graph.n == 6 and g4.graph.edges == ((g4.index(1, 3), g4.index(2, 4)),)
    assert generate_gn(6).graph.n == 15
    with pytest.raises(InputError):
        generate_gn(1)


@pytest.mark.parametrize("n", range(2, 9))
def test_gn_diagram_realizes_graph(n):
    inst = generate_gn(n)
    assert intersection_graph(inst.diagram) == inst.graph


def test_gn_adjacency_is_interleaving():
    inst = generate_gn(6)
    for (p, q) in combinations(inst.vertices, 2):
        expect = interleave(p[0], p[1], q[0], q[1], 6)
        assert inst.graph.has_edge(inst.index(*p), inst.index(*q)) == expect


def test_xor_check_values_under_literal_construction():
    # Chords that share an endpoint never cross, so the identity breaks for n >= 4.
    assert xor_neighborhood_check(generate_gn(4), 1, 2, 3) is False
    assert xor_neighborhood_check(generate_gn(3), 1, 2, 3) is True
    with pytest.raises(InputError):
        xor_neighborhood_check(generate_gn(4), 2, 1, 3)
