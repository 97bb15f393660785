"""Chord diagrams, circle graphs and the pair family G_n."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import InputError
from .graph import Graph


@dataclass(frozen=True)
class ChordDiagram:
    """A double-occurrence word over chord ids 0..n-1, read around the circle."""

    word: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.word) % 2:
            raise InputError("chord word has odd length")
        n = len(self.word) // 2
        counts = [0] * n
        for s in self.word:
            if not 0 <= s < n:
                raise InputError(f"chord label {s} outside 0..{n - 1}")
            counts[s] += 1
        if any(c != 2 for c in counts):
            raise InputError("every chord label must occur exactly twice")

    @classmethod
    def parse(cls, text: str | Sequence) -> "ChordDiagram":
        """Accept "0 1 0 1", "0101" (single-digit labels) or a sequence.

        Arbitrary labels are renamed 0..n-1 in order of first occurrence.
        """
        if isinstance(text, str):
            tokens = text.split() if any(c.isspace() for c in text.strip()) else list(text.strip())
        else:
            tokens = list(text)
        rename: dict = {}
        word = []
        for t in tokens:
            if t not in rename:
                rename[t] = len(rename)
            word.append(rename[t])
        return cls(tuple(word))

    @property
    def n(self) -> int:
        return len(self.word) // 2

    def positions(self) -> list[tuple[int, int]]:
        pos: list[list[int]] = [[] for _ in range(self.n)]
        for i, s in enumerate(self.word):
            pos[s].append(i)
        return [(p[0], p[1]) for p in pos]

    def canonical(self) -> "ChordDiagram":
        """Rotate so the word starts at the first occurrence of chord 0."""
        if not self.word:
            return self
        i = self.word.index(0)
        return ChordDiagram(self.word[i:] + self.word[:i])

    def __str__(self) -> str:
        return " ".join(map(str, self.word))


def _strictly_inside(p: int, a: int, b: int, n: int) -> bool:
    """p lies in the open cyclic arc running forward from a to b on points 1..n."""
    return 0 < (p - a) % n < (b - a) % n


def interleave(a1: int, b1: int, a2: int, b2: int, n: int | None = None) -> bool:
    """Do chords (a1,b1) and (a2,b2) on circle points 1..n cross?

    Shared endpoints never cross.  ``n`` defaults to the largest position.
    """
    pts = (a1, b1, a2, b2)
    if n is None:
        n = max(pts)
    if any(not 1 <= p <= n for p in pts):
        raise InputError(f"positions {pts} not all in 1..{n}")
    if a1 == b1 or a2 == b2:
        raise InputError("a chord needs two distinct endpoints")
    if len(set(pts)) < 4:
        return False
    return _strictly_inside(a2, a1, b1, n) != _strictly_inside(b2, a1, b1, n)


def intersection_graph(d: ChordDiagram) -> Graph:
    """Circle graph: chords adjacent iff their occurrences alternate."""
    pos = d.positions()
    edges = []
    for i, j in combinations(range(d.n), 2):
        a, b = pos[i]
        c, e = pos[j]
        if (a < c < b) != (a < e < b):
            edges.append((i, j))
    return Graph.from_edges(d.n, edges)


@dataclass(frozen=True)
class GnInstance:
    n: int
    vertices: tuple[tuple[int, int], ...]
    graph: Graph
    diagram: ChordDiagram

    def index(self, a: int, b: int) -> int:
        if a > b:
            a, b = b, a
        if not (1 <= a < b <= self.n):
            raise InputError(f"({a},{b}) is not a vertex of G_{self.n}")
        # lexicographic rank of the pair
        return (a - 1) * (2 * self.n - a) // 2 + (b - a - 1)


def generate_gn(n: int) -> GnInstance:
    """G_n on pairs (a,b), 1<=a<b<=n, with the interleaving adjacency.

    The witnessing chord diagram places every chord endpoint incident to a
    circle point p in a small cluster at p, ordered by decreasing forward
    distance to the other endpoint so that chords sharing p never cross.
    """
    if n < 2:
        raise InputError("G_n needs n >= 2")
    verts = tuple(combinations(range(1, n + 1), 2))
    idx = {v: i for i, v in enumerate(verts)}
    edges = [
        (idx[p], idx[q])
        for p, q in combinations(verts, 2)
        if interleave(p[0], p[1], q[0], q[1], n)
    ]
    g = Graph.from_edges(len(verts), edges)
    word: list[int] = []
    for p in range(1, n + 1):
        here = [(q, idx[(min(p, q), max(p, q))]) for q in range(1, n + 1) if q != p]
        here.sort(key=lambda t: -((t[0] - p) % n))
        word.extend(i for _, i in here)
    return GnInstance(n, verts, g, ChordDiagram(tuple(word)))


def xor_neighborhood_check(g: GnInstance, a: int, b: int, c: int) -> bool:
    """Is N(b,c) equal to N(a,b) Δ N(a,c) in G_n?"""
    if not (a < b and a < c and b != c):
        raise InputError("need a < b, a < c and b != c")
    if max(b, c) > g.n or a < 1:
        raise InputError(f"indices out of range for G_{g.n}")
    m = g.graph.masks
    return m[g.index(b, c)] == m[g.index(a, b)] ^ m[g.index(a, c)]
