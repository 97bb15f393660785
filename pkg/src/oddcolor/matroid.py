"""Binary matroids in standard form and their fundamental graphs.

Rows are packed into Python ints: bit j of ``rows[i]`` is entry (i, j).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .errors import InputError
from .graph import BipartiteGraph, Graph, Multigraph, RootedForest


@dataclass(frozen=True)
class Gf2Matroid:
    """Column matroid of ``[I_r | A]``; the first r columns form the basis."""

    r: int
    m: int
    rows: tuple[int, ...]
    labels: tuple[Hashable, ...] = ()

    def __post_init__(self) -> None:
        if not 0 <= self.r <= self.m:
            raise InputError(f"need 0 <= r <= m, got r={self.r} m={self.m}")
        if len(self.rows) != self.r:
            raise InputError(f"expected {self.r} rows, got {len(self.rows)}")
        for i, row in enumerate(self.rows):
            if row >> self.m:
                raise InputError(f"row {i} has bits beyond column {self.m - 1}")
            if row & ((1 << self.r) - 1) != 1 << i:
                raise InputError("matrix is not in standard form [I | A]")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(self.m)))
        if len(self.labels) != self.m or len(set(self.labels)) != self.m:
            raise InputError("need one distinct label per column")

    @classmethod
    def from_A(cls, A: Sequence[Sequence[int]], labels: Sequence[Hashable] | None = None) -> "Gf2Matroid":
        """Build ``[I | A]`` from the r x (m-r) block A."""
        r = len(A)
        k = len(A[0]) if r else 0
        rows = []
        for i, arow in enumerate(A):
            if len(arow) != k:
                raise InputError("ragged A")
            bits = 1 << i
            for j, x in enumerate(arow):
                if x & 1:
                    bits |= 1 << (r + j)
            rows.append(bits)
        return cls(r, r + k, tuple(rows), tuple(labels) if labels else ())

    @classmethod
    def from_bits(cls, lines: Sequence[str], labels: Sequence[Hashable] | None = None) -> "Gf2Matroid":
        if not lines:
            raise InputError("empty matrix")
        m = len(lines[0])
        rows = []
        for line in lines:
            if len(line) != m or set(line) - {"0", "1"}:
                raise InputError(f"bad matrix row {line!r}")
            rows.append(sum(1 << j for j, ch in enumerate(line) if ch == "1"))
        return cls(len(lines), m, tuple(rows), tuple(labels) if labels else ())

    def entry(self, i: int, j: int) -> int:
        return self.rows[i] >> j & 1

    def A(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(self.r, self.m)] for i in range(self.r)]

    @property
    def basis(self) -> tuple[Hashable, ...]:
        return self.labels[: self.r]

    @property
    def cobasis(self) -> tuple[Hashable, ...]:
        return self.labels[self.r:]

    def to_bits(self) -> list[str]:
        return ["".join(str(self.entry(i, j)) for j in range(self.m)) for i in range(self.r)]

    def column_of(self, label: Hashable) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InputError(f"no element labelled {label!r}") from None


@dataclass(frozen=True)
class FundamentalGraph:
    """Bipartite graph between basis elements (X) and the rest (Y), keyed by label."""

    X: tuple[Hashable, ...]
    Y: tuple[Hashable, ...]
    edges: frozenset[tuple[Hashable, Hashable]]

    def swapped(self) -> "FundamentalGraph":
        return FundamentalGraph(self.Y, self.X, frozenset((y, x) for x, y in self.edges))

    def delete(self, label: Hashable) -> "FundamentalGraph":
        return FundamentalGraph(
            tuple(x for x in self.X if x != label),
            tuple(y for y in self.Y if y != label),
            frozenset(e for e in self.edges if label not in e),
        )

    def same_as(self, other: "FundamentalGraph") -> bool:
        """Exact equality of sides and edges, ignoring vertex order."""
        return set(self.X) == set(other.X) and set(self.Y) == set(other.Y) and self.edges == other.edges

    def neighbors(self, label: Hashable) -> set[Hashable]:
        return {y if x == label else x for x, y in self.edges if label in (x, y)}

    def to_bipartite(self) -> tuple[BipartiteGraph, list[Hashable]]:
        """Dense-id bipartite graph (X first) plus the label of each id."""
        order = list(self.X) + list(self.Y)
        idx = {lab: i for i, lab in enumerate(order)}
        g = Graph.from_edges(len(order), [(idx[x], idx[y]) for x, y in self.edges])
        nx = len(self.X)
        return BipartiteGraph(g, tuple(range(nx)), tuple(range(nx, len(order)))), order


def fundamental_graph(M: Gf2Matroid) -> FundamentalGraph:
    """Non-basis column e is adjacent to basis element i iff entry (i, e) is 1."""
    edges = set()
    for j in range(M.r, M.m):
        for i in range(M.r):
            if M.rows[i] >> j & 1:
                edges.add((M.labels[i], M.labels[j]))
    return FundamentalGraph(M.basis, M.cobasis, frozenset(edges))


def dual_matroid(M: Gf2Matroid) -> Gf2Matroid:
    """[I_r | A] -> [I_{m-r} | A^T]; the old cobasis becomes the basis."""
    r, k = M.r, M.m - M.r
    rows = []
    for j in range(k):
        bits = 1 << j
        for i in range(r):
            if M.rows[i] >> (r + j) & 1:
                bits |= 1 << (k + i)
        rows.append(bits)
    labels = M.labels[r:] + M.labels[:r]
    return Gf2Matroid(k, M.m, tuple(rows), labels)


def remove_element(M: Gf2Matroid, e: Hashable) -> Gf2Matroid:
    """Contract e if it is a basis element, delete it otherwise.

    In standard form both are a deletion of rows/columns: contraction of basis
    element i drops row i and column i; deletion drops column e.
    """
    j = M.column_of(e)
    if j < M.r:
        keep_rows = [M.rows[i] for i in range(M.r) if i != j]
        keep_cols = [c for c in range(M.m) if c != j]
        r = M.r - 1
    else:
        keep_rows = list(M.rows)
        keep_cols = [c for c in range(M.m) if c != j]
        r = M.r
    rows = []
    for row in keep_rows:
        bits = 0
        for new, old in enumerate(keep_cols):
            if row >> old & 1:
                bits |= 1 << new
        rows.append(bits)
    labels = tuple(M.labels[c] for c in keep_cols)
    return Gf2Matroid(r, M.m - 1, tuple(rows), labels)


def graphic_fundamental_graph(G: Multigraph, T: Iterable[int]) -> FundamentalGraph:
    """F(G, T): tree edge x ~ non-tree edge y iff x lies on the fundamental cycle of y."""
    forest = RootedForest(G, T)
    tree = sorted(forest.tree)
    cotree = [e for e in range(G.m) if e not in forest.tree]
    edges = set()
    for y in cotree:
        u, v = G.edges[y]
        for x in forest.path_edges(u, v):
            edges.add((x, y))
    return FundamentalGraph(tuple(tree), tuple(cotree), frozenset(edges))


def cycle_matroid(G: Multigraph, T: Iterable[int]) -> Gf2Matroid:
    """Standard-form representation of M(G) with basis T, by GF(2) row reduction.

    Starts from the vertex-edge incidence matrix and pivots on the tree columns,
    so it does not share any path logic with :func:`graphic_fundamental_graph`.
    Columns are relabelled so tree edges come first; labels are edge ids.
    """
    tree = sorted(set(T))
    cotree = [e for e in range(G.m) if e not in set(tree)]
    order = tree + cotree
    pos = {e: c for c, e in enumerate(order)}
    rows = []
    for v in range(G.n):
        bits = 0
        for eid, (a, b) in enumerate(G.edges):
            if a != b and v in (a, b):
                bits ^= 1 << pos[eid]
        rows.append(bits)
    r = 0
    for c in range(len(tree)):
        piv = next((i for i in range(r, len(rows)) if rows[i] >> c & 1), None)
        if piv is None:
            raise InputError("tree edges are not independent (contain a cycle)")
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] >> c & 1:
                rows[i] ^= rows[r]
        r += 1
    rest = rows[r:]
    if any(rest):
        raise InputError("tree is not a spanning forest (rank deficit)")
    return Gf2Matroid(len(tree), G.m, tuple(rows[:r]), tuple(order))
