"""Set families, shatter functions, neighbourhood complexity and near-twins.

Subsets of the ground set {0..n-1} are int bitmasks throughout.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputError, ResourceError
from .graph import BipartiteGraph, Graph

EXHAUSTIVE_LIMIT = 10**6


@dataclass(frozen=True)
class SetFamily:
    ground: int
    sets: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(set(self.sets)) != len(self.sets):
            raise InputError("set family has duplicate members")
        for s in self.sets:
            if s < 0 or s >> self.ground:
                raise InputError(f"set {s:b} not inside ground set of size {self.ground}")

    @classmethod
    def of(cls, ground: int, sets: Iterable[Iterable[int]]) -> "SetFamily":
        """Build from element lists; repeated sets are merged."""
        masks = []
        for s in sets:
            m = 0
            for x in s:
                m |= 1 << x
            masks.append(m)
        return cls(ground, tuple(dict.fromkeys(masks)))

    @classmethod
    def neighborhoods(cls, g: Graph, vertices: Sequence[int] | None = None) -> "SetFamily":
        vs = range(g.n) if vertices is None else vertices
        return cls(g.n, tuple(dict.fromkeys(g.masks[v] for v in vs)))

    def __len__(self) -> int:
        return len(self.sets)


def _mask(W: Iterable[int] | int, ground: int) -> int:
    if isinstance(W, int):
        m = W
    else:
        m = 0
        for x in W:
            if not 0 <= x < ground:
                raise InputError(f"element {x} outside ground set of size {ground}")
            m |= 1 << x
    if m < 0 or m >> ground:
        raise InputError("W is not a subset of the ground set")
    return m


def shatter_on(F: SetFamily, W: Iterable[int] | int) -> int:
    """Number of distinct traces S ∩ W over S in F."""
    w = _mask(W, F.ground)
    return len({s & w for s in F.sets})


def shatter_function(F: SetFamily, m: int) -> int:
    """π_F(m) by exhaustive search over m-subsets of the ground set."""
    if not 0 <= m <= F.ground:
        raise InputError(f"m={m} outside 0..{F.ground}")
    _check_size(F.ground, m)
    best = 0
    for W in combinations(range(F.ground), m):
        best = max(best, shatter_on(F, W))
    return best


def _check_size(n: int, m: int) -> None:
    if math.comb(n, m) > EXHAUSTIVE_LIMIT:
        raise ResourceError(
            f"C({n},{m}) = {math.comb(n, m)} subsets exceeds {EXHAUSTIVE_LIMIT}; use eta_sampled"
        )


def _traces(masks: Sequence[int], w: int) -> int:
    return len({x & w for x in masks})


def eta(g: Graph, m: int) -> int:
    """Exact neighbourhood complexity: max over m-sets A of |{N(v) ∩ A}|."""
    if not 1 <= m <= g.n:
        raise InputError(f"need 1 <= m <= {g.n}, got {m}")
    _check_size(g.n, m)
    masks = g.masks
    best = 0
    for A in combinations(range(g.n), m):
        w = 0
        for x in A:
            w |= 1 << x
        best = max(best, _traces(masks, w))
    return best


def eta_sampled(g: Graph, m: int, samples: int, seed: int = 0) -> int:
    """Lower bound on eta from ``samples`` random m-subsets (deterministic per seed).

    When ``samples`` covers every subset the enumeration is exhaustive.
    """
    if not 1 <= m <= g.n:
        raise InputError(f"need 1 <= m <= {g.n}, got {m}")
    masks = g.masks
    if samples >= math.comb(g.n, m):
        return eta(g, m)
    rng = random.Random(seed)
    best = 0
    for _ in range(samples):
        w = 0
        for x in rng.sample(range(g.n), m):
            w |= 1 << x
        best = max(best, _traces(masks, w))
    return best


def is_delta_separated(F: SetFamily, delta: int) -> tuple[bool, tuple[int, int] | None]:
    """(ok, pair).  ``pair`` is a minimum-symdiff pair of sets when ok is False."""
    if delta < 1:
        raise InputError("delta must be >= 1")
    best = None
    for a, b in combinations(F.sets, 2):
        d = (a ^ b).bit_count()
        if best is None or d < best[0]:
            best = (d, a, b)
    if best is None or best[0] >= delta:
        return True, None
    return False, (best[1], best[2])


def greedy_delta_packing(F: SetFamily, delta: int) -> SetFamily:
    """Maximal delta-separated subfamily, inserting sets in increasing bitmask order."""
    if delta < 1:
        raise InputError("delta must be >= 1")
    kept: list[int] = []
    for s in sorted(F.sets):
        if all((s ^ t).bit_count() >= delta for t in kept):
            kept.append(s)
    return SetFamily(F.ground, tuple(kept))


def find_near_twins(G: BipartiteGraph, Yprime: Iterable[int]) -> tuple[int, int, int]:
    """Pair in Y' with the smallest |N(u) Δ N(v)|; ties go to the smallest ids."""
    ys = sorted(set(Yprime))
    if len(ys) < 2:
        raise InputError("need at least two candidate vertices")
    masks = G.graph.masks
    best = None
    for u, v in combinations(ys, 2):
        d = (masks[u] ^ masks[v]).bit_count()
        if best is None or d < best[2]:
            best = (u, v, d)
    return best


def packing_report(g: Graph, side: Sequence[int], deltas: Sequence[int]) -> list[dict]:
    """Size of a greedy delta-packing of the neighbourhoods of ``side``, per delta.

    ``ratio`` is |packing| * delta / n, the quantity a Haussler-type bound
    keeps bounded.
    """
    F = SetFamily.neighborhoods(g, side)
    rows = []
    for d in deltas:
        p = greedy_delta_packing(F, d)
        rows.append({"delta": d, "family": len(F), "packing": len(p), "ratio": len(p) * d / max(1, g.n)})
    return rows
