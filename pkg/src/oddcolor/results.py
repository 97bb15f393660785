"""Result records shared by the coloring algorithms and the CLI."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping


def odd_witness(nbrs: Iterable[int], colors: Mapping[int, int]) -> int | None:
    """Smallest color occurring an odd number of times among ``nbrs``."""
    cnt = Counter(colors[u] for u in nbrs)
    odd = [c for c, k in cnt.items() if k % 2]
    return min(odd) if odd else None


@dataclass
class ColoringResult:
    colors: dict[int, int]
    witness: dict[int, int]
    proper: bool = False
    algorithm: str = ""
    seed: int | None = None
    num_colors: int = field(init=False)

    def __post_init__(self) -> None:
        self.num_colors = len(set(self.colors.values()))

    def to_dict(self) -> dict:
        return {
            "colors": {str(k): v for k, v in sorted(self.colors.items())},
            "num_colors": self.num_colors,
            "witness": {str(k): v for k, v in sorted(self.witness.items())},
            "proper": self.proper,
            "algorithm": self.algorithm,
            "seed": self.seed,
        }


@dataclass
class EdgeColoringResult:
    edge_colors: dict[int, int]
    method_per_layer: list[str] = field(default_factory=list)
    verification: bool = False
    bound: int | None = None
    slots: int = 0
    num_colors: int = field(init=False)

    def __post_init__(self) -> None:
        self.num_colors = len(set(self.edge_colors.values()))

    @property
    def max_color(self) -> int:
        return max(self.edge_colors.values(), default=0)

    def to_dict(self) -> dict:
        return {
            "edge_colors": {str(k): v for k, v in sorted(self.edge_colors.items())},
            "num_colors": self.num_colors,
            "max_color": self.max_color,
            "bound": self.bound,
            "forest_slots": self.slots,
            "method_per_layer": list(self.method_per_layer),
            "verification": self.verification,
        }
