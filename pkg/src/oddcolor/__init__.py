"""Odd colorings: one-sided colorings of bipartite graphs, fundamental cut
colorings of spanning trees, and exact oracles for both."""

from .errors import (
    BudgetExceeded,
    InfeasibleError,
    InputError,
    InvariantError,
    MethodError,
    NonPlanarEmbedding,
    OddColorError,
    ResourceError,
)
from .graph import BipartiteGraph, Graph, Multigraph, RootedForest

__version__ = "0.1.0"

__all__ = [
    "BipartiteGraph",
    "BudgetExceeded",
    "Graph",
    "InfeasibleError",
    "InputError",
    "InvariantError",
    "MethodError",
    "Multigraph",
    "NonPlanarEmbedding",
    "OddColorError",
    "ResourceError",
    "RootedForest",
]
