"""Exception hierarchy shared by every module."""

from __future__ import annotations


class OddColorError(Exception):
    """Base class for all package errors."""


class InputError(OddColorError, ValueError):
    """Malformed or out-of-contract input."""


class NonPlanarEmbedding(InputError):
    """A rotation system failed the Euler check."""


class MethodError(OddColorError):
    """A requested method does not apply to this input (caller may fall back)."""


class InfeasibleError(OddColorError):
    """No object with the requested property exists."""


class ResourceError(OddColorError):
    """The exact computation would be too large to run."""


class InvariantError(OddColorError, AssertionError):
    """An internal invariant was violated; signals a bug or a bad embedding."""


class BudgetExceeded(OddColorError):
    """Search budget exhausted before the answer was proven.

    ``lower`` and ``upper`` are the best bounds established so far (``upper``
    may be None if no witness was found).
    """

    def __init__(self, message: str, lower: int, upper: int | None, nodes: int = 0):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.nodes = nodes
