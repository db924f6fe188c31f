"""Free-product factorization of free groups via Whitehead graphs."""

from ._whitehead import (
    InternalError,
    ValidationError,
    canonical_class,
    factorize,
    graph,
    minimize,
    reduce,
    subbasis,
)

__all__ = [
    "InternalError",
    "ValidationError",
    "canonical_class",
    "factorize",
    "graph",
    "minimize",
    "reduce",
    "subbasis",
]
