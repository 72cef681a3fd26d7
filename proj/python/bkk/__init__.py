"""Exact root counting for sparse polynomial systems."""

from ._bkk import (
    BkkError,
    DimensionError,
    GenericityError,
    InternalError,
    ParseError,
    PreconditionError,
    RangeError,
    bounds,
    convex_hull,
    count_torus_roots,
    determinant,
    euclidean_volume,
    hermite_factorization,
    mixed_volume,
    normalized_volume,
    permanent,
    solve_binomial,
    subdivide,
    toric_ideal,
)

__all__ = [
    "BkkError",
    "DimensionError",
    "GenericityError",
    "InternalError",
    "ParseError",
    "PreconditionError",
    "RangeError",
    "bounds",
    "convex_hull",
    "count_torus_roots",
    "determinant",
    "euclidean_volume",
    "hermite_factorization",
    "mixed_volume",
    "normalized_volume",
    "permanent",
    "solve_binomial",
    "subdivide",
    "toric_ideal",
]
