"""Exact best approximation over Novikov rings and spectral numbers of
filtered Floer-Novikov complexes.

Series are exchanged as literals such as ``"1/1*T^(0) + 2/1*T^(5/2)"``,
rationals as ``"num/den"`` strings and complexes as JSON text.
"""

from ._core import (
    NovikovError,
    ParseError,
    adapted_basis,
    best_approx,
    boundary_depth,
    fixture,
    fixture_names,
    homology_rank,
    invert,
    multiply,
    normalize_series,
    oracle_best_approx,
    random_instance,
    spectral_number,
    validate,
    valuation,
)

__all__ = [
    "NovikovError",
    "ParseError",
    "adapted_basis",
    "best_approx",
    "boundary_depth",
    "fixture",
    "fixture_names",
    "homology_rank",
    "invert",
    "multiply",
    "normalize_series",
    "oracle_best_approx",
    "random_instance",
    "spectral_number",
    "validate",
    "valuation",
]
