"""Poly package - sparse homogeneous polynomials and polynomial vectors."""

from .monomial import Monomial, format_monomial, grlex_key, monomial, mono_mul, pure_power
from .homopoly import (
    HomoPoly,
    HomoPolyVec,
    coefficient_of,
    eval_vec,
    is_zero_vec,
    poly_mul,
    quad_from_matrix,
)

__all__ = [
    "Monomial",
    "format_monomial",
    "grlex_key",
    "monomial",
    "mono_mul",
    "pure_power",
    "HomoPoly",
    "HomoPolyVec",
    "coefficient_of",
    "eval_vec",
    "is_zero_vec",
    "poly_mul",
    "quad_from_matrix",
]
