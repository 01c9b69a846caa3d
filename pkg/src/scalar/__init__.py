"""Scalar package - exact ℚ(√2, √3) arithmetic and the float backend."""

from .surd import (
    Rational,
    Surd,
    surd_inv,
    surd_mul,
    surd_sqrt_if_exact,
    surd_to_float,
)
from .backend import EXACT, Scalar, ScalarBackend
from .literal import format_rational, format_scalar, parse_rational, parse_scalar

__all__ = [
    "Rational",
    "Surd",
    "surd_inv",
    "surd_mul",
    "surd_sqrt_if_exact",
    "surd_to_float",
    "EXACT",
    "Scalar",
    "ScalarBackend",
    "format_rational",
    "format_scalar",
    "parse_rational",
    "parse_scalar",
]
