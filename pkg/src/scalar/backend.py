"""
Interchangeable scalar backends.

Every other module is written against this contract: the exact backend
stores `Surd` values in numpy object arrays, the float backend stores
float64 values and compares them with a relative tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Optional, Union

import numpy as np

from ..config.settings import get_settings
from ..errors import DivisionByZero, NegativeInput
from ..state.enums import BackendMode
from .surd import Surd, surd_inv, surd_sqrt_if_exact, surd_to_float

Scalar = Union[Surd, float]


@dataclass(frozen=True)
class ScalarBackend:
    """Exact (decidable equality) or Float(tolerance) arithmetic."""
    mode: BackendMode = BackendMode.EXACT
    tolerance: float = 0.0

    @classmethod
    def exact(cls) -> ScalarBackend:
        return cls(BackendMode.EXACT, 0.0)

    @classmethod
    def floating(cls, tolerance: Optional[float] = None) -> ScalarBackend:
        if tolerance is None:
            tolerance = get_settings().float_tolerance
        if tolerance < 0:
            raise ValueError("tolerance must be nonnegative")
        return cls(BackendMode.FLOAT, tolerance)

    @property
    def is_exact(self) -> bool:
        return self.mode is BackendMode.EXACT

    @property
    def certified(self) -> bool:
        """Only exact verdicts count as certificates."""
        return self.is_exact

    # ── scalars ─────────────────────────────────────────────────
    def coerce(self, value: Any) -> Scalar:
        if self.is_exact:
            if isinstance(value, float):
                raise TypeError("float values are not allowed in the exact backend")
            return Surd.coerce(value)
        if isinstance(value, Surd):
            return surd_to_float(value)
        return float(value)

    def zero(self) -> Scalar:
        return Surd(0) if self.is_exact else 0.0

    def one(self) -> Scalar:
        return Surd(1) if self.is_exact else 1.0

    def rational(self, numerator: int, denominator: int = 1) -> Scalar:
        return self.coerce(Fraction(numerator, denominator))

    def is_zero(self, a: Scalar) -> bool:
        if self.is_exact:
            return a == 0
        return abs(a) <= self.tolerance

    def eq(self, a: Scalar, b: Scalar) -> bool:
        if self.is_exact:
            return a == b
        return abs(a - b) <= self.tolerance * max(1.0, abs(a), abs(b))

    def sign(self, a: Scalar) -> int:
        if self.is_exact:
            return a.sign()
        if self.is_zero(a):
            return 0
        return 1 if a > 0 else -1

    def inv(self, a: Scalar) -> Scalar:
        if self.is_exact:
            return surd_inv(a)
        if a == 0.0:
            raise DivisionByZero("inverse of zero")
        return 1.0 / a

    def sqrt(self, a: Scalar) -> Optional[Scalar]:
        """Square root when representable; None otherwise (exact mode only).

        Raises:
            NegativeInput: when a < 0
        """
        if self.is_exact:
            return surd_sqrt_if_exact(a)
        if self.sign(a) < 0:
            raise NegativeInput(f"square root of negative value {a}")
        return math.sqrt(max(a, 0.0))

    def to_float(self, a: Scalar) -> float:
        return surd_to_float(a) if self.is_exact else float(a)

    def format(self, a: Scalar) -> str:
        if self.is_exact:
            return str(a)
        return repr(float(a))

    # ── arrays ──────────────────────────────────────────────────
    @property
    def dtype(self):
        return object if self.is_exact else np.float64

    def array(self, nested: Iterable) -> np.ndarray:
        """Build an array, coercing every entry into this backend."""
        raw = np.array(nested, dtype=object)
        out = np.empty(raw.shape, dtype=self.dtype)
        for index, value in np.ndenumerate(raw):
            out[index] = self.coerce(value)
        return out

    def convert(self, arr: np.ndarray) -> np.ndarray:
        return self.array(arr)

    def zeros(self, shape) -> np.ndarray:
        if not self.is_exact:
            return np.zeros(shape)
        out = np.empty(shape, dtype=object)
        for index in np.ndindex(out.shape):
            out[index] = Surd(0)
        return out

    def identity(self, size: int) -> np.ndarray:
        out = self.zeros((size, size))
        for i in range(size):
            out[i, i] = self.one()
        return out

    def to_float_array(self, arr: np.ndarray) -> np.ndarray:
        if not self.is_exact:
            return np.asarray(arr, dtype=np.float64)
        out = np.empty(arr.shape, dtype=np.float64)
        for index, value in np.ndenumerate(arr):
            out[index] = surd_to_float(value)
        return out

    def arrays_equal(self, a: np.ndarray, b: np.ndarray) -> bool:
        if a.shape != b.shape:
            return False
        return all(self.eq(x, y) for x, y in zip(a.flat, b.flat))

    def is_zero_array(self, a: np.ndarray) -> bool:
        return all(self.is_zero(x) for x in a.flat)


EXACT = ScalarBackend.exact()
