"""
Exact arithmetic in the biquadratic field ℚ(√2, √3).

Elements are stored in the basis {1, √2, √3, √6} with `fractions.Fraction`
coordinates, so integer growth is never a correctness issue.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Union

import mpmath

from ..config.settings import get_settings
from ..errors import DivisionByZero, NegativeInput

Rational = Fraction
RationalLike = Union[int, Fraction]


def _frac(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"Expected int or Fraction, got {type(value).__name__}")


def _sign_root2(u: Fraction, v: Fraction) -> int:
    """Exact sign of u + v·√2."""
    su = (u > 0) - (u < 0)
    sv = (v > 0) - (v < 0)
    if sv == 0:
        return su
    if su == 0 or su == sv:
        return sv
    # opposite signs: |u| vs |v|√2
    d = u * u - 2 * v * v
    return su if d > 0 else sv


class Surd:
    """An element q + s2·√2 + s3·√3 + s6·√6 of ℚ(√2, √3).

    Immutable; equality is componentwise since {1, √2, √3, √6} is a basis.
    """

    __slots__ = ("_q", "_s2", "_s3", "_s6")

    def __init__(
        self,
        q: RationalLike = 0,
        s2: RationalLike = 0,
        s3: RationalLike = 0,
        s6: RationalLike = 0,
    ) -> None:
        self._q = _frac(q)
        self._s2 = _frac(s2)
        self._s3 = _frac(s3)
        self._s6 = _frac(s6)

    # ── accessors ───────────────────────────────────────────────
    @property
    def q(self) -> Fraction:
        return self._q

    @property
    def s2(self) -> Fraction:
        return self._s2

    @property
    def s3(self) -> Fraction:
        return self._s3

    @property
    def s6(self) -> Fraction:
        return self._s6

    @property
    def coef(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self._q, self._s2, self._s3, self._s6)

    def is_rational(self) -> bool:
        return not (self._s2 or self._s3 or self._s6)

    def is_zero(self) -> bool:
        return not (self._q or self._s2 or self._s3 or self._s6)

    @classmethod
    def sqrt2(cls) -> Surd:
        return cls(0, 1)

    @classmethod
    def sqrt3(cls) -> Surd:
        return cls(0, 0, 1)

    @classmethod
    def sqrt6(cls) -> Surd:
        return cls(0, 0, 0, 1)

    @classmethod
    def coerce(cls, value: Union[Surd, RationalLike]) -> Surd:
        if isinstance(value, Surd):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"Cannot coerce {type(value).__name__} to Surd")

    # ── Galois conjugates ───────────────────────────────────────
    def conj2(self) -> Surd:
        """√2 ↦ −√2."""
        return Surd(self._q, -self._s2, self._s3, -self._s6)

    def conj3(self) -> Surd:
        """√3 ↦ −√3."""
        return Surd(self._q, self._s2, -self._s3, -self._s6)

    # ── ring operations ─────────────────────────────────────────
    def __add__(self, other) -> Surd:
        if isinstance(other, Surd):
            return Surd(
                self._q + other._q,
                self._s2 + other._s2,
                self._s3 + other._s3,
                self._s6 + other._s6,
            )
        if isinstance(other, (int, Fraction)):
            return Surd(self._q + other, self._s2, self._s3, self._s6)
        return NotImplemented

    def __radd__(self, other) -> Surd:
        return self + other

    def __neg__(self) -> Surd:
        return Surd(-self._q, -self._s2, -self._s3, -self._s6)

    def __pos__(self) -> Surd:
        return self

    def __sub__(self, other) -> Surd:
        if isinstance(other, (Surd, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other) -> Surd:
        return (-self) + other

    def __mul__(self, other) -> Surd:
        if isinstance(other, (int, Fraction)):
            return Surd(self._q * other, self._s2 * other, self._s3 * other, self._s6 * other)
        if not isinstance(other, Surd):
            return NotImplemented
        if other.is_rational():
            return self * other._q
        if self.is_rational():
            return other * self._q
        return surd_mul(self, other)

    def __rmul__(self, other) -> Surd:
        return self * other

    def __truediv__(self, other) -> Surd:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division of a surd by zero")
            return self * (Fraction(1) / other)
        if isinstance(other, Surd):
            return self * surd_inv(other)
        return NotImplemented

    def __rtruediv__(self, other) -> Surd:
        if isinstance(other, (int, Fraction)):
            return surd_inv(self) * other
        return NotImplemented

    def __pow__(self, exponent: int) -> Surd:
        if exponent < 0:
            return surd_inv(self) ** -exponent
        result = Surd(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inv(self) -> Surd:
        return surd_inv(self)

    # ── order ───────────────────────────────────────────────────
    def sign(self) -> int:
        """Exact sign, decided without floating point."""
        # self = x + y·√3 with x = q + s2√2, y = s3 + s6√2
        sx = _sign_root2(self._q, self._s2)
        sy = _sign_root2(self._s3, self._s6)
        if sy == 0:
            return sx
        if sx == 0 or sx == sy:
            return sy
        # opposite signs: compare x² with 3y², both in ℚ(√2)
        x2 = Surd(self._q, self._s2) * Surd(self._q, self._s2)
        y2 = Surd(self._s3, self._s6) * Surd(self._s3, self._s6)
        d = x2 - 3 * y2
        return sx if _sign_root2(d._q, d._s2) > 0 else sy

    def __lt__(self, other) -> bool:
        return (self - Surd.coerce(other)).sign() < 0

    def __le__(self, other) -> bool:
        return (self - Surd.coerce(other)).sign() <= 0

    def __gt__(self, other) -> bool:
        return (self - Surd.coerce(other)).sign() > 0

    def __ge__(self, other) -> bool:
        return (self - Surd.coerce(other)).sign() >= 0

    def __abs__(self) -> Surd:
        return -self if self.sign() < 0 else self

    # ── equality / hashing ──────────────────────────────────────
    def __eq__(self, other) -> bool:
        if isinstance(other, Surd):
            return self.coef == other.coef
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self._q == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self._q)
        return hash(self.coef)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __float__(self) -> float:
        return surd_to_float(self)

    # ── display ─────────────────────────────────────────────────
    def __repr__(self) -> str:
        return f"Surd({self._q}, {self._s2}, {self._s3}, {self._s6})"

    def __str__(self) -> str:
        parts = []
        for coeff, radical in zip(self.coef, ("", "√2", "√3", "√6")):
            if not coeff:
                continue
            if radical and abs(coeff) == 1:
                text = radical
            else:
                text = f"{abs(coeff)}{radical}"
            parts.append(("-" if coeff < 0 else "+", text))
        if not parts:
            return "0"
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out


# ── module-level operations ─────────────────────────────────────
def surd_mul(a: Surd, b: Surd) -> Surd:
    """Exact product using √2·√3 = √6, √2·√6 = 2√3, √3·√6 = 3√2."""
    q1, a1, b1, c1 = a.coef
    q2, a2, b2, c2 = b.coef
    return Surd(
        q1 * q2 + 2 * a1 * a2 + 3 * b1 * b2 + 6 * c1 * c2,
        q1 * a2 + a1 * q2 + 3 * (b1 * c2 + c1 * b2),
        q1 * b2 + b1 * q2 + 2 * (a1 * c2 + c1 * a2),
        q1 * c2 + c1 * q2 + a1 * b2 + b1 * a2,
    )


def surd_inv(a: Surd) -> Surd:
    """Inverse through the product of Galois conjugates.

    Raises:
        DivisionByZero: when a = 0
    """
    if a.is_zero():
        raise DivisionByZero("inverse of zero surd")
    if a.is_rational():
        return Surd(1 / a.q)
    c3 = a.conj3()
    b = surd_mul(a, c3)            # in ℚ(√2)
    c2 = b.conj2()
    norm = surd_mul(b, c2).q       # in ℚ, nonzero
    return surd_mul(c3, c2) * (1 / norm)


def surd_to_float(a: Surd) -> float:
    """Float image, evaluated at extended precision before rounding."""
    if a.is_rational():
        return float(a.q)
    mp = mpmath.mp
    with mp.workdps(get_settings().mp_digits):
        value = mp.mpf(0)
        for coeff, radicand in zip(a.coef, (1, 2, 3, 6)):
            if not coeff:
                continue
            term = mp.mpf(coeff.numerator) / coeff.denominator
            if radicand != 1:
                term *= mp.sqrt(radicand)
            value += term
        return float(value)


def _rational_sqrt(r: Fraction) -> Optional[Fraction]:
    num, den = r.numerator, r.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def surd_sqrt_if_exact(a: Surd) -> Optional[Surd]:
    """Square root restricted to the shapes c, c√2, c√3, c√6 (c ∈ ℚ, c ≥ 0).

    Returns:
        b with b² = a, or None when a has no root of those shapes

    Raises:
        NegativeInput: when a < 0
    """
    if a.sign() < 0:
        raise NegativeInput(f"square root of negative surd {a}")
    if a.is_zero():
        return Surd(0)
    if not a.is_rational():
        return None
    for radicand, slot in ((1, 0), (2, 1), (3, 2), (6, 3)):
        root = _rational_sqrt(a.q / radicand)
        if root is not None:
            coef = [Fraction(0)] * 4
            coef[slot] = root
            return Surd(*coef)
    return None
