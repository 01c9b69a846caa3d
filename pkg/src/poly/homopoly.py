"""
Sparse homogeneous polynomials in m+1 variables, and vectors of them.

Coefficients live in a ScalarBackend; in exact mode no zero coefficient is
ever stored, so "vanishes identically" is "has no terms".
"""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from ..errors import DegreeMismatch, DimensionMismatch, NotSymmetric
from ..scalar import EXACT, Scalar, ScalarBackend
from .monomial import (
    Monomial,
    format_monomial,
    grlex_key,
    mono_degree,
    mono_mul,
    pure_power,
)


class HomoPoly:
    """Homogeneous polynomial {monomial: coefficient} of a fixed degree."""

    __slots__ = ("nvars", "degree", "terms", "backend")

    def __init__(
        self,
        nvars: int,
        degree: int,
        terms: Optional[Mapping[Monomial, Scalar]] = None,
        backend: ScalarBackend = EXACT,
    ) -> None:
        self.nvars = nvars
        self.degree = degree
        self.backend = backend
        clean: Dict[Monomial, Scalar] = {}
        for mono, coeff in (terms or {}).items():
            if len(mono) != nvars:
                raise DimensionMismatch(f"monomial {mono} has {len(mono)} variables, expected {nvars}")
            if mono_degree(mono) != degree:
                raise DegreeMismatch(f"monomial {mono} has degree {mono_degree(mono)}, expected {degree}")
            if coeff == 0:
                continue
            clean[mono] = coeff
        self.terms = clean

    # ── constructors ────────────────────────────────────────────
    @classmethod
    def zero(cls, nvars: int, degree: int, backend: ScalarBackend = EXACT) -> HomoPoly:
        return cls(nvars, degree, {}, backend)

    @classmethod
    def constant(cls, nvars: int, value: Scalar, backend: ScalarBackend = EXACT) -> HomoPoly:
        return cls(nvars, 0, {(0,) * nvars: backend.coerce(value)}, backend)

    @classmethod
    def norm_sq(cls, nvars: int, backend: ScalarBackend = EXACT) -> HomoPoly:
        """|x|² = Σ (x^i)²."""
        return cls(nvars, 2, {pure_power(nvars, i, 2): backend.one() for i in range(nvars)}, backend)

    # ── arithmetic ──────────────────────────────────────────────
    def _check_compatible(self, other: HomoPoly) -> None:
        if other.nvars != self.nvars:
            raise DimensionMismatch(f"{self.nvars} vs {other.nvars} variables")
        if other.degree != self.degree:
            raise DegreeMismatch(f"cannot add degree {self.degree} and degree {other.degree}")

    def __add__(self, other: HomoPoly) -> HomoPoly:
        if not isinstance(other, HomoPoly):
            return NotImplemented
        self._check_compatible(other)
        acc = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc[mono] = acc[mono] + coeff if mono in acc else coeff
        return HomoPoly(self.nvars, self.degree, acc, self.backend)

    def __neg__(self) -> HomoPoly:
        return HomoPoly(self.nvars, self.degree, {k: -v for k, v in self.terms.items()}, self.backend)

    def __sub__(self, other: HomoPoly) -> HomoPoly:
        if not isinstance(other, HomoPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Scalar) -> HomoPoly:
        factor = self.backend.coerce(factor)
        if self.backend.is_zero(factor) and self.backend.is_exact:
            return HomoPoly.zero(self.nvars, self.degree, self.backend)
        return HomoPoly(self.nvars, self.degree, {k: v * factor for k, v in self.terms.items()}, self.backend)

    def __mul__(self, other) -> HomoPoly:
        if isinstance(other, HomoPoly):
            return poly_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other) -> HomoPoly:
        return self.scale(other)

    def __pow__(self, exponent: int) -> HomoPoly:
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = HomoPoly.constant(self.nvars, self.backend.one(), self.backend)
        for _ in range(exponent):
            result = poly_mul(result, self)
        return result

    # ── queries ─────────────────────────────────────────────────
    def coefficient_of(self, mono: Monomial) -> Scalar:
        return coefficient_of(self, mono)

    def is_zero(self) -> bool:
        return all(self.backend.is_zero(c) for c in self.terms.values())

    def equals(self, other: HomoPoly) -> bool:
        if other.nvars != self.nvars or other.degree != self.degree:
            return False
        return (self - other).is_zero()

    def eval(self, x: Sequence[Scalar]) -> Scalar:
        if len(x) != self.nvars:
            raise DimensionMismatch(f"point has {len(x)} coordinates, expected {self.nvars}")
        total = self.backend.zero()
        for mono, coeff in self.terms.items():
            term = coeff
            for xi, power in zip(x, mono):
                if power:
                    term = term * xi ** power
            total = total + term
        return total

    def to_backend(self, backend: ScalarBackend) -> HomoPoly:
        return HomoPoly(self.nvars, self.degree, {k: backend.coerce(v) for k, v in self.terms.items()}, backend)

    def sorted_terms(self) -> List[Tuple[Monomial, Scalar]]:
        return sorted(self.terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)

    def nonzero_monomials(self) -> List[Monomial]:
        return [m for m, c in self.sorted_terms() if not self.backend.is_zero(c)]

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"HomoPoly(nvars={self.nvars}, degree={self.degree}, terms={len(self.terms)})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        fmt = self.backend.format
        return " + ".join(f"({fmt(c)})*{format_monomial(m)}" for m, c in self.sorted_terms())


class HomoPolyVec:
    """Vector of n+1 homogeneous polynomials sharing one degree."""

    __slots__ = ("components",)

    def __init__(self, components: Iterable[HomoPoly]) -> None:
        comps = tuple(components)
        if not comps:
            raise DimensionMismatch("a polynomial vector needs at least one component")
        head = comps[0]
        for comp in comps[1:]:
            if comp.degree != head.degree:
                raise DegreeMismatch("all components must share one degree")
            if comp.nvars != head.nvars:
                raise DimensionMismatch("all components must share one variable count")
        self.components = comps

    @classmethod
    def from_constants(cls, values: Sequence[Scalar], nvars: int, backend: ScalarBackend = EXACT) -> HomoPolyVec:
        return cls(HomoPoly.constant(nvars, v, backend) for v in values)

    @property
    def dim(self) -> int:
        return len(self.components)

    @property
    def degree(self) -> int:
        return self.components[0].degree

    @property
    def nvars(self) -> int:
        return self.components[0].nvars

    @property
    def backend(self) -> ScalarBackend:
        return self.components[0].backend

    def __getitem__(self, index: int) -> HomoPoly:
        return self.components[index]

    def __iter__(self) -> Iterator[HomoPoly]:
        return iter(self.components)

    def __len__(self) -> int:
        return self.dim

    def __add__(self, other: HomoPolyVec) -> HomoPolyVec:
        if other.dim != self.dim:
            raise DimensionMismatch(f"vector sizes {self.dim} and {other.dim}")
        return HomoPolyVec(a + b for a, b in zip(self, other))

    def __neg__(self) -> HomoPolyVec:
        return HomoPolyVec(-a for a in self)

    def __sub__(self, other: HomoPolyVec) -> HomoPolyVec:
        return self + (-other)

    def scale(self, factor: Scalar) -> HomoPolyVec:
        return HomoPolyVec(a.scale(factor) for a in self)

    def times(self, poly: HomoPoly) -> HomoPolyVec:
        """Multiply every component by one polynomial."""
        return HomoPolyVec(poly_mul(poly, a) for a in self)

    def is_zero(self) -> bool:
        return is_zero_vec(self)

    def eval(self, x: Sequence[Scalar]) -> List[Scalar]:
        return eval_vec(self, x)

    def to_backend(self, backend: ScalarBackend) -> HomoPolyVec:
        return HomoPolyVec(a.to_backend(backend) for a in self)

    def __repr__(self) -> str:
        return f"HomoPolyVec(dim={self.dim}, degree={self.degree}, nvars={self.nvars})"


# ── module-level operations ─────────────────────────────────────
def poly_mul(p: HomoPoly, q: HomoPoly) -> HomoPoly:
    if p.nvars != q.nvars:
        raise DimensionMismatch(f"{p.nvars} vs {q.nvars} variables")
    acc: Dict[Monomial, Scalar] = {}
    for m1, c1 in p.terms.items():
        for m2, c2 in q.terms.items():
            mono = mono_mul(m1, m2)
            product = c1 * c2
            acc[mono] = acc[mono] + product if mono in acc else product
    return HomoPoly(p.nvars, p.degree + q.degree, acc, p.backend)


def quad_from_matrix(a: np.ndarray, backend: ScalarBackend = EXACT) -> HomoPoly:
    """XᵗAX as a degree-2 polynomial: A_ii on (x^i)², 2A_ij on x^i x^j (i<j).

    Raises:
        NotSymmetric: A is not symmetric (no silent symmetrization)
    """
    size = a.shape[0]
    if a.shape != (size, size):
        raise DimensionMismatch(f"matrix of shape {a.shape} is not square")
    terms: Dict[Monomial, Scalar] = {}
    for i in range(size):
        terms[pure_power(size, i, 2)] = backend.coerce(a[i, i])
        for j in range(i + 1, size):
            if not backend.eq(a[i, j], a[j, i]):
                raise NotSymmetric(f"entries ({i},{j}) and ({j},{i}) differ")
            mono = [0] * size
            mono[i] = mono[j] = 1
            terms[tuple(mono)] = backend.coerce(a[i, j]) * 2
    return HomoPoly(size, 2, terms, backend)


def coefficient_of(p: HomoPoly, mono: Monomial) -> Scalar:
    if mono_degree(mono) != p.degree:
        raise DegreeMismatch(f"monomial of degree {mono_degree(mono)} in a degree-{p.degree} polynomial")
    if len(mono) != p.nvars:
        raise DimensionMismatch(f"monomial has {len(mono)} variables, expected {p.nvars}")
    return p.terms.get(tuple(mono), p.backend.zero())


def is_zero_vec(v: HomoPolyVec) -> bool:
    return all(comp.is_zero() for comp in v)


def eval_vec(v: HomoPolyVec, x: Sequence[Scalar]) -> List[Scalar]:
    if len(x) != v.nvars:
        raise DimensionMismatch(f"point has {len(x)} coordinates, expected {v.nvars}")
    return [comp.eval(x) for comp in v]
