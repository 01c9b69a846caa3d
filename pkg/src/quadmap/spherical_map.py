"""
The validated quadratic map φ: S^m → S^n, F(x) = (XᵗA₁X, …, XᵗA_{n+1}X).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property
from typing import Optional, Sequence, Tuple

import numpy as np

from ..errors import ConstantMap, DimensionMismatch, NotSpherical, NotSymmetric
from ..poly import HomoPoly, HomoPolyVec, quad_from_matrix
from ..scalar import EXACT, Scalar, ScalarBackend
from .linalg import frozen, is_symmetric, scalar_multiple_of_identity, symmetrized, trace
from .sphericity import check_spherical_polynomial


@dataclass(frozen=True, eq=False)
class QuadraticSphericalMap:
    """Immutable after validated construction; build through from_matrices."""
    m: int
    n: int
    matrices: Tuple[np.ndarray, ...]
    backend: ScalarBackend = EXACT
    name: Optional[str] = None

    @classmethod
    def from_matrices(
        cls,
        matrices: Sequence[np.ndarray],
        backend: ScalarBackend = EXACT,
        name: Optional[str] = None,
    ) -> QuadraticSphericalMap:
        """Validate symmetry, sphericity and non-constancy.

        Raises:
            NotSymmetric, NotSpherical, ConstantMap, DimensionMismatch
        """
        mats = _coerce_matrices(matrices, backend)
        for index, a in enumerate(mats):
            if not is_symmetric(a, backend):
                raise NotSymmetric(f"A_{index + 1} is not symmetric")
        certificate = check_spherical_polynomial(mats, backend)
        if not certificate.spherical:
            raise NotSpherical(certificate.describe(), monomial=certificate.offending)
        if all(scalar_multiple_of_identity(a, backend) is not None for a in mats):
            raise ConstantMap("every A_i is a multiple of the identity")
        qmap = cls(
            m=mats[0].shape[0] - 1,
            n=len(mats) - 1,
            matrices=tuple(frozen(a) for a in mats),
            backend=backend,
            name=name,
        )
        if __debug__ and backend.is_exact:
            from .fields import trace_identity_residual
            assert trace_identity_residual(qmap) == 0, "trace identity violated"
        return qmap

    # ── derived data, computed once ─────────────────────────────
    @property
    def size(self) -> int:
        """m + 1, the number of domain variables."""
        return self.m + 1

    @cached_property
    def forms(self) -> HomoPolyVec:
        """F(x) as a degree-2 polynomial vector."""
        return HomoPolyVec(quad_from_matrix(a, self.backend) for a in self.matrices)

    @cached_property
    def s_entries(self) -> np.ndarray:
        s = self.backend.zeros((self.size, self.size))
        for a in self.matrices:
            s = s + a @ a
        return frozen(self.backend.convert(s))

    @cached_property
    def traces(self) -> Tuple[Scalar, ...]:
        return tuple(trace(a, self.backend) for a in self.matrices)

    @cached_property
    def norm_sq_poly(self) -> HomoPoly:
        return HomoPoly.norm_sq(self.size, self.backend)

    # ── conversions ─────────────────────────────────────────────
    def to_backend(self, backend: ScalarBackend) -> QuadraticSphericalMap:
        if backend == self.backend:
            return self
        return QuadraticSphericalMap.from_matrices(
            [backend.convert(a) for a in self.matrices], backend, self.name
        )

    def renamed(self, name: str) -> QuadraticSphericalMap:
        return replace(self, name=name)

    def same_as(self, other: QuadraticSphericalMap) -> bool:
        return (
            self.m == other.m
            and self.n == other.n
            and all(self.backend.arrays_equal(a, b) for a, b in zip(self.matrices, other.matrices))
        )

    def float_stack(self) -> np.ndarray:
        """Matrices as a float64 array of shape (n+1, m+1, m+1)."""
        return np.stack([self.backend.to_float_array(a) for a in self.matrices])

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"QuadraticSphericalMap{label}(S^{self.m} → S^{self.n}, {self.backend.mode.value})"


def _coerce_matrices(matrices: Sequence[np.ndarray], backend: ScalarBackend) -> list:
    mats = [backend.convert(np.asarray(a, dtype=object)) for a in matrices]
    if not mats:
        raise DimensionMismatch("a quadratic map needs at least one matrix")
    size = mats[0].shape[0] if mats[0].ndim == 2 else -1
    for index, a in enumerate(mats):
        if a.ndim != 2 or a.shape != (size, size):
            raise DimensionMismatch(f"A_{index + 1} has shape {a.shape}, expected ({size}, {size})")
    return mats


def symmetrize(raw_matrices: Sequence[np.ndarray], backend: ScalarBackend = EXACT, name: Optional[str] = None) -> QuadraticSphericalMap:
    """A_i ← (A_i + A_iᵗ)/2, then validate.

    Raises:
        NotSpherical: with the offending monomial of |F|² − |x|⁴
        ConstantMap: every A_i is a multiple of the identity
    """
    mats = _coerce_matrices(raw_matrices, backend)
    return QuadraticSphericalMap.from_matrices([symmetrized(a, backend) for a in mats], backend, name)


def symmetrized_matrices(raw_matrices: Sequence[np.ndarray], backend: ScalarBackend = EXACT) -> list:
    """Symmetrize without validating (for negative certificates)."""
    return [symmetrized(a, backend) for a in _coerce_matrices(raw_matrices, backend)]
