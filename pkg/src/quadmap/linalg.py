"""
Small matrix helpers over a ScalarBackend.

Matrices are numpy arrays (object dtype holding Surds in exact mode,
float64 in float mode); numpy does the products, these helpers do the
backend-aware comparisons.
"""

from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from ..errors import DimensionMismatch, NotOrthogonal
from ..scalar import Scalar, ScalarBackend


def trace(a: np.ndarray, backend: ScalarBackend) -> Scalar:
    total = backend.zero()
    for i in range(a.shape[0]):
        total = total + a[i, i]
    return total


def dot(u: Sequence[Scalar], v: Sequence[Scalar], backend: ScalarBackend) -> Scalar:
    if len(u) != len(v):
        raise DimensionMismatch(f"vectors of length {len(u)} and {len(v)}")
    total = backend.zero()
    for a, b in zip(u, v):
        total = total + a * b
    return total


def norm_sq(u: Sequence[Scalar], backend: ScalarBackend) -> Scalar:
    return dot(u, u, backend)


def symmetrized(a: np.ndarray, backend: ScalarBackend) -> np.ndarray:
    """(A + Aᵗ)/2."""
    half = backend.rational(1, 2)
    return backend.convert((a + a.T) * half)


def is_symmetric(a: np.ndarray, backend: ScalarBackend) -> bool:
    return a.ndim == 2 and a.shape[0] == a.shape[1] and backend.arrays_equal(a, a.T)


def scalar_multiple_of_identity(a: np.ndarray, backend: ScalarBackend) -> Optional[Scalar]:
    """Return c when A = c·I, else None."""
    size = a.shape[0]
    c = a[0, 0]
    for i in range(size):
        for j in range(size):
            expected = c if i == j else backend.zero()
            if not backend.eq(a[i, j], expected):
                return None
    return c


def is_diagonal(a: np.ndarray, backend: ScalarBackend) -> bool:
    size = a.shape[0]
    return all(backend.is_zero(a[i, j]) for i in range(size) for j in range(size) if i != j)


def check_orthogonal(q: np.ndarray, backend: ScalarBackend, label: str = "matrix") -> None:
    """Raise NotOrthogonal unless QᵗQ = I (exactly in exact mode)."""
    if q.ndim != 2 or q.shape[0] != q.shape[1]:
        raise NotOrthogonal(f"{label} of shape {q.shape} is not square")
    if not backend.arrays_equal(q.T @ q, backend.identity(q.shape[0])):
        raise NotOrthogonal(f"{label} is not orthogonal")


def signed_permutation(perm: Sequence[int], signs: Sequence[int], backend: ScalarBackend) -> np.ndarray:
    """Matrix sending e_j to signs[j]·e_{perm[j]}."""
    size = len(perm)
    if sorted(perm) != list(range(size)) or len(signs) != size:
        raise ValueError("perm must be a permutation with one sign per entry")
    q = backend.zeros((size, size))
    for j, (i, s) in enumerate(zip(perm, signs)):
        q[i, j] = backend.coerce(1 if s > 0 else -1)
    return q


def plane_rotation(size: int, i: int, j: int, cos: Fraction, sin: Fraction, backend: ScalarBackend) -> np.ndarray:
    """Rotation in the (i, j) coordinate plane; exact when cos² + sin² = 1 in ℚ."""
    if i == j:
        raise ValueError("rotation plane needs two distinct axes")
    if cos * cos + sin * sin != 1:
        raise NotOrthogonal(f"({cos}, {sin}) is not on the unit circle")
    q = backend.identity(size)
    q[i, i] = backend.coerce(cos)
    q[j, j] = backend.coerce(cos)
    q[i, j] = backend.coerce(-sin)
    q[j, i] = backend.coerce(sin)
    return q


def min_eigenvalue(a: np.ndarray, backend: ScalarBackend) -> float:
    """Smallest eigenvalue of the float image of a symmetric matrix."""
    return float(np.linalg.eigvalsh(backend.to_float_array(a)).min())


def is_positive_definite(a: np.ndarray, backend: ScalarBackend) -> bool:
    return is_symmetric(a, backend) and min_eigenvalue(a, backend) > 0.0


def frozen(a: np.ndarray) -> np.ndarray:
    out = a.copy()
    out.setflags(write=False)
    return out
