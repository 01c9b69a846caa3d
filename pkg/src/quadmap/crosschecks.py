"""Consistency checks tying the polynomial engine to closed-form identities."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..config.settings import get_settings
from ..poly import pure_power
from ..scalar import Scalar
from .fields import bitension_coefficients, homogenized_bitension, laplacian_f, s_matrix
from .linalg import is_diagonal, min_eigenvalue
from .spherical_map import QuadraticSphericalMap


@dataclass(frozen=True)
class SexticMismatch:
    component: int
    variable: int
    expected: Scalar
    actual: Scalar


@dataclass(frozen=True)
class SexticCheck:
    applicable: bool
    mismatches: List[SexticMismatch] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return self.applicable and not self.mismatches


def sextic_diagonal_check(qmap: QuadraticSphericalMap) -> SexticCheck:
    """For diagonal S, coefficient of (x^k)⁶ in component i of the degree-6
    bitension equals 4(5+m−4s_k)(a^i_k(3+m−2s_k) − tr A_i)."""
    backend = qmap.backend
    s = qmap.s_entries
    if not is_diagonal(s, backend):
        return SexticCheck(False)
    m = qmap.m
    bitension = homogenized_bitension(qmap)
    mismatches = []
    for i, a in enumerate(qmap.matrices):
        for k in range(qmap.size):
            s_k = s[k, k]
            expected = (s_k * -4 + (5 + m)) * 4 * (a[k, k] * (s_k * -2 + (3 + m)) - qmap.traces[i])
            actual = bitension[i].coefficient_of(pure_power(qmap.size, k, 6))
            if not backend.eq(expected, actual):
                mismatches.append(SexticMismatch(i, k, expected, actual))
    return SexticCheck(True, mismatches)


def eigenvalue_bound_check(qmap: QuadraticSphericalMap, slack: Optional[float] = None) -> Tuple[float, bool]:
    """λ_min(S) ≥ 1 on the float image (every s_k is 1 + ¼Σ|ā_ik|²)."""
    if slack is None:
        slack = get_settings().eigenvalue_slack
    lowest = min_eigenvalue(qmap.s_entries, qmap.backend)
    return lowest, lowest >= 1.0 - slack


def rational_sphere_points(size: int, count: int, seed: int = 0) -> List[Tuple[Fraction, ...]]:
    """Exact rational points of S^{size−1} by inverse stereographic projection."""
    rng = np.random.default_rng(seed)
    points = []
    for _ in range(count):
        t = [Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 6))) for _ in range(size - 1)]
        r2 = sum(x * x for x in t)
        scale = 1 / (r2 + 1)
        points.append(tuple([2 * x * scale for x in t] + [(r2 - 1) * scale]))
    return points


def closed_form_consistency(
    qmap: QuadraticSphericalMap,
    points: Optional[Sequence[Sequence[Fraction]]] = None,
) -> Optional[bool]:
    """When S = αI, the degree-6 bitension at unit points equals the closed
    form c₁Δ₀F + c₂Φ. Returns None when S is not scalar."""
    backend = qmap.backend
    s = s_matrix(qmap)
    if not s.is_scalar:
        return None
    if points is None:
        points = rational_sphere_points(qmap.size, 5)
    c_lap, c_phi = bitension_coefficients(qmap, s.scalar)
    lap = laplacian_f(qmap)
    bitension = homogenized_bitension(qmap)
    for p in points:
        x = [backend.coerce(c) for c in p]
        values = bitension.eval(x)
        phi = qmap.forms.eval(x)
        for k in range(qmap.n + 1):
            if not backend.eq(values[k], lap[k] * c_lap + phi[k] * c_phi):
                return False
    return True
