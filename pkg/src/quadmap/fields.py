"""
Differential quantities of a quadratic map, all as exact polynomial data.

On S^m, with S = Σ A_i² and Δ₀F = −2(tr A_i)_i:

    |d₀F|² = 4XᵗSX                 |dφ|² = |d₀F|² − 4
    τ(φ)   = −Δ₀F + (|d₀F|² − 2(m+3))Φ
    τ₂(φ)  = −4(m+5 − 4XᵗSX)(tr A_i)_i
             + 4((m+3)(m+5) − 6(m+5)XᵗSX + 8(XᵗSX)²)Φ
             + 32(XᵗA_iSX)_i

Sphere identities are homogenized by multiplying every term with the power
of |x|² that brings it to a common degree (4 for τ, 6 for τ₂), so that
"vanishes on S^m" becomes "all coefficients are zero".
"""

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from ..poly import HomoPoly, HomoPolyVec, quad_from_matrix
from ..scalar import Scalar
from .linalg import norm_sq, scalar_multiple_of_identity, symmetrized
from .spherical_map import QuadraticSphericalMap


@dataclass(frozen=True)
class SMatrix:
    entries: np.ndarray
    scalar: Optional[Scalar] = None   # α when S = αI

    @property
    def is_scalar(self) -> bool:
        return self.scalar is not None


@dataclass(frozen=True)
class EnergyDensity:
    """2XᵗSX − 2|x|², which equals e(φ) = |dφ|²/2 on S^m."""
    polynomial: HomoPoly
    constant: Optional[Scalar] = None

    @property
    def is_constant(self) -> bool:
        return self.constant is not None


@dataclass(frozen=True)
class BitensionField:
    homogenized: HomoPolyVec
    # (coefficient of Δ₀F, coefficient of Φ) when S = αI
    closed_form: Optional[Tuple[Scalar, Scalar]] = None


def s_matrix(qmap: QuadraticSphericalMap) -> SMatrix:
    entries = qmap.s_entries
    return SMatrix(entries, scalar_multiple_of_identity(entries, qmap.backend))


def laplacian_f(qmap: QuadraticSphericalMap) -> Tuple[Scalar, ...]:
    """Δ₀F = −2(tr A₁, …, tr A_{n+1})."""
    return tuple(t * -2 for t in qmap.traces)


def energy_density(qmap: QuadraticSphericalMap) -> EnergyDensity:
    backend = qmap.backend
    sform = quad_from_matrix(qmap.s_entries, backend)
    poly = sform.scale(2) - qmap.norm_sq_poly.scale(2)
    s = s_matrix(qmap)
    constant = (s.scalar - 1) * 2 if s.is_scalar else None
    return EnergyDensity(poly, constant)


def tension_field(qmap: QuadraticSphericalMap) -> HomoPolyVec:
    """Degree-4 representative −|x|⁴Δ₀F + (4XᵗSX − 2(m+3)|x|²)F(x)."""
    r2 = qmap.norm_sq_poly
    r4 = r2 * r2
    weight = quad_from_matrix(qmap.s_entries, qmap.backend).scale(4) - r2.scale(2 * (qmap.m + 3))
    lap = laplacian_f(qmap)
    return HomoPolyVec(
        r4.scale(-lap[k]) + weight * qmap.forms[k]
        for k in range(qmap.n + 1)
    )


def homogenized_bitension(qmap: QuadraticSphericalMap) -> HomoPolyVec:
    """Degree-6 homogenization of τ₂(φ):

        −4|x|⁴((m+5)|x|² − 4XᵗSX)(tr A_i)
        + 4((m+3)(m+5)|x|⁴ − 6(m+5)|x|²XᵗSX + 8(XᵗSX)²)F(x)
        + 32|x|⁴(XᵗA_iSX)
    """
    backend = qmap.backend
    m = qmap.m
    s = qmap.s_entries
    r2 = qmap.norm_sq_poly
    r4 = r2 * r2
    sform = quad_from_matrix(s, backend)

    trace_weight = r4 * (r2.scale(m + 5) - sform.scale(4))
    phi_weight = (
        r4.scale((m + 3) * (m + 5))
        - (r2 * sform).scale(6 * (m + 5))
        + (sform * sform).scale(8)
    ).scale(4)
    r4_32 = r4.scale(32)

    components = []
    for k, a in enumerate(qmap.matrices):
        asx = quad_from_matrix(symmetrized(a @ s, backend), backend)
        components.append(
            trace_weight.scale(qmap.traces[k] * -4)
            + phi_weight * qmap.forms[k]
            + r4_32 * asx
        )
    return HomoPolyVec(components)


def bitension_coefficients(qmap: QuadraticSphericalMap, alpha: Scalar) -> Tuple[Scalar, Scalar]:
    """For S = αI: τ₂ = −8(α − (m+5)/4)Δ₀F + 32(α − (m+5)/4)(α − (m+3)/2)Φ."""
    backend = qmap.backend
    m = qmap.m
    d1 = alpha - backend.rational(m + 5, 4)
    d2 = alpha - backend.rational(m + 3, 2)
    return (d1 * -8, d1 * d2 * 32)


def bitension_field(qmap: QuadraticSphericalMap) -> BitensionField:
    s = s_matrix(qmap)
    closed = bitension_coefficients(qmap, s.scalar) if s.is_scalar else None
    return BitensionField(homogenized_bitension(qmap), closed)


def trace_identity_residual(qmap: QuadraticSphericalMap) -> Scalar:
    """8·tr S + |Δ₀F|² − 4(m+1)(m+3); zero for every quadratic map."""
    backend = qmap.backend
    s = qmap.s_entries
    tr_s = backend.zero()
    for i in range(qmap.size):
        tr_s = tr_s + s[i, i]
    m = qmap.m
    return tr_s * 8 + norm_sq(laplacian_f(qmap), backend) - 4 * (m + 1) * (m + 3)
