"""Random-point evaluation of the bitension and energy identities."""

from typing import Optional

import numpy as np
from pydantic import BaseModel

from ..config.settings import get_settings
from ..quadmap import QuadraticSphericalMap, bitension_coefficients, homogenized_bitension, laplacian_f, s_matrix
from .plan import CompiledPolyVec, SamplePlan, check_unit, evaluate_forms, sample_points, tangent_frame


class BitensionSpotCheck(BaseModel):
    samples: int
    max_norm: float
    # None when S is not scalar
    max_closed_form_discrepancy: Optional[float] = None
    passed: bool


class EnergySpotCheck(BaseModel):
    samples: int
    max_relative_error: float
    passed: bool


def spot_check_bitension(
    qmap: QuadraticSphericalMap,
    plan: Optional[SamplePlan] = None,
    tolerance: Optional[float] = None,
) -> BitensionSpotCheck:
    """Evaluate the degree-6 bitension at unit points; compare with the
    scalar-S closed form c₁Δ₀F + c₂Φ when it applies."""
    plan = plan or SamplePlan.from_settings()
    tolerance = get_settings().bitension_tolerance if tolerance is None else tolerance
    backend = qmap.backend
    points = sample_points(plan, qmap.size)
    values = CompiledPolyVec.from_vec(homogenized_bitension(qmap), backend)(points)
    max_norm = float(np.max(np.linalg.norm(values, axis=1)))

    s = s_matrix(qmap)
    if not s.is_scalar:
        return BitensionSpotCheck(samples=plan.count, max_norm=max_norm, passed=True)

    c_lap, c_phi = (backend.to_float(c) for c in bitension_coefficients(qmap, s.scalar))
    lap = np.array([backend.to_float(c) for c in laplacian_f(qmap)])
    closed = c_lap * lap[None, :] + c_phi * evaluate_forms(qmap.float_stack(), points)
    scale = np.maximum(1.0, np.linalg.norm(closed, axis=1))
    worst = float(np.max(np.linalg.norm(values - closed, axis=1) / scale))
    return BitensionSpotCheck(
        samples=plan.count,
        max_norm=max_norm,
        max_closed_form_discrepancy=worst,
        passed=worst <= tolerance,
    )


def fd_energy(stack: np.ndarray, p: np.ndarray, step: float) -> float:
    """Σ_a |dΦ_p(e_a)|² from geodesic central first differences."""
    p = check_unit(p)
    total = 0.0
    for e in tangent_frame(p):
        forward = evaluate_forms(stack, np.cos(step) * p + np.sin(step) * e)
        backward = evaluate_forms(stack, np.cos(step) * p - np.sin(step) * e)
        derivative = (forward - backward) / (2.0 * step)
        total += float(derivative @ derivative)
    return total


def energy_spot_check(qmap: QuadraticSphericalMap, plan: Optional[SamplePlan] = None) -> EnergySpotCheck:
    """|dφ|² by finite differences against 4pᵗSp − 4."""
    plan = plan or SamplePlan.from_settings()
    stack = qmap.float_stack()
    s = qmap.backend.to_float_array(qmap.s_entries)
    worst = 0.0
    for p in sample_points(plan, qmap.size):
        expected = 4.0 * float(p @ s @ p) - 4.0
        worst = max(worst, abs(fd_energy(stack, p, plan.step) - expected) / max(1.0, abs(expected)))
    return EnergySpotCheck(samples=plan.count, max_relative_error=worst, passed=worst <= plan.tolerance)
