"""
Great-circle finite differences on S^m.

Along γ(t) = cos(t)·p + sin(t)·e the pullback F∘γ is a trigonometric
polynomial of degree 2, so the central second difference carries the
relative factor sin²(h)/h² ≈ 1 − h²/3.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np
from pydantic import BaseModel

from ..quadmap import QuadraticSphericalMap, tension_field
from .plan import CompiledPolyVec, SamplePlan, check_unit, evaluate_forms, sample_points, tangent_frame


@dataclass(frozen=True)
class FdTension:
    projected: np.ndarray   # τ(φ)(p), tangent to S^n at Φ(p)
    raw: np.ndarray         # Laplace–Beltrami trace before projection
    value: np.ndarray       # Φ(p)

    @property
    def normal_component(self) -> float:
        """⟨raw, Φ(p)⟩, which equals −|dφ|²(p)."""
        return float(self.raw @ self.value)


class TensionCheck(BaseModel):
    samples: int
    step: float
    max_relative_error: float
    max_fd_norm: float
    max_tangency_error: float
    passed: bool


def fd_tension(qmap: QuadraticSphericalMap, p, plan: Optional[SamplePlan] = None, stack: Optional[np.ndarray] = None) -> FdTension:
    """Numerical τ(φ)(p) from geodesic central differences.

    Raises:
        NotOnSphere: |p| differs from 1 by more than 1e−12
    """
    plan = plan or SamplePlan.from_settings()
    p = check_unit(p)
    stack = qmap.float_stack() if stack is None else stack
    h = plan.step
    frame = tangent_frame(p)
    centre = evaluate_forms(stack, p)
    raw = np.zeros_like(centre)
    for e in frame:
        forward = evaluate_forms(stack, np.cos(h) * p + np.sin(h) * e)
        backward = evaluate_forms(stack, np.cos(h) * p - np.sin(h) * e)
        raw += (forward - 2.0 * centre + backward) / (h * h)
    projected = raw - (raw @ centre) * centre
    return FdTension(projected=projected, raw=raw, value=centre)


def symbolic_tension(qmap: QuadraticSphericalMap) -> CompiledPolyVec:
    """The degree-4 tension representative, compiled for float evaluation."""
    return CompiledPolyVec.from_vec(tension_field(qmap), qmap.backend)


def tension_check(qmap: QuadraticSphericalMap, plan: Optional[SamplePlan] = None) -> TensionCheck:
    """fd_tension against the symbolic tension at the plan's sample points.

    The tangency figure compares ⟨raw, Φ⟩ with −(4pᵗSp − 4).
    """
    plan = plan or SamplePlan.from_settings()
    stack = qmap.float_stack()
    s = qmap.backend.to_float_array(qmap.s_entries)
    symbolic = symbolic_tension(qmap)
    points = sample_points(plan, qmap.size)
    expected = symbolic(points)

    worst = worst_norm = worst_tangency = 0.0
    for p, sym in zip(points, expected):
        result = fd_tension(qmap, p, plan, stack)
        worst = max(worst, float(np.linalg.norm(result.projected - sym)) / max(1.0, float(np.linalg.norm(sym))))
        worst_norm = max(worst_norm, float(np.linalg.norm(result.projected)))
        energy = 4.0 * float(p @ s @ p) - 4.0
        worst_tangency = max(worst_tangency, abs(result.normal_component + energy) / max(1.0, energy))
    return TensionCheck(
        samples=plan.count,
        step=plan.step,
        max_relative_error=worst,
        max_fd_norm=worst_norm,
        max_tangency_error=worst_tangency,
        passed=worst <= plan.tolerance and worst_tangency <= plan.tolerance,
    )
