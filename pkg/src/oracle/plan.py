"""Sampling plans, sample points and tangent frames on S^m."""

from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from ..config.settings import get_settings
from ..errors import NotOnSphere
from ..poly import HomoPolyVec
from ..scalar import ScalarBackend

UNIT_TOLERANCE = 1e-12


@dataclass(frozen=True)
class SamplePlan:
    count: int = 50
    seed: int = 0
    step: float = 1e-4
    tolerance: float = 1e-5

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("sample count must be at least 1")
        if not 0.0 < self.step < 1e-2:
            raise ValueError("finite-difference step must lie in (0, 1e-2)")
        if self.tolerance <= 0.0:
            raise ValueError("tolerance must be positive")

    @classmethod
    def from_settings(
        cls,
        count: Optional[int] = None,
        seed: Optional[int] = None,
        step: Optional[float] = None,
        tolerance: Optional[float] = None,
    ) -> "SamplePlan":
        settings = get_settings()
        return cls(
            count=settings.oracle_samples if count is None else count,
            seed=settings.oracle_seed if seed is None else seed,
            step=settings.fd_step if step is None else step,
            tolerance=settings.oracle_tolerance if tolerance is None else tolerance,
        )


def sample_points(plan: SamplePlan, size: int) -> np.ndarray:
    """`plan.count` unit vectors in ℝ^size, deterministic in plan.seed."""
    rng = np.random.default_rng(plan.seed)
    raw = rng.standard_normal((plan.count, size))
    return raw / np.linalg.norm(raw, axis=1, keepdims=True)


def check_unit(p: np.ndarray) -> np.ndarray:
    p = np.asarray(p, dtype=np.float64)
    if abs(np.linalg.norm(p) - 1.0) > UNIT_TOLERANCE:
        raise NotOnSphere(f"|p| = {np.linalg.norm(p)!r} is not 1")
    return p


def tangent_frame(p: np.ndarray) -> np.ndarray:
    """Rows form an orthonormal basis of p^⊥."""
    _, _, vt = np.linalg.svd(p.reshape(1, -1))
    return vt[1:]


def evaluate_forms(stack: np.ndarray, x: np.ndarray) -> np.ndarray:
    """F(x) for matrices of shape (n+1, s, s); x may be (s,) or (N, s)."""
    if x.ndim == 1:
        return np.einsum("kij,i,j->k", stack, x, x)
    return np.einsum("kij,ni,nj->nk", stack, x, x)


@dataclass(frozen=True)
class CompiledPolyVec:
    """A HomoPolyVec as exponent and coefficient arrays, for fast float evaluation."""
    exponents: List[np.ndarray]
    coefficients: List[np.ndarray]

    @classmethod
    def from_vec(cls, vec: HomoPolyVec, backend: ScalarBackend) -> "CompiledPolyVec":
        exponents, coefficients = [], []
        for component in vec:
            terms = component.sorted_terms()
            if terms:
                exponents.append(np.array([mono for mono, _ in terms], dtype=np.int64))
                coefficients.append(np.array([backend.to_float(c) for _, c in terms]))
            else:
                exponents.append(np.zeros((0, vec.nvars), dtype=np.int64))
                coefficients.append(np.zeros(0))
        return cls(exponents, coefficients)

    def __call__(self, points: Sequence[np.ndarray]) -> np.ndarray:
        """Values of shape (N, dim) at points of shape (N, s)."""
        points = np.atleast_2d(points)
        out = np.zeros((points.shape[0], len(self.coefficients)))
        for k, (exps, coeffs) in enumerate(zip(self.exponents, self.coefficients)):
            if coeffs.size:
                monomials = np.prod(points[:, None, :] ** exps[None, :, :], axis=2)
                out[:, k] = monomials @ coeffs
        return out
