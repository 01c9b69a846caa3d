"""
Small hyperspheres containing the image of a quadratic map.

When S = αI the tension field τ = −Δ₀F + cΦ, c = 4α − 2(m+3), is tangent
to S^n, so ⟨Δ₀F, Φ⟩ = c and the image lies in the affine hyperplane
⟨ā, y⟩ = c with ā = Δ₀F, cut from S^n as a sphere of radius² 1 − c²/|ā|².
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import numpy as np

from ..errors import NotInClaimedSphere, NotProperBiharmonic, RadiusBelowBound
from ..quadmap import QuadraticSphericalMap, classify_by_criterion, laplacian_f, s_matrix
from ..quadmap.linalg import norm_sq, scalar_multiple_of_identity
from ..scalar import Scalar, ScalarBackend
from ..state.enums import Verdict


@dataclass(frozen=True)
class HypersphereLocation:
    center: Tuple[Scalar, ...]
    radius_sq: Scalar
    # Δ₀F itself, not normalized (|Δ₀F| need not lie in the field)
    unit_normal_direction: Tuple[Scalar, ...]
    affine_offset: Scalar


class HypersphereCase(str, Enum):
    """
    Which branch of the r ≥ 1/√2 bound a contained map falls in.

    Usage:
        report.case == HypersphereCase.CRITICAL  -> ψ itself is harmonic
        report.case == HypersphereCase.LARGER    -> image sits in a smaller sphere of radius 1/√2
    """
    CRITICAL = "critical"
    LARGER = "larger"


@dataclass(frozen=True)
class HypersphereReport:
    case: HypersphereCase
    radius_sq: Scalar
    last_component: Scalar
    psi_harmonic: bool
    small_radius_sq: Optional[Scalar] = None
    center: Optional[Tuple[Scalar, ...]] = None
    # Σ w_k A_k = 0: the image lies in the great subsphere w^⊥
    nonfull_witness: Optional[Tuple[Scalar, ...]] = None

    @property
    def full(self) -> bool:
        return self.nonfull_witness is None


def _combination(qmap: QuadraticSphericalMap, weights) -> np.ndarray:
    backend = qmap.backend
    acc = backend.zeros((qmap.size, qmap.size))
    for w, a in zip(weights, qmap.matrices):
        acc = acc + a * w
    return backend.convert(acc)


def locate_hypersphere(qmap: QuadraticSphericalMap) -> Optional[HypersphereLocation]:
    """The forced hypersphere of a map with scalar S and Δ₀F ≠ 0, else None."""
    backend = qmap.backend
    lap = laplacian_f(qmap)
    if all(backend.is_zero(c) for c in lap):
        return None
    s = s_matrix(qmap)
    if not s.is_scalar:
        return None
    offset = s.scalar * 4 - 2 * (qmap.m + 3)

    # ⟨ā, F(x)⟩ = c|x|² as a polynomial identity
    plane = scalar_multiple_of_identity(_combination(qmap, lap), backend)
    if plane is None or not backend.eq(plane, offset):
        return None

    length_sq = norm_sq(lap, backend)
    t = offset * backend.inv(length_sq)
    return HypersphereLocation(
        center=tuple(c * t for c in lap),
        radius_sq=backend.one() - offset * offset * backend.inv(length_sq),
        unit_normal_direction=tuple(lap),
        affine_offset=offset,
    )


def _claimed_last_component(qmap: QuadraticSphericalMap, radius_sq: Scalar) -> Scalar:
    """c with A_{n+1} = c·I, c > 0 and c² = 1 − r².

    Raises:
        NotInClaimedSphere, RadiusBelowBound
    """
    backend = qmap.backend
    c = scalar_multiple_of_identity(qmap.matrices[-1], backend)
    if c is None or backend.sign(c) <= 0 or not backend.eq(c * c, backend.one() - radius_sq):
        raise NotInClaimedSphere(
            f"last component is not √(1 − r²)·I for r² = {backend.format(radius_sq)}"
        )
    if backend.sign(radius_sq - backend.rational(1, 2)) < 0:
        raise RadiusBelowBound(f"r² = {backend.format(radius_sq)} < 1/2 for a proper biharmonic map")
    return c


def hypersphere_analysis(qmap: QuadraticSphericalMap, claimed_radius_sq) -> HypersphereReport:
    """Analyse a proper biharmonic map whose last component is √(1 − r²).

    The caller supplies the alignment: A_{n+1} must already be √(1 − r²)·I.

    Raises:
        NotProperBiharmonic: the map is Harmonic or Neither
        NotInClaimedSphere: A_{n+1} is not √(1 − r²)·I with positive constant
        RadiusBelowBound: containment holds with r² < 1/2
    """
    backend = qmap.backend
    radius_sq = backend.coerce(claimed_radius_sq)
    verdict = classify_by_criterion(qmap).verdict
    if verdict is not Verdict.PROPER_BIHARMONIC:
        raise NotProperBiharmonic(f"map is {verdict.value}, not ProperBiharmonic")
    c = _claimed_last_component(qmap, radius_sq)
    half = backend.rational(1, 2)
    psi_traceless = all(backend.is_zero(t) for t in qmap.traces[:-1])

    if backend.eq(radius_sq, half):
        return HypersphereReport(HypersphereCase.CRITICAL, radius_sq, c, psi_traceless)

    m1 = qmap.m + 1
    lap = laplacian_f(qmap)
    # (Π₁): ⟨Δ₀F, y⟩ = −(m+1)
    plane = scalar_multiple_of_identity(_combination(qmap, lap), backend)
    if plane is None or not backend.eq(plane, backend.coerce(-m1)):
        raise NotInClaimedSphere("image is not in the hyperplane ⟨Δ₀F, y⟩ = −(m+1)")
    t0 = backend.rational(-1, 2 * m1)
    center = tuple(x * t0 for x in lap)
    if not backend.eq(center[-1], c):
        raise NotInClaimedSphere("center t₀Δ₀F does not lie in the plane y^{n+1} = √(1 − r²)")

    witness = [x * c for x in lap]
    witness[-1] = witness[-1] + m1
    if not backend.is_zero_array(_combination(qmap, witness)):
        raise NotInClaimedSphere("Σ w_k A_k ≠ 0 for the non-fullness witness")

    # ψ lives in the orthogonal complement of Δ₀F inside the first n slots
    rest = _residual_traces(qmap, backend)
    return HypersphereReport(
        case=HypersphereCase.LARGER,
        radius_sq=radius_sq,
        last_component=c,
        psi_harmonic=rest,
        small_radius_sq=half,
        center=center,
        nonfull_witness=tuple(witness),
    )


def _residual_traces(qmap: QuadraticSphericalMap, backend: ScalarBackend) -> bool:
    """Harmonicity of ψ inside S^{n−2}(1/√2): components orthogonal to the
    (Δ₀F, e_{n+1}) plane are traceless."""
    lap = laplacian_f(qmap)
    head = lap[:-1]
    head_sq = norm_sq(head, backend)
    traces = qmap.traces[:-1]
    if backend.is_zero(head_sq):
        return all(backend.is_zero(t) for t in traces)
    # remove the component of the trace vector along Δ₀F's first n entries
    coef = sum((t * h for t, h in zip(traces, head)), backend.zero()) * backend.inv(head_sq)
    return all(backend.is_zero(t - h * coef) for t, h in zip(traces, head))
