"""
Factorization of a proper biharmonic map through S^{n−1}(1/√2).

A Householder reflection of the codomain aligns Δ₀F with −e_{n+1}. Since
Δ₀F = −2(tr A_i), that puts the positive trace on the last slot: the last
rotated matrix is +I/√2 and the hypersphere center t₀Δ₀F has positive last
component. The remaining n matrices form a harmonic map ψ into the sphere of
radius 1/√2.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from ..errors import ExactRotationUnavailable, NotProperBiharmonic
from ..quadmap import Classification, QuadraticSphericalMap, classify_by_criterion, laplacian_f, transform
from ..quadmap.linalg import frozen, norm_sq, scalar_multiple_of_identity
from ..scalar import Scalar, ScalarBackend
from ..state.enums import Verdict


@dataclass(frozen=True)
class FactorizationResult:
    rotation: np.ndarray
    rotated: QuadraticSphericalMap
    psi_matrices: Tuple[np.ndarray, ...]
    radius_sq: Scalar
    last_component_constant: Scalar
    psi_harmonic: bool
    psi_energy: Optional[Scalar]

    @property
    def psi_energy_consistent(self) -> bool:
        """e(ψ) = r²(m+1)."""
        if self.psi_energy is None:
            return False
        backend = self.rotated.backend
        return backend.eq(self.psi_energy, self.radius_sq * (self.rotated.m + 1))


def householder_reflection(vector: Sequence[Scalar], length: Scalar, backend: ScalarBackend) -> np.ndarray:
    """H = I − 2vvᵗ/|v|² with v = ā + |ā|e_last, so Hā = −|ā|e_last.

    With ā = Δ₀F this is the sign that makes the reflected last matrix a
    positive multiple of I; v = ā − |ā|e_last would give −I/√2 instead.

    `length` is |ā|, supplied by the caller so the reflection stays exact.
    """
    size = len(vector)
    v = [backend.coerce(x) for x in vector]
    v[-1] = v[-1] + length
    v_sq = norm_sq(v, backend)
    h = backend.identity(size)
    if backend.is_zero(v_sq):
        return h
    scale = backend.inv(v_sq) * 2
    for i in range(size):
        for j in range(size):
            h[i, j] = h[i, j] - v[i] * v[j] * scale
    return h


def factorize(
    qmap: QuadraticSphericalMap,
    classification: Optional[Classification] = None,
) -> FactorizationResult:
    """Split a proper biharmonic map into (ψ, 1/√2).

    Raises:
        NotProperBiharmonic: the map is Harmonic or Neither
        ExactRotationUnavailable: |Δ₀F| or the aligned last matrix is not as expected
    """
    backend = qmap.backend
    if classification is None:
        classification = classify_by_criterion(qmap)
    if classification.verdict is not Verdict.PROPER_BIHARMONIC:
        raise NotProperBiharmonic(f"map is {classification.verdict.value}, not ProperBiharmonic")

    lap = laplacian_f(qmap)
    length = backend.sqrt(norm_sq(lap, backend))
    if length is None:
        raise ExactRotationUnavailable("|Δ₀F| is not in the field")

    rotation = householder_reflection(lap, length, backend)
    rotated = transform(qmap, v=rotation)
    c = scalar_multiple_of_identity(rotated.matrices[-1], backend)
    if c is None or backend.sign(c) <= 0:
        raise ExactRotationUnavailable("rotated last matrix is not a positive multiple of I")

    radius_sq = backend.one() - c * c
    psi = rotated.matrices[:-1]
    psi_harmonic = all(backend.is_zero(t) for t in rotated.traces[:-1])

    s_psi = backend.zeros((qmap.size, qmap.size))
    for a in psi:
        s_psi = s_psi + a @ a
    beta = scalar_multiple_of_identity(backend.convert(s_psi), backend)
    # |dψ|² = 4XᵗS_ψX − 4r² on S^m
    psi_energy = (beta - radius_sq) * 2 if beta is not None else None

    return FactorizationResult(
        rotation=frozen(rotation),
        rotated=rotated,
        psi_matrices=tuple(psi),
        radius_sq=radius_sq,
        last_component_constant=c,
        psi_harmonic=psi_harmonic,
        psi_energy=psi_energy,
    )
