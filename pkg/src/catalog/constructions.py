"""Maps built from other maps: small-sphere embeddings, lifts and padding."""

from typing import Optional, Sequence

import numpy as np

from ..errors import InexactRadius, InnerEnergyNotConstant, InnerNotHarmonic, RadiusOutOfRange
from ..quadmap import QuadraticSphericalMap, laplacian_f, s_matrix, transform
from ..scalar import ScalarBackend


def _check_inner(inner: QuadraticSphericalMap) -> None:
    backend = inner.backend
    if not all(backend.is_zero(c) for c in laplacian_f(inner)):
        raise InnerNotHarmonic(f"{inner.name or 'inner map'} has Δ₀F ≠ 0")
    if not s_matrix(inner).is_scalar:
        raise InnerEnergyNotConstant(f"{inner.name or 'inner map'} has non-scalar S")


def embed(inner: QuadraticSphericalMap, radius, name: Optional[str] = None) -> QuadraticSphericalMap:
    """(r·ψ, √(1−r²)) for a harmonic ψ with constant energy density.

    ProperBiharmonic exactly when r² = 1/2, Neither otherwise.

    Raises:
        InnerNotHarmonic, InnerEnergyNotConstant
        RadiusOutOfRange: r ∉ (0, 1)
        InexactRadius: √(1−r²) is not representable in the backend
    """
    backend = inner.backend
    _check_inner(inner)
    r = backend.coerce(radius)
    if backend.sign(r) <= 0 or backend.sign(r - 1) >= 0:
        raise RadiusOutOfRange(f"r = {backend.format(r)} is outside (0, 1)")
    height = backend.sqrt(backend.one() - r * r)
    if height is None:
        raise InexactRadius(f"√(1 − r²) is not in the field for r = {backend.format(r)}")
    matrices = [backend.convert(a * r) for a in inner.matrices]
    matrices.append(backend.convert(backend.identity(inner.size) * height))
    label = name or f"embed({inner.name},{backend.format(r)})"
    return QuadraticSphericalMap.from_matrices(matrices, backend, label)


def lift(inner: QuadraticSphericalMap, name: Optional[str] = None) -> QuadraticSphericalMap:
    """(ψ/√2, 1/√2); always ProperBiharmonic.

    Raises:
        InnerNotHarmonic, InnerEnergyNotConstant
    """
    backend = inner.backend
    half_root = backend.sqrt(backend.rational(1, 2))
    return embed(inner, half_root, name or f"lift({inner.name})")


def lift_small(
    psi_matrices: Sequence[np.ndarray],
    backend: ScalarBackend,
    name: Optional[str] = None,
) -> QuadraticSphericalMap:
    """Append I/√2 to the matrices of a map already into S^{n−1}(1/√2)."""
    size = psi_matrices[0].shape[0]
    half_root = backend.sqrt(backend.rational(1, 2))
    matrices = [backend.convert(a) for a in psi_matrices]
    matrices.append(backend.convert(backend.identity(size) * half_root))
    return QuadraticSphericalMap.from_matrices(matrices, backend, name)


def pad(
    qmap: QuadraticSphericalMap,
    extra_zero_components: int,
    rotation: Optional[np.ndarray] = None,
    name: Optional[str] = None,
) -> QuadraticSphericalMap:
    """Append zero components, then optionally rotate the enlarged codomain.

    Raises:
        NotOrthogonal: rotation fails VᵗV = I
    """
    if extra_zero_components < 0:
        raise ValueError("extra_zero_components must be nonnegative")
    if extra_zero_components == 0 and rotation is None:
        return qmap
    backend = qmap.backend
    matrices = list(qmap.matrices)
    matrices += [backend.zeros((qmap.size, qmap.size)) for _ in range(extra_zero_components)]
    label = name or f"pad({qmap.name},{extra_zero_components})"
    padded = QuadraticSphericalMap.from_matrices(matrices, backend, label)
    if rotation is None:
        return padded
    return transform(padded, v=rotation, name=label)
