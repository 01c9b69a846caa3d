"""Isometries of domain and codomain, plus Toth's positive-definite deformation."""

from typing import Optional

import numpy as np

from ..errors import DimensionMismatch, NotPositiveDefinite
from .linalg import check_orthogonal, is_positive_definite
from .spherical_map import QuadraticSphericalMap


def transform(
    qmap: QuadraticSphericalMap,
    u: Optional[np.ndarray] = None,
    v: Optional[np.ndarray] = None,
    b: Optional[np.ndarray] = None,
    name: Optional[str] = None,
) -> QuadraticSphericalMap:
    """A'_k = Σ_l M_kl · UᵗA_lU with M = V (or V·B); sphericity re-certified.

    Raises:
        NotOrthogonal: U or V fails UᵗU = I
        NotSpherical: B destroyed sphericity
    """
    backend = qmap.backend
    if u is not None:
        u = backend.convert(u)
        if u.shape != (qmap.size, qmap.size):
            raise DimensionMismatch(f"U has shape {u.shape}, expected {(qmap.size, qmap.size)}")
        check_orthogonal(u, backend, "U")
    if v is not None:
        v = backend.convert(v)
        if v.shape != (qmap.n + 1, qmap.n + 1):
            raise DimensionMismatch(f"V has shape {v.shape}, expected {(qmap.n + 1, qmap.n + 1)}")
        check_orthogonal(v, backend, "V")
    mix = v if v is not None else backend.identity(qmap.n + 1)
    if b is not None:
        b = backend.convert(b)
        if b.shape != (qmap.n + 1, qmap.n + 1) or not is_positive_definite(b, backend):
            raise NotPositiveDefinite("B must be symmetric positive-definite of codomain size")
        mix = mix @ b

    pulled = [a if u is None else u.T @ a @ u for a in qmap.matrices]
    out = []
    for k in range(qmap.n + 1):
        acc = backend.zeros((qmap.size, qmap.size))
        for l, a in enumerate(pulled):
            if not backend.is_zero(mix[k, l]):
                acc = acc + a * mix[k, l]
        out.append(backend.convert(acc))
    return QuadraticSphericalMap.from_matrices(out, backend, name or qmap.name)
