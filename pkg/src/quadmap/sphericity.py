"""Polynomial sphericity certificate: Σ (XᵗA_iX)² − |x|⁴ ≡ 0."""

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..poly import HomoPoly, Monomial, format_monomial, quad_from_matrix
from ..scalar import ScalarBackend


@dataclass(frozen=True)
class SphericityCertificate:
    spherical: bool
    remainder: HomoPoly
    offending: Optional[Monomial] = None

    def describe(self) -> str:
        if self.spherical:
            return "|F|² − |x|⁴ vanishes identically"
        coeff = self.remainder.coefficient_of(self.offending)
        return (
            f"|F|² − |x|⁴ has nonzero coefficient {self.remainder.backend.format(coeff)} "
            f"on {format_monomial(self.offending)}"
        )


def spherical_remainder(matrices: Sequence[np.ndarray], backend: ScalarBackend) -> HomoPoly:
    nvars = matrices[0].shape[0]
    total = HomoPoly.zero(nvars, 4, backend)
    for a in matrices:
        form = quad_from_matrix(a, backend)
        total = total + form * form
    r2 = HomoPoly.norm_sq(nvars, backend)
    return total - r2 * r2


def check_spherical_polynomial(qmap, backend: Optional[ScalarBackend] = None) -> SphericityCertificate:
    """Certify sphericity of a map, or of a bare sequence of symmetric matrices.

    A failure is a negative certificate carrying the remainder, never an
    exception.
    """
    if hasattr(qmap, "matrices"):
        matrices, backend = qmap.matrices, qmap.backend
    else:
        matrices = list(qmap)
    remainder = spherical_remainder(matrices, backend)
    offenders = remainder.nonzero_monomials()
    if not offenders:
        return SphericityCertificate(True, remainder)
    return SphericityCertificate(False, remainder, offenders[0])
