"""Trace identity and the norm of Δ₀F for proper biharmonic maps."""

from dataclasses import dataclass
from typing import Optional

from ..errors import NotProperBiharmonic
from ..quadmap import Classification, QuadraticSphericalMap, classify_by_criterion, laplacian_f, trace_identity_residual
from ..quadmap.linalg import norm_sq
from ..scalar import Scalar
from ..state.enums import Verdict


@dataclass(frozen=True)
class NormCertificate:
    laplacian_norm_sq: Scalar
    expected: Scalar
    holds: bool


def verify_trace_identity(qmap: QuadraticSphericalMap) -> Scalar:
    """8·tr S + |Δ₀F|² − 4(m+1)(m+3); exactly 0 for every spherical map."""
    return trace_identity_residual(qmap)


def laplacian_norm_check(
    qmap: QuadraticSphericalMap,
    classification: Optional[Classification] = None,
) -> NormCertificate:
    """Certify |Δ₀F|² = 2(m+1)².

    Raises:
        NotProperBiharmonic: the map is Harmonic or Neither
    """
    if classification is None:
        classification = classify_by_criterion(qmap)
    if classification.verdict is not Verdict.PROPER_BIHARMONIC:
        raise NotProperBiharmonic(f"map is {classification.verdict.value}, not ProperBiharmonic")
    backend = qmap.backend
    value = norm_sq(laplacian_f(qmap), backend)
    expected = backend.coerce(2 * (qmap.m + 1) ** 2)
    return NormCertificate(value, expected, backend.eq(value, expected))
