"""
Verdicts for quadratic maps.

Two independent routes:
  - criterion: Harmonic iff Δ₀F = 0; ProperBiharmonic iff S = ((m+5)/4)I and
    Δ₀F ≠ 0; otherwise Neither.
  - direct: Harmonic iff the homogenized tension vanishes; biharmonic iff the
    degree-6 homogenized bitension vanishes.
Running both and demanding agreement is the strongest self-check available.
"""

from dataclasses import dataclass, field, replace
from typing import Optional, Tuple

from ..errors import PathDisagreement
from ..scalar import Scalar
from ..state.enums import ClassifyPath, Verdict
from .fields import energy_density, homogenized_bitension, laplacian_f, s_matrix, tension_field
from .linalg import scalar_multiple_of_identity
from .spherical_map import QuadraticSphericalMap


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    path: ClassifyPath
    energy_density: Optional[Scalar]
    s_is_scalar: bool
    s_scalar: Optional[Scalar]
    laplacian: Tuple[Scalar, ...]
    evidence: Tuple[str, ...] = field(default_factory=tuple)
    certified: bool = True

    @property
    def is_biharmonic(self) -> bool:
        return self.verdict in (Verdict.HARMONIC, Verdict.PROPER_BIHARMONIC)


@dataclass(frozen=True)
class HarmonicityTests:
    laplacian_zero: bool
    energy_is_m_plus_1: bool
    s_is_harmonic_scalar: bool

    @property
    def consistent(self) -> bool:
        return self.laplacian_zero == self.energy_is_m_plus_1 == self.s_is_harmonic_scalar


def energy_note(qmap: QuadraticSphericalMap, energy: Optional[Scalar]) -> str:
    backend = qmap.backend
    if energy is None:
        return "e non-constant"
    text = f"e = {backend.format(energy)}"
    if backend.eq(energy, backend.coerce(qmap.m + 1)):
        text += " = m+1"
    elif backend.eq(energy, backend.rational(qmap.m + 1, 2)):
        text += " = (m+1)/2"
    return text


def _base(qmap: QuadraticSphericalMap, path: ClassifyPath):
    s = s_matrix(qmap)
    energy = energy_density(qmap)
    return dict(
        path=path,
        energy_density=energy.constant,
        s_is_scalar=s.is_scalar,
        s_scalar=s.scalar,
        laplacian=laplacian_f(qmap),
        certified=qmap.backend.certified,
    )


def classify_by_criterion(qmap: QuadraticSphericalMap) -> Classification:
    backend = qmap.backend
    base = _base(qmap, ClassifyPath.CRITERION)
    lap = base["laplacian"]
    notes = [energy_note(qmap, base["energy_density"])]
    if all(backend.is_zero(c) for c in lap):
        verdict = Verdict.HARMONIC
        notes.append("Δ₀F = 0")
    else:
        notes.append("Δ₀F ≠ 0")
        target = backend.rational(qmap.m + 5, 4)
        alpha = base["s_scalar"]
        if alpha is not None and backend.eq(alpha, target):
            verdict = Verdict.PROPER_BIHARMONIC
            notes.append(f"S = {backend.format(target)}·I = ((m+5)/4)·I")
        else:
            verdict = Verdict.NEITHER
            notes.append("S ≠ ((m+5)/4)·I")
    if not backend.certified:
        notes.append("non-certified (float backend)")
    return Classification(verdict=verdict, evidence=tuple(notes), **base)


def classify_by_direct(qmap: QuadraticSphericalMap) -> Classification:
    backend = qmap.backend
    base = _base(qmap, ClassifyPath.DIRECT)
    notes = [energy_note(qmap, base["energy_density"])]
    if tension_field(qmap).is_zero():
        verdict = Verdict.HARMONIC
        notes.append("homogenized tension vanishes")
    else:
        notes.append("homogenized tension is nonzero")
        bitension = homogenized_bitension(qmap)
        if bitension.is_zero():
            verdict = Verdict.PROPER_BIHARMONIC
            notes.append("degree-6 homogenized bitension vanishes")
        else:
            verdict = Verdict.NEITHER
            count = sum(len(c.nonzero_monomials()) for c in bitension)
            notes.append(f"degree-6 homogenized bitension has {count} nonzero coefficients")
    if not backend.certified:
        notes.append("non-certified (float backend)")
    return Classification(verdict=verdict, evidence=tuple(notes), **base)


def reconcile(criterion: Classification, direct: Classification) -> Classification:
    """Merge the two routes.

    Raises:
        PathDisagreement: the routes disagree (an internal-consistency failure)
    """
    if criterion.verdict is not direct.verdict:
        raise PathDisagreement(
            f"criterion says {criterion.verdict.value}, direct says {direct.verdict.value}"
        )
    evidence = criterion.evidence + tuple(e for e in direct.evidence if e not in criterion.evidence)
    return replace(criterion, path=ClassifyPath.BOTH, evidence=evidence)


def classify(qmap: QuadraticSphericalMap, path: ClassifyPath = ClassifyPath.BOTH) -> Classification:
    path = ClassifyPath(path)
    if path is ClassifyPath.CRITERION:
        return classify_by_criterion(qmap)
    if path is ClassifyPath.DIRECT:
        return classify_by_direct(qmap)
    return reconcile(classify_by_criterion(qmap), classify_by_direct(qmap))


def harmonicity_tests(qmap: QuadraticSphericalMap) -> HarmonicityTests:
    """Δ₀F = 0, e ≡ m+1 and S = ((m+3)/2)I, evaluated independently."""
    backend = qmap.backend
    energy = energy_density(qmap)
    target_energy = qmap.norm_sq_poly.scale(qmap.m + 1)
    alpha = scalar_multiple_of_identity(qmap.s_entries, backend)
    return HarmonicityTests(
        laplacian_zero=all(backend.is_zero(c) for c in laplacian_f(qmap)),
        energy_is_m_plus_1=energy.polynomial.equals(target_energy),
        s_is_harmonic_scalar=alpha is not None and backend.eq(alpha, backend.rational(qmap.m + 3, 2)),
    )
