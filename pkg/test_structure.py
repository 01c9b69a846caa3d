from fractions import Fraction

import numpy as np
import pytest

from src.catalog import get, lift_small, pad, random_instance
from src.errors import NotInClaimedSphere, NotProperBiharmonic
from src.quadmap import QuadraticSphericalMap, classify_by_criterion, laplacian_f, transform
from src.quadmap.linalg import plane_rotation
from src.scalar import EXACT, ScalarBackend, Surd
from src.state.enums import Scramble, Verdict
from src.structure import (
    HypersphereCase,
    factorize,
    householder_reflection,
    hypersphere_analysis,
    laplacian_norm_check,
    locate_hypersphere,
    verify_trace_identity,
)

R2 = Surd.sqrt2()
LIFTED_TOTH = ["lift(hopf)", "lift(phi4)", "lift(phi5)", "lift(phi6)", "lift(phi7)", "lift(phi8)"]


def tilted_lift_of_hopf():
    """lift(hopf) padded by one zero slot, with I/√2 rotated out of the last slot."""
    padded = pad(get("lift(hopf)").map, 1)
    rotation = plane_rotation(5, 3, 4, Fraction(3, 5), Fraction(4, 5), EXACT)
    return transform(padded, v=rotation, name="tilted")


# ── trace identity and norm ─────────────────────────────────────
def test_trace_identity(hopf_map, f_half):
    assert verify_trace_identity(hopf_map) == 0
    assert verify_trace_identity(f_half) == 0


@pytest.mark.parametrize("name, expected", [
    ("F_lambda(0)", 128),
    ("lift(hopf)", 32),
    ("lift(veronese)", 18),
])
def test_laplacian_norm(name, expected):
    certificate = laplacian_norm_check(get(name).map)
    assert certificate.holds
    assert certificate.laplacian_norm_sq == expected


def test_laplacian_norm_needs_proper_biharmonic(hopf_map, f_half):
    with pytest.raises(NotProperBiharmonic):
        laplacian_norm_check(hopf_map)
    with pytest.raises(NotProperBiharmonic):
        laplacian_norm_check(f_half)


# ── hyperspheres ────────────────────────────────────────────────
def test_locate_hypersphere(f0, f_half, hopf_map):
    assert locate_hypersphere(hopf_map) is None
    half = locate_hypersphere(f_half)
    assert half.affine_offset == -12
    assert half.radius_sq == Fraction(1, 4)
    zero = locate_hypersphere(f0)
    assert zero.radius_sq == Fraction(1, 2)
    assert zero.center == (Fraction(1, 2), 0, 0, 0, 0, Fraction(1, 2))


def test_embed_radius_is_recovered():
    location = locate_hypersphere(get("embed(hopf,3/5)").map)
    assert location.radius_sq == Fraction(9, 25)


def test_critical_hypersphere(lift_hopf):
    report = hypersphere_analysis(lift_hopf, Fraction(1, 2))
    assert report.case is HypersphereCase.CRITICAL
    assert report.last_component == R2 / 2
    assert report.psi_harmonic
    assert report.full


def test_larger_hypersphere_is_not_full():
    qmap = tilted_lift_of_hopf()
    assert classify_by_criterion(qmap).verdict is Verdict.PROPER_BIHARMONIC
    report = hypersphere_analysis(qmap, Fraction(17, 25))
    assert report.case is HypersphereCase.LARGER
    assert report.last_component == 2 * R2 / 5
    assert report.small_radius_sq == Fraction(1, 2)
    assert report.psi_harmonic
    assert not report.full
    assert report.nonfull_witness[-1] == Fraction(36, 25)
    assert locate_hypersphere(qmap).radius_sq == Fraction(1, 2)


def test_hypersphere_claims_are_checked(lift_hopf, hopf_map):
    with pytest.raises(NotInClaimedSphere):
        hypersphere_analysis(lift_hopf, Fraction(1, 4))
    with pytest.raises(NotProperBiharmonic):
        hypersphere_analysis(hopf_map, Fraction(1, 2))


# ── factorization ───────────────────────────────────────────────
def test_householder_reflection():
    h = householder_reflection([Surd(3), Surd(4)], Surd(5), EXACT)
    assert EXACT.arrays_equal(h @ EXACT.array([3, 4]), EXACT.array([0, -5]))
    assert EXACT.arrays_equal(h @ h, EXACT.identity(2))
    assert EXACT.arrays_equal(h, h.T)


def test_householder_of_aligned_vector_is_identity():
    h = householder_reflection([Surd(0), Surd(-3)], Surd(3), EXACT)
    assert EXACT.arrays_equal(h, EXACT.identity(2))


def test_factorize_quaternion_map(f0):
    result = factorize(f0)
    assert result.radius_sq == Fraction(1, 2)
    assert result.last_component_constant == R2 / 2
    assert result.psi_harmonic
    assert result.psi_energy == 4
    assert result.psi_energy_consistent
    assert len(result.psi_matrices) == 5

    relifted = lift_small(result.psi_matrices, EXACT)
    assert relifted.same_as(result.rotated)
    assert transform(relifted, v=result.rotation).same_as(f0)


def test_reflection_sign_convention(f0):
    # Δ₀F lands on the negative last axis; the rotated last matrix and the
    # hypersphere center then both sit on the positive side.
    result = factorize(f0)
    aligned = result.rotation @ np.array(laplacian_f(f0), dtype=object)
    assert EXACT.arrays_equal(aligned, EXACT.array([0, 0, 0, 0, 0, R2 * -8]))
    assert result.last_component_constant == R2 / 2
    center = locate_hypersphere(result.rotated).center
    assert EXACT.arrays_equal(EXACT.array(center), EXACT.array([0, 0, 0, 0, 0, R2 / 2]))


def test_factorize_recovers_scaled_veronese(lift_veronese, veronese_map):
    result = factorize(lift_veronese)
    assert result.radius_sq == Fraction(1, 2)
    for psi, v in zip(result.psi_matrices, veronese_map.matrices):
        assert EXACT.arrays_equal(psi, EXACT.convert(v * (R2 / 2)))


@pytest.mark.parametrize("name", LIFTED_TOTH + ["lift(veronese)"])
def test_lifted_maps_factor_through_small_sphere(name):
    qmap = get(name).map
    assert classify_by_criterion(qmap).verdict is Verdict.PROPER_BIHARMONIC
    result = factorize(qmap)
    assert result.radius_sq == Fraction(1, 2)
    assert result.psi_harmonic
    assert transform(lift_small(result.psi_matrices, EXACT), v=result.rotation).same_as(qmap)


def assert_factors_through_small_sphere(qmap):
    result = factorize(qmap)
    assert result.radius_sq == Fraction(1, 2)
    assert result.psi_harmonic
    psi = QuadraticSphericalMap.from_matrices([a * R2 for a in result.psi_matrices], EXACT)
    assert classify_by_criterion(psi).verdict is Verdict.HARMONIC
    assert transform(lift_small(result.psi_matrices, EXACT), v=result.rotation).same_as(qmap)


@pytest.mark.parametrize("seed", range(21))
def test_scrambled_lifts_factor_through_small_sphere(seed):
    bases = LIFTED_TOTH + ["lift(veronese)"]
    qmap = random_instance(seed, bases[seed % len(bases)], Scramble.BOTH)
    assert_factors_through_small_sphere(qmap)


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(5))
def test_scrambled_quaternion_map_factors_through_small_sphere(seed):
    assert_factors_through_small_sphere(random_instance(seed, "F_lambda(0)", Scramble.BOTH))


def test_existence_range_of_lifted_toth_maps():
    assert sorted(get(name).map.n for name in LIFTED_TOTH) == [3, 5, 6, 7, 8, 9]
    assert get("lift(veronese)").map.n == 5


def test_factorize_rejects_other_verdicts(hopf_map, f_half):
    with pytest.raises(NotProperBiharmonic):
        factorize(hopf_map)
    with pytest.raises(NotProperBiharmonic):
        factorize(f_half)


def test_factorize_in_float_mode():
    backend = ScalarBackend.floating(1e-9)
    result = factorize(get("F_lambda(0)", backend).map)
    assert result.radius_sq == pytest.approx(0.5)
    assert result.psi_harmonic
    rotation = np.asarray(result.rotation, dtype=float)
    assert np.allclose(rotation @ rotation.T, np.eye(6))
