from dataclasses import replace
from fractions import Fraction

import numpy as np
import pytest

from src.catalog import f_lambda, get, random_instance, scramble
from src.config.catalog_configs import ALL_ENTRIES
from src.errors import ConditionViolated, ConstantMap, NotOrthogonal, NotSpherical, PathDisagreement
from src.poly import monomial
from src.quadmap import (
    QuadraticSphericalMap,
    bitension_field,
    check_spherical_polynomial,
    classify,
    classify_by_criterion,
    classify_by_direct,
    closed_form_consistency,
    eigenvalue_bound_check,
    energy_density,
    gray_toth_relations,
    gray_toth_vectors,
    harmonicity_tests,
    homogenized_bitension,
    laplacian_f,
    reconcile,
    s_matrix,
    sextic_diagonal_check,
    symmetrize,
    tension_field,
    trace_identity_residual,
    transform,
)
from src.quadmap.linalg import norm_sq, plane_rotation
from src.scalar import EXACT, ScalarBackend
from src.state.enums import ClassifyPath, Scramble, Verdict

SMALL_MAPS = [
    "complex_squaring", "hopf", "phi4", "phi5", "phi6", "phi7", "phi8", "veronese",
    "lift(hopf)", "lift(phi5)", "lift(veronese)", "embed(hopf,3/5)",
]


def perturbed_hopf_matrices(delta=Fraction(1, 100)):
    matrices = [np.array(a, dtype=object) for a in get("hopf").map.matrices]
    matrices[0][0, 0] = matrices[0][0, 0] + delta
    return matrices


# ── construction and sphericity ─────────────────────────────────
def test_hopf_is_spherical(hopf_map):
    assert (hopf_map.m, hopf_map.n) == (3, 2)
    assert check_spherical_polynomial(hopf_map).spherical
    assert gray_toth_relations(hopf_map.matrices, EXACT).holds


def test_perturbation_names_the_offending_monomial():
    matrices = perturbed_hopf_matrices()
    certificate = check_spherical_polynomial(matrices, EXACT)
    assert not certificate.spherical
    assert certificate.offending == monomial(4, {0: 4})
    assert "x1^4" in certificate.describe()
    with pytest.raises(NotSpherical) as info:
        QuadraticSphericalMap.from_matrices(matrices)
    assert info.value.monomial == monomial(4, {0: 4})


def test_constant_map_is_rejected():
    with pytest.raises(ConstantMap):
        QuadraticSphericalMap.from_matrices([EXACT.identity(3)])


def test_symmetrize_recovers_hopf(hopf_map):
    raw = [np.array(a, dtype=object) for a in hopf_map.matrices]
    raw[1][0, 2], raw[1][2, 0] = raw[1][0, 2] * 2, raw[1][2, 0] * 0
    assert symmetrize(raw).same_as(hopf_map)


def test_gray_toth_vectors_raise_on_candidate():
    report = gray_toth_relations(perturbed_hopf_matrices(), EXACT, stop_at_first=True)
    assert not report.holds
    assert report.first_failure.relation == 1
    assert report.first_failure.indices == (1,)


@pytest.mark.parametrize("seed", range(50))
def test_gray_toth_agrees_with_polynomial_certificate(seed):
    base = SMALL_MAPS[seed % len(SMALL_MAPS)]
    qmap = random_instance(seed, base)
    assert check_spherical_polynomial(qmap).spherical
    assert gray_toth_relations(qmap.matrices, EXACT).holds
    gray_toth_vectors(qmap)

    rng = np.random.default_rng(seed)
    matrices = [np.array(a, dtype=object) for a in qmap.matrices]
    k = int(rng.integers(len(matrices)))
    i, j = (int(x) for x in rng.integers(qmap.size, size=2))
    delta = EXACT.rational(int(rng.integers(1, 5)), 100)
    matrices[k][i, j] = matrices[k][i, j] + delta
    if i != j:
        matrices[k][j, i] = matrices[k][j, i] + delta
    certificate = check_spherical_polynomial(matrices, EXACT)
    relations = gray_toth_relations(matrices, EXACT)
    assert certificate.spherical == relations.holds
    assert not certificate.spherical


def test_gray_toth_vectors_raise_condition_violated():
    bogus = replace(get("hopf").map, matrices=tuple(perturbed_hopf_matrices()))
    with pytest.raises(ConditionViolated):
        gray_toth_vectors(bogus)


# ── invariants ──────────────────────────────────────────────────
@pytest.mark.parametrize("name", SMALL_MAPS + ["F_lambda(0)", "F_lambda(1/2)"])
def test_trace_identity_on_catalog(name):
    assert trace_identity_residual(get(name).map) == 0


@pytest.mark.parametrize("seed", range(100))
def test_trace_identity_and_harmonicity_tests_on_random_maps(seed):
    qmap = random_instance(seed, SMALL_MAPS[seed % len(SMALL_MAPS)])
    assert trace_identity_residual(qmap) == 0
    assert harmonicity_tests(qmap).consistent
    lowest, ok = eigenvalue_bound_check(qmap)
    assert ok and lowest >= 1 - 1e-9


def test_hopf_invariants(hopf_map):
    s = s_matrix(hopf_map)
    assert s.is_scalar and s.scalar == 3
    assert all(c == 0 for c in laplacian_f(hopf_map))
    assert energy_density(hopf_map).constant == 4
    assert tension_field(hopf_map).is_zero()


def test_quaternion_family_invariants(f0, f_half):
    assert s_matrix(f0).scalar == 3
    assert s_matrix(f_half).scalar == 2
    assert energy_density(f0).constant == 4
    assert energy_density(f_half).constant == 2
    assert norm_sq(laplacian_f(f0), EXACT) == 128
    assert norm_sq(laplacian_f(f_half), EXACT) == 192


def catalog_params(configs):
    """One param per entry; the exact m = 7 runs carry the slow mark."""
    return [
        pytest.param(c.name, id=c.name, marks=[pytest.mark.slow] if c.m >= 7 else [])
        for c in configs
    ]


@pytest.mark.parametrize("name", catalog_params(ALL_ENTRIES))
def test_sextic_coefficients_match_closed_form(name):
    check = sextic_diagonal_check(get(name).map)
    if not check.applicable:
        pytest.skip("S is not diagonal")
    assert check.holds, check.mismatches


def test_sextic_coefficients_on_quaternion_family(f_half):
    assert sextic_diagonal_check(f_half).holds


def test_closed_form_bitension_matches_polynomial():
    for name in ["hopf", "lift(hopf)", "lift(veronese)", "embed(hopf,3/5)"]:
        assert closed_form_consistency(get(name).map) is True


def test_bitension_field_closed_form(f_half, lift_hopf, veronese_map):
    # α = 2, m = 7: −8(2 − 3) = 8, 32(2 − 3)(2 − 5) = 96
    assert bitension_field(f_half).closed_form == (8, 96)
    assert bitension_field(lift_hopf).closed_form == (0, 0)
    assert not bitension_field(f_half).homogenized.is_zero()
    assert bitension_field(veronese_map).closed_form is not None


def test_bitension_vanishes_for_proper_biharmonic(lift_hopf):
    assert homogenized_bitension(lift_hopf).is_zero()
    assert homogenized_bitension(lift_hopf).degree == 6
    assert not tension_field(lift_hopf).is_zero()


# ── classification ──────────────────────────────────────────────
@pytest.mark.parametrize("name", SMALL_MAPS)
def test_both_paths_match_catalog_expectation(name):
    entry = get(name)
    result = classify(entry.map, ClassifyPath.BOTH)
    assert result.verdict is entry.expected
    assert result.path is ClassifyPath.BOTH
    assert result.certified


def test_quaternion_family_verdicts(f0, f_half):
    assert classify(f0).verdict is Verdict.PROPER_BIHARMONIC
    assert classify(f_half).verdict is Verdict.NEITHER
    assert classify(f0).evidence[0] == "e = 4 = (m+1)/2"
    assert classify(f_half).evidence[0] == "e = 2"


HARMONIC_BASES = ["hopf", "phi4", "phi5", "phi6", "phi7", "phi8", "veronese", "complex_squaring"]
PROPER_BASES = [
    "lift(hopf)", "lift(phi4)", "lift(phi5)", "lift(phi6)", "lift(phi7)", "lift(phi8)", "lift(veronese)",
]
NEITHER_BASES = ["embed(hopf,3/5)", "embed(veronese,3/5)", "embed(phi5,4/5)"]


def assert_paths_agree(base, seed, expected):
    qmap = random_instance(seed, base, Scramble.BOTH)
    criterion, direct = classify_by_criterion(qmap), classify_by_direct(qmap)
    assert criterion.verdict is expected, base
    assert direct.verdict is expected, base
    assert reconcile(criterion, direct).verdict is expected


@pytest.mark.parametrize("seed", range(100))
def test_paths_agree_on_random_transforms(seed):
    assert_paths_agree(HARMONIC_BASES[seed % len(HARMONIC_BASES)], seed, Verdict.HARMONIC)
    assert_paths_agree(PROPER_BASES[seed % len(PROPER_BASES)], seed, Verdict.PROPER_BIHARMONIC)
    assert_paths_agree(NEITHER_BASES[seed % len(NEITHER_BASES)], seed, Verdict.NEITHER)


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(100))
def test_paths_agree_on_random_quaternion_transforms(seed):
    assert_paths_agree("F_lambda(0)", seed, Verdict.PROPER_BIHARMONIC)
    assert_paths_agree("F_lambda(1/2)", seed, Verdict.NEITHER)


def test_reconcile_refuses_disagreement(hopf_map):
    criterion = classify_by_criterion(hopf_map)
    forged = replace(classify_by_direct(hopf_map), verdict=Verdict.NEITHER)
    with pytest.raises(PathDisagreement):
        reconcile(criterion, forged)


def test_float_backend_is_non_certified():
    backend = ScalarBackend.floating(1e-9)
    rng = np.random.default_rng(7)
    for lam in rng.uniform(0.05, 0.95, size=10):
        result = classify(f_lambda(float(lam), backend))
        assert result.verdict is Verdict.NEITHER
        assert not result.certified
        assert "non-certified (float backend)" in result.evidence


# ── transforms ──────────────────────────────────────────────────
def test_transform_requires_orthogonal(hopf_map):
    bad = EXACT.identity(3)
    bad[0, 0] = EXACT.coerce(2)
    with pytest.raises(NotOrthogonal):
        transform(hopf_map, v=bad)


def test_transform_by_rotation_keeps_invariants(hopf_map):
    rotation = plane_rotation(4, 0, 3, Fraction(3, 5), Fraction(4, 5), EXACT)
    moved = transform(hopf_map, u=rotation)
    assert not moved.same_as(hopf_map)
    assert s_matrix(moved).scalar == 3
    assert classify_by_criterion(moved).verdict is Verdict.HARMONIC


def test_scramble_is_deterministic(hopf_map):
    a = scramble(hopf_map, 3, Scramble.DOMAIN)
    b = scramble(hopf_map, 3, Scramble.DOMAIN)
    assert a.same_as(b)
    assert a.name == "random(3,hopf,domain)"


def test_float_image_of_map(hopf_map):
    stack = hopf_map.float_stack()
    assert stack.shape == (3, 4, 4)
    assert np.allclose(np.einsum("kij,kjl->il", stack, stack), 3 * np.eye(4))
