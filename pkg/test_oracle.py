import numpy as np
import pytest

from src.catalog import get
from src.config.catalog_configs import ALL_ENTRIES
from src.errors import NotOnSphere
from src.oracle import (
    SamplePlan,
    energy_spot_check,
    fd_energy,
    fd_tension,
    run_oracle,
    sample_points,
    spot_check_bitension,
    symbolic_tension,
    tension_check,
)
from src.oracle import fd as fd_module
from src.quadmap import tension_field

ORACLE_MAPS = [
    pytest.param(c.name, id=c.name, marks=[pytest.mark.slow] if c.m >= 7 else [])
    for c in ALL_ENTRIES
]


def test_sample_points_are_unit_and_seeded():
    plan = SamplePlan(count=20, seed=4)
    points = sample_points(plan, 5)
    assert points.shape == (20, 5)
    assert np.allclose(np.linalg.norm(points, axis=1), 1.0)
    assert np.array_equal(points, sample_points(plan, 5))


def test_plan_validation():
    with pytest.raises(ValueError):
        SamplePlan(count=0)
    with pytest.raises(ValueError):
        SamplePlan(step=0.5)
    assert SamplePlan.from_settings().count == 50


def test_off_sphere_point_is_rejected(hopf_map):
    with pytest.raises(NotOnSphere):
        fd_tension(hopf_map, np.array([1.0, 1.0, 0.0, 0.0]))


def test_harmonic_map_has_no_tension(hopf_map):
    p = sample_points(SamplePlan(count=1, seed=1), 4)[0]
    result = fd_tension(hopf_map, p)
    assert np.linalg.norm(result.projected) < 1e-5
    assert result.normal_component == pytest.approx(-8.0, rel=1e-6)


def test_tension_is_tangent(f_half):
    p = sample_points(SamplePlan(count=1, seed=2), 8)[0]
    result = fd_tension(f_half, p)
    assert abs(result.projected @ result.value) < 1e-8
    # S = 2I, so |dφ|² = 4
    assert result.normal_component == pytest.approx(-4.0, rel=1e-6)


@pytest.mark.parametrize("name", ORACLE_MAPS)
def test_fd_tension_matches_symbolic(name):
    check = tension_check(get(name).map, SamplePlan(count=50, seed=0))
    assert check.passed
    assert check.max_relative_error <= 1e-5
    assert check.max_tangency_error <= 1e-5


def test_halving_the_step_quarters_the_error(f_half):
    coarse = tension_check(f_half, SamplePlan(count=10, seed=3, step=4e-3, tolerance=1.0))
    fine = tension_check(f_half, SamplePlan(count=10, seed=3, step=2e-3, tolerance=1.0))
    ratio = coarse.max_relative_error / fine.max_relative_error
    assert 3.5 < ratio < 4.5


def test_bitension_closed_form(lift_hopf, f_half):
    check = spot_check_bitension(lift_hopf, SamplePlan(count=50))
    assert check.passed
    assert check.max_norm < 1e-9
    neither = spot_check_bitension(f_half, SamplePlan(count=50))
    assert neither.passed
    assert neither.max_closed_form_discrepancy <= 1e-9
    assert neither.max_norm > 1.0


def test_energy_density_by_finite_differences(veronese_map):
    check = energy_spot_check(veronese_map, SamplePlan(count=20))
    assert check.passed
    p = np.array([1.0, 0.0, 0.0])
    # e = m + 1 = 3 for a harmonic map, so |dφ|² = 6
    assert fd_energy(veronese_map.float_stack(), p, 1e-4) == pytest.approx(6.0, rel=1e-6)


def test_symbolic_tension_vanishes_for_harmonic_maps(hopf_map):
    values = symbolic_tension(hopf_map)(sample_points(SamplePlan(count=5), 4))
    assert np.allclose(values, 0.0)


def test_run_oracle(f0):
    report = run_oracle(f0, SamplePlan(count=20, seed=9))
    assert report.passed
    assert report.samples == 20 and report.seed == 9
    assert report.model_dump()["tension"]["passed"] is True


def test_corrupted_symbolic_tension_is_caught(monkeypatch, lift_hopf):
    monkeypatch.setattr(fd_module, "tension_field", lambda qmap: tension_field(qmap).scale(2))
    report = run_oracle(lift_hopf, SamplePlan(count=10))
    assert not report.tension.passed
    assert not report.passed
