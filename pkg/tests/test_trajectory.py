"""
Tests for trajectory integration, drift decomposition and the Poincare shift
"""

import numpy as np
import pytest

from config import IsolatedSettings, use_settings
from dynamics import (
    decompose_drift,
    drift_velocity,
    integrate_trajectory,
    model_energy,
    orbit_start,
    period,
    poincare_shift,
    potential_slope,
)
from schemas import GeneralSymbol, ModelSymbol, PhasePoint
from utils.errors import SpanTooShort, StepTooLarge

STEPS = 2000


def _periods(sym, k, n, steps=STEPS, scheme=None):
    T = period(sym, k)
    return T, integrate_trajectory(sym, orbit_start(sym, k), n * T, T / steps, scheme=scheme)


@pytest.mark.parametrize("k", [-0.5, 0.3, 0.9, 2.0, 10.0])
@pytest.mark.parametrize("nu", [2, 3])
def test_energy_closure_and_drift(nu, k):
    model = ModelSymbol(nu=nu)
    T, traj = _periods(model, k, 5)
    assert traj.energy_drift <= 1e-8
    z0, z1 = traj.points[0], traj.points[STEPS]
    assert max(abs(z1[0] - z0[0]), abs(z1[2] - z0[2])) <= 1e-5
    v_est, residual = decompose_drift(traj, T)
    assert v_est == pytest.approx(drift_velocity(model, k), abs=1e-4)
    assert residual >= 0


def test_momentum_is_conserved(cubic_odd):
    _, traj = _periods(cubic_odd, 0.4, 3)
    assert np.all(traj.xi2 == 0.4)
    assert traj.t[-1] >= 3 * period(cubic_odd, 0.4) * (1 - 1e-12)


def test_samples_are_phase_points(quadratic):
    _, traj = _periods(quadratic, 0.3, 3, steps=200)
    t0, p0 = traj.samples[0]
    assert t0 == 0.0
    assert p0 == orbit_start(quadratic, 0.3)


def test_verlet_is_less_accurate(quadratic):
    _, fine = _periods(quadratic, 0.3, 3)
    _, coarse = _periods(quadratic, 0.3, 3, scheme="verlet")
    assert coarse.energy_drift <= 1e-4
    assert fine.energy_drift < coarse.energy_drift


def test_short_span_is_refused(quadratic):
    T, traj = _periods(quadratic, 0.3, 2, steps=200)
    with pytest.raises(SpanTooShort):
        decompose_drift(traj, T)


def test_energy_tolerance_aborts(quadratic):
    use_settings(IsolatedSettings(integrator={"energy_tolerance": 1e-14}))
    with pytest.raises(StepTooLarge) as exc:
        _periods(quadratic, 0.3, 1, steps=50, scheme="verlet")
    assert exc.value.details["drift"] > 1e-14


def test_invalid_step(quadratic):
    with pytest.raises(ValueError):
        integrate_trajectory(quadratic, orbit_start(quadratic, 0.3), 1.0, 0.0)


def test_poincare_shift_near_kstar(quadratic, quadratic_crit):
    k = quadratic_crit.kstar
    assert poincare_shift(quadratic, k) == pytest.approx(0.0, abs=1e-6)
    h = 1e-3
    slope = (poincare_shift(quadratic, k + h) - poincare_shift(quadratic, k - h)) / (2.0 * h)
    assert slope == pytest.approx(2.0 * quadratic_crit.omega_star, rel=1e-3)


def test_poincare_shift_only_near_kstar(quadratic, quadratic_crit):
    with pytest.raises(ValueError):
        poincare_shift(quadratic, quadratic_crit.kstar + 0.15)
    with pytest.raises(ValueError):
        poincare_shift(quadratic, 0.3, kstar=quadratic_crit.kstar)


def test_general_symbol_matches_pilot(quadratic):
    general = GeneralSymbol(base=quadratic)
    T = period(quadratic, 0.3)
    start = orbit_start(quadratic, 0.3)
    pilot = integrate_trajectory(quadratic, start, T, T / STEPS)
    implicit = integrate_trajectory(general, start, T, T / STEPS)
    assert implicit.energy_drift <= 1e-4
    np.testing.assert_allclose(implicit.points[-1], pilot.points[-1], atol=1e-3)


def test_general_symbol_checks(quadratic):
    general = GeneralSymbol(base=quadratic, sigma=lambda x1, x2: 1.0 + 0.1 * x1 * x1)
    assert general.check_positive((-2.0, 2.0, -1.0, 1.0))
    assert general.is_normalized([-1.0, 0.0, 1.0])
    shifted = GeneralSymbol(base=quadratic, phi=lambda x1, x2: 1.0 + 0.1 * x2)
    assert not shifted.is_normalized([1.0])
    assert PhasePoint.from_array(np.array([1.0, 2.0, 3.0, 4.0])).xi2 == 4.0


@pytest.mark.parametrize("model", ["quadratic", "cubic_odd"])
def test_potential_slope_matches_energy_gradient(model, request):
    sym = request.getfixturevalue(model)
    x1 = np.linspace(-1.7, 1.9, 9)
    h = 1e-6

    def rows(x):
        return np.column_stack([x, np.zeros_like(x), np.zeros_like(x), np.full_like(x, 0.4)])

    numeric = (model_energy(sym, rows(x1 + h)) - model_energy(sym, rows(x1 - h))) / (2.0 * h)
    np.testing.assert_allclose(potential_slope(sym, x1, 0.4), numeric, atol=1e-6)


def test_potential_slope_vanishes_at_well_bottom(quadratic):
    # rho(1)/2 = 0.5 = xi2
    np.testing.assert_allclose(potential_slope(quadratic, np.array([-1.0, 1.0]), 0.5), 0.0, atol=1e-15)
