"""
Tests for turning points, periods, drifts and actions of the pilot models
"""

import math

import numpy as np
import pytest
from scipy.integrate import quad

from dynamics import (
    action,
    drift_integral,
    drift_velocity,
    eval_hamiltonian,
    orbit,
    orbit_start,
    orbit_table,
    period,
    phase_area,
    turning_points,
)
from schemas import ModelSymbol, OrbitData, PhasePoint, WellType
from utils.errors import DegenerateLevel, EmptyLevel


class TestTurningPoints:
    def test_even_one_well(self, quadratic):
        b1, b2, wells = turning_points(quadratic, 0.5)
        assert wells is WellType.ONE_WELL
        assert b2 == pytest.approx(math.sqrt(3.0))
        assert b1 == pytest.approx(-math.sqrt(3.0))

    def test_even_two_wells(self, quadratic):
        b1, b2, wells = turning_points(quadratic, 2.0)
        assert wells is WellType.TWO_WELLS
        assert (b1, b2) == pytest.approx((math.sqrt(2.0), math.sqrt(6.0)))

    @pytest.mark.parametrize("k, expected", [(-2.0, WellType.EMPTY), (-1.0, WellType.DEGENERATE),
                                             (1.0, WellType.TOUCHING)])
    def test_even_special_levels(self, quadratic, k, expected):
        assert turning_points(quadratic, k)[2] is expected

    def test_odd_one_well(self, cubic_odd):
        b1, b2, wells = turning_points(cubic_odd, 0.5)
        assert wells is WellType.ONE_WELL
        assert b1 == pytest.approx(-(1.5) ** (1.0 / 3.0))
        assert b2 == pytest.approx(4.5 ** (1.0 / 3.0))

    def test_turning_points_lie_on_zero_level(self, quadratic):
        for k in (-0.5, 0.3, 0.9, 3.0):
            b1, b2, _ = turning_points(quadratic, k)
            for b in (b1, b2):
                assert eval_hamiltonian(quadratic, PhasePoint(x1=b, x2=0.0, xi1=0.0, xi2=k)) == \
                    pytest.approx(0.0, abs=1e-12)

    def test_coupling_rescales_lengths(self):
        strong = ModelSymbol(nu=2, mu=16.0)
        b1, b2, _ = turning_points(strong, 0.5)
        assert b2 == pytest.approx(math.sqrt(3.0) / 4.0)


class TestInvariants:
    def test_period_is_action_derivative(self, quadratic):
        step = 1e-4
        for xi2 in (-0.5, 0.3, 0.8, 2.5):
            dS = (action(quadratic, xi2, step) - action(quadratic, xi2, -step)) / (2.0 * step)
            assert dS == pytest.approx(period(quadratic, xi2), rel=1e-5)

    def test_area_matches_direct_quadrature(self, quadratic):
        xi2 = 0.3
        R = math.sqrt(2.0 * (xi2 + 1.0))
        direct, _ = quad(lambda x: 2.0 * math.sqrt(max(1.0 - (xi2 - 0.5 * x * x) ** 2, 0.0)), -R, R,
                         limit=200, epsabs=1e-12)
        assert phase_area(quadratic, xi2) == pytest.approx(direct, rel=1e-7)

    def test_two_well_area_counts_both_wells(self, quadratic):
        assert phase_area(quadratic, 2.0) == pytest.approx(2.0 * action(quadratic, 2.0), rel=1e-12)

    def test_empty_levels(self, quadratic):
        assert phase_area(quadratic, -2.0) == 0.0
        assert phase_area(quadratic, 0.3, tau=-0.6) == 0.0
        with pytest.raises(EmptyLevel):
            action(quadratic, 0.3, tau=-0.6)
        with pytest.raises(EmptyLevel):
            period(quadratic, -2.0)

    def test_touching_level_is_refused(self, quadratic):
        with pytest.raises(DegenerateLevel):
            period(quadratic, 1.0)
        data = orbit(quadratic, 1.0)
        assert data.wells is WellType.TOUCHING and data.T is None

    def test_odd_drift_is_antisymmetric(self, cubic_odd):
        for k in (0.2, 0.5, 0.9):
            assert drift_velocity(cubic_odd, -k) == pytest.approx(-drift_velocity(cubic_odd, k), abs=1e-9)
        assert drift_integral(cubic_odd, 0.0) == 0.0

    def test_even_drift_increases_inside(self, quadratic):
        v = [drift_velocity(quadratic, k) for k in np.linspace(-0.9, 0.9, 13)]
        assert np.all(np.diff(v) > 0)

    def test_drift_near_bottom_of_band(self, quadratic):
        assert -1.1 <= drift_velocity(quadratic, -0.999) <= -0.9

    def test_large_k_asymptotics(self, quadratic):
        k, nu = 200.0, 2.0
        assert period(quadratic, k) == pytest.approx(2.0 * math.pi * (k * nu) ** (1.0 / nu - 1.0), rel=0.05)
        assert drift_velocity(quadratic, k) == pytest.approx(0.5 * (nu - 1.0) / (k * nu), rel=0.05)

    def test_orbit_start_is_right_turning_point(self, quadratic):
        start = orbit_start(quadratic, 0.3)
        assert start.x1 == pytest.approx(turning_points(quadratic, 0.3)[1])
        assert start.xi1 == 0.0 and start.xi2 == 0.3


class TestOrbitTable:
    def test_rows_follow_grid(self, quadratic):
        k_values = [-0.5, 0.0, 0.5, 1.0, 2.0]
        rows = orbit_table(quadratic, k_values, workers=3)
        assert [row.k for row in rows] == k_values
        assert rows == orbit_table(quadratic, k_values, workers=1)
        assert rows[3].T is None
        assert rows[4].wells is WellType.TWO_WELLS

    def test_velocity_filled_from_drift(self):
        data = OrbitData(k=0.1, b1=-1.0, b2=1.0, wells=WellType.ONE_WELL, T=2.0, I=0.5)
        assert data.v == 0.25

    def test_turning_points_must_be_ordered(self):
        with pytest.raises(ValueError):
            OrbitData(k=0.1, b1=1.0, b2=-1.0, wells=WellType.ONE_WELL)
