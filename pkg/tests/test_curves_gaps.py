"""
Tests for eigenvalue curves, spacing laws and gap statistics
"""

import numpy as np
import pytest

from schemas import Parity, ReducedSymbol
from spectrum1d import (
    divided_differences,
    eigenvalue_at,
    eigenvalue_scaling,
    gap_stats,
    lambda_curve,
    level_near,
    locate_kstar_hbar,
    spacing_law,
)


def test_second_difference_exact_on_uneven_grid():
    x = np.array([0.0, 0.1, 0.35, 0.4, 0.9])
    _, d2 = divided_differences(x, 3.0 * x * x - 2.0 * x + 1.0)
    np.testing.assert_allclose(d2, 6.0, rtol=1e-12)


def test_first_difference_exact_on_uniform_grid():
    x = np.linspace(-1.0, 1.0, 9)
    d1, _ = divided_differences(x, 3.0 * x * x - 2.0 * x + 1.0)
    np.testing.assert_allclose(d1, 6.0 * x[1:-1] - 2.0, atol=1e-12)


class TestLambdaCurve:
    @pytest.fixture
    def sym(self, quadratic):
        return ReducedSymbol(model=quadratic, xi2=0.0, hbar=0.2)

    @pytest.fixture
    def level(self, sym, quadratic_crit):
        return level_near(sym.with_xi2(quadratic_crit.kstar))

    def test_level_near_zero(self, sym, quadratic_crit, level):
        assert abs(eigenvalue_at(sym.with_xi2(quadratic_crit.kstar), level)) < 0.2

    def test_curve_is_convex_near_kstar(self, sym, quadratic_crit, level):
        grid = quadratic_crit.kstar + np.linspace(-0.4, 0.4, 17)
        curve = lambda_curve(sym, grid, level, workers=2)
        assert curve.values.shape == (17,) and curve.d2.shape == (15,)
        lowest = int(np.argmin(curve.values))
        assert 0 < lowest < 16
        assert curve.d2[lowest - 1] > 0

    def test_parity_class_of_the_ground_state(self, sym):
        grid = np.linspace(0.3, 0.9, 5)
        full = lambda_curve(sym, grid, 0)
        even = lambda_curve(sym, grid, 0, parity=Parity.EVEN)
        assert even.parity == "even" and full.parity is None
        np.testing.assert_allclose(even.values, full.values, atol=1e-8)

    def test_grid_must_increase(self, sym):
        with pytest.raises(ValueError):
            lambda_curve(sym, [0.5, 0.4, 0.6], 0)

    def test_kstar_hbar_is_stationary(self, sym, quadratic_crit, level):
        k = locate_kstar_hbar(sym, level, (quadratic_crit.kstar - 0.4, quadratic_crit.kstar + 0.4))
        assert abs(k - quadratic_crit.kstar) < 0.4
        centre = eigenvalue_at(sym.with_xi2(k), level)
        assert eigenvalue_at(sym.with_xi2(k - 0.02), level) >= centre
        assert eigenvalue_at(sym.with_xi2(k + 0.02), level) >= centre


@pytest.mark.parametrize("xi2, window", [(0.65, (-0.2, 0.2)), (5.0, (-0.45, 0.2))])
def test_spacing_law(quadratic, xi2, window):
    rows = spacing_law(ReducedSymbol(model=quadratic, xi2=xi2, hbar=0.05), *window)
    assert rows.shape[1] == 3 and len(rows) >= 2
    np.testing.assert_allclose(rows[:, 1] / rows[:, 2], 1.0, atol=0.05)


class TestGapStats:
    def test_bottom_spacing_exponent(self, quadratic):
        template = ReducedSymbol(model=quadratic, xi2=0.0, hbar=0.2)
        report = gap_stats(template, [0.0], [0.2, 0.1, 0.05, 0.025])
        assert report.exponent == pytest.approx(4.0 / 3.0, abs=0.15)
        assert len(report.level_eps) == 4
        assert {z.zone for z in report.zones} == {"bottom", "level"}

    def test_two_wells_are_split_by_parity(self, quadratic):
        template = ReducedSymbol(model=quadratic, xi2=0.0, hbar=0.1)
        report = gap_stats(template, [3.0], [0.1], bottom_levels=3)
        assert {z.parity for z in report.zones} == {"even", "odd"}
        assert report.exponent is None
        assert all(z.count == 3 for z in report.zones if z.zone == "bottom")

    def test_scaling_ratios_attached(self, quadratic):
        template = ReducedSymbol(model=quadratic, xi2=0.0, hbar=0.1)
        report = gap_stats(template, [0.0], [0.1], z_values=[10.0, 20.0])
        assert len(report.scaling_ratios) == len(eigenvalue_scaling(2, [10.0, 20.0]))


def test_eigenvalue_scaling_band():
    rows = eigenvalue_scaling(2, [5.0, 10.0, 20.0, 50.0])
    assert set(rows[:, 0]) == {5.0, 10.0, 20.0, 50.0}
    assert rows[rows[:, 0] == 50.0].shape[0] == 35
    ratios = rows[:, 2]
    assert np.all(ratios > 0)
    assert ratios.max() / ratios.min() <= 10.0
