"""
Tests for field parameters and the Magnetic Weyl expressions
"""

import math

import numpy as np
import pytest

from asymptotics import active_levels, emw0_strip_integral, emw_density
from schemas import FieldParams, Parity, PotentialProfile


@pytest.fixture
def unit_field() -> FieldParams:
    # mu h = 1
    return FieldParams(nu=2, mu=4.0, h=0.25)


def test_derived_scales():
    fp = FieldParams(nu=3, mu=8.0, h=0.01)
    assert fp.hbar == pytest.approx(0.02)
    assert fp.gamma_bar == pytest.approx(0.5)
    assert fp.gamma_bar_1 == pytest.approx(0.08 ** -0.5)


def test_from_hbar_is_consistent():
    fp = FieldParams.from_hbar(2, Parity.EVEN, 0.1, 0.1)
    assert fp.mu == pytest.approx(100.0)
    assert fp.h == pytest.approx(0.01)
    assert fp.mu ** 0.5 * fp.h == pytest.approx(fp.hbar)


@pytest.mark.parametrize("x1, expected", [(0.2, 2), (0.25, 2), (0.4, 1), (0.0, 0), (2.0, 0)])
def test_active_levels(unit_field, x1, expected):
    assert active_levels(x1, 1.0, unit_field) == expected


def test_active_levels_vectorised(unit_field):
    x1 = np.array([-0.2, 0.2, 0.0])
    np.testing.assert_array_equal(active_levels(x1, 1.0, unit_field), [2, 2, 0])
    assert active_levels(0.2, -1.0, unit_field) == 0


def test_density_formula(unit_field):
    prof = PotentialProfile.constant(1.0)
    expected = 2 * unit_field.mu / unit_field.h * 0.2 / (2.0 * math.pi)
    assert emw_density(0.2, 0.0, 0.0, unit_field, prof) == pytest.approx(expected)
    assert emw_density(np.array([0.2, 0.2]), 0.0, 0.0, unit_field, prof).shape == (2,)


@pytest.mark.parametrize("nu, W", [(2, 1.0), (3, 1.3)])
def test_strip_integral_against_level_sum(nu, W):
    fp = FieldParams(nu=nu, mu=50.0, h=0.02)
    n = np.arange(1_000_000)
    X = (W / ((2 * n + 1) * fp.mu * fp.h)) ** (1.0 / (nu - 1))
    p = nu / (nu - 1.0)
    # remaining levels by the midpoint rule
    tail = (W / (fp.mu * fp.h)) ** p * (2.0 * n.size) ** (1.0 - p) / (2.0 * (p - 1.0))
    direct = fp.mu / (math.pi * nu * fp.h) * (np.sum(X ** nu) + tail)
    value = emw0_strip_integral(fp, PotentialProfile.constant(W))
    assert value == pytest.approx(direct, rel=1e-6)


def test_strip_integral_follows_the_profile(unit_field):
    prof = PotentialProfile(W=lambda x2: 1.0 + 0.5 * x2)
    assert emw0_strip_integral(unit_field, prof, x2=0.5) == pytest.approx(
        emw0_strip_integral(unit_field, PotentialProfile.constant(1.25)))
    assert emw0_strip_integral(unit_field, prof, tau=-0.6) == 0.0


def test_profile_must_stay_positive():
    with pytest.raises(ValueError):
        PotentialProfile(W=lambda x2: x2)
    with pytest.raises(ValueError):
        PotentialProfile.constant(1.0, support=(1.0, -1.0))


def test_emw_density_ten_levels():
    fp = FieldParams(nu=2, mu=100.0, h=0.01)
    prof = PotentialProfile.constant(1.0)
    assert active_levels(0.05, 1.0, fp) == 10
    assert emw_density(0.05, 0.0, 0.0, fp, prof) == pytest.approx(10 * 100.0 / 0.01 * 0.05 / (2.0 * math.pi))
