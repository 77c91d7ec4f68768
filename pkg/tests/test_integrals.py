"""
Tests for the xi2-integrals of the counting function
"""

import math

import numpy as np
import pytest
from scipy.integrate import quad

from asymptotics import (
    counting_density,
    level_intervals,
    n0_xi2_integral,
    periodic_strip_count,
    reduced_n0_integral,
    riemann_counting_density,
    xi2_cap,
)
from schemas import FieldParams, ModelSymbol, Parity, PotentialProfile, ReducedSymbol
from spectrum1d import build_operator, count_below, eigenvalue_at

HBAR = 0.3


@pytest.fixture
def intervals():
    return level_intervals(2, Parity.EVEN, HBAR)


def test_xi2_cap():
    assert xi2_cap(2, 0.1) == pytest.approx(1000.0)
    assert xi2_cap(3, 0.01) == pytest.approx(10.0 * 0.01 ** -1.5)


def test_intervals_are_nested(intervals):
    assert len(intervals) >= 2
    assert [iv.m for iv in intervals] == list(range(len(intervals)))
    for outer, inner in zip(intervals, intervals[1:]):
        assert outer.left <= inner.left < inner.right <= outer.right
        assert outer.lowest <= inner.lowest < 0


def test_endpoints_are_zeros(intervals):
    model = ModelSymbol(nu=2)
    for iv in intervals:
        for xi2 in (iv.left, iv.right):
            value = eigenvalue_at(ReducedSymbol(model=model, xi2=xi2, hbar=HBAR), iv.m)
            assert value == pytest.approx(0.0, abs=1e-8)
    assert intervals[0].left > -1.0


def test_reduced_integral_is_total_length(intervals):
    total = sum(iv.right - iv.left for iv in intervals) / (2.0 * math.pi)
    assert reduced_n0_integral(2, Parity.EVEN, HBAR, extrapolate=False) == pytest.approx(total)


def test_extrapolation_is_a_small_change():
    plain = reduced_n0_integral(2, Parity.EVEN, HBAR, extrapolate=False)
    refined = reduced_n0_integral(2, Parity.EVEN, HBAR, extrapolate=True)
    assert refined == pytest.approx(plain, rel=0.01)


def test_strip_sum_matches_integral():
    count, density = periodic_strip_count(2, Parity.EVEN, HBAR, 600.0)
    assert count > 0
    assert density == pytest.approx(reduced_n0_integral(2, Parity.EVEN, HBAR, extrapolate=False), rel=0.02)


@pytest.mark.slow
def test_potential_scaling_matches_strip_sum():
    _, density = periodic_strip_count(2, Parity.EVEN, HBAR, 600.0, W=1.3)
    scaled = reduced_n0_integral(2, Parity.EVEN, HBAR, W=1.3, extrapolate=False)
    assert density == pytest.approx(scaled, rel=0.01)


def test_integral_in_field_units():
    fp = FieldParams.from_hbar(2, Parity.EVEN, HBAR, 0.1)
    reduced = reduced_n0_integral(2, Parity.EVEN, HBAR, extrapolate=False)
    assert n0_xi2_integral(fp, extrapolate=False) == pytest.approx(reduced / fp.h)
    assert n0_xi2_integral(fp, W=0.0) == 0.0


def test_counting_density_constant_profile():
    fp = FieldParams.from_hbar(2, Parity.EVEN, HBAR, 0.1)
    prof = PotentialProfile.constant(1.0)
    mass, _ = quad(prof.psi, -1.0, 1.0)
    expected = mass * n0_xi2_integral(fp, extrapolate=False)
    assert counting_density(fp, prof, extrapolate=False) == pytest.approx(expected, rel=1e-8)

    general = PotentialProfile(W=lambda _x2: 1.0)
    assert counting_density(fp, general, extrapolate=False) == pytest.approx(expected, rel=1e-6)


def test_odd_intervals_are_two_sided():
    intervals = level_intervals(3, Parity.ODD, 0.3)
    assert intervals
    assert intervals[0].left < 0.0 < intervals[0].right


@pytest.mark.slow
def test_integral_matches_midpoint_sum():
    fp = FieldParams.from_hbar(2, Parity.EVEN, HBAR, 0.1)
    template = ReducedSymbol(model=ModelSymbol(nu=2), xi2=0.0, hbar=HBAR)

    def count(xi2):
        return count_below(build_operator(template.with_xi2(xi2), 0.5), 0.0)

    right = 1.0
    while count(right):
        right += 0.25
    step = 1e-4
    momenta = np.arange(-1.0 + 0.5 * step, right, step)
    riemann = step * sum(count(float(k)) for k in momenta) / (2.0 * math.pi)
    assert n0_xi2_integral(fp, extrapolate=False) * fp.h == pytest.approx(riemann, rel=1e-4)


@pytest.mark.slow
def test_counting_density_matches_double_riemann_sum():
    fp = FieldParams.from_hbar(2, Parity.EVEN, HBAR, 0.1)
    prof = PotentialProfile(W=lambda x2: 1.0 + 0.3 * math.sin(x2))
    oracle = riemann_counting_density(fp, prof, x2_nodes=32, xi2_step=1e-3, refine=2)
    assert counting_density(fp, prof, extrapolate=True) == pytest.approx(oracle, rel=1e-3)


@pytest.mark.slow
def test_counting_density_is_monotone_in_W():
    fp = FieldParams.from_hbar(2, Parity.EVEN, HBAR, 0.1)
    lower = PotentialProfile(W=lambda x2: 1.0 + 0.3 * math.sin(x2))
    higher = PotentialProfile(W=lambda x2: 1.2 + 0.3 * math.sin(x2))
    assert counting_density(fp, higher, extrapolate=False) > counting_density(fp, lower, extrapolate=False)
