"""
Orbit invariants of the pilot models
Turning points, period T(k), drift integral I(k), drift velocity and actions
"""

import math
from functools import lru_cache
from typing import List, Sequence, Tuple

import numpy as np
from loguru import logger

from config import get_settings
from schemas import ModelSymbol, OrbitData, Parity, WellType
from utils.errors import DegenerateLevel, EmptyLevel
from utils.parallel import ordered_map

from .quadrature import tanh_sinh


def _length_scale(sym: ModelSymbol) -> float:
    """x1 scale mu^(-1/nu) relating the coupled model to mu = 1"""
    return sym.mu ** (-1.0 / sym.nu)


def _classify(nu: float, parity: Parity, k: float, band: float) -> Tuple[float, float, WellType]:
    """Turning points and topology of the level {a = 0} for mu = 1"""
    inv = 1.0 / nu
    if parity is Parity.EVEN:
        if abs(k + 1.0) <= band:
            return 0.0, 0.0, WellType.DEGENERATE
        if k < -1.0:
            return 0.0, 0.0, WellType.EMPTY
        b2 = ((k + 1.0) * nu) ** inv
        if abs(k - 1.0) <= band:
            return 0.0, b2, WellType.TOUCHING
        if k > 1.0:
            return ((k - 1.0) * nu) ** inv, b2, WellType.TWO_WELLS
        return -b2, b2, WellType.ONE_WELL

    if abs(abs(k) - 1.0) <= band:
        if k > 0:
            return 0.0, ((k + 1.0) * nu) ** inv, WellType.TOUCHING
        return -((1.0 - k) * nu) ** inv, 0.0, WellType.TOUCHING
    if k > 1.0:
        return ((k - 1.0) * nu) ** inv, ((k + 1.0) * nu) ** inv, WellType.ONE_WELL
    if k < -1.0:
        return -((1.0 - k) * nu) ** inv, -((-1.0 - k) * nu) ** inv, WellType.ONE_WELL
    return -((1.0 - k) * nu) ** inv, ((1.0 + k) * nu) ** inv, WellType.ONE_WELL


def turning_points(sym: ModelSymbol, k: float) -> Tuple[float, float, WellType]:
    """
    Turning points of the orbit with xi2 = k on the level a = 0 (V = 1).

    For two wells the right well is returned; the left one is its mirror.

    Args:
        sym: Pilot model
        k: Conserved momentum xi2

    Returns:
        (b1, b2, wells)
    """
    band = get_settings().roots.exclusion_band
    b1, b2, wells = _classify(sym.nu, sym.parity, float(k), band)
    scale = _length_scale(sym)
    return b1 * scale, b2 * scale, wells


def _z_integrands(nu: float, k: float, pieces: str):
    """
    Integrands of T, I, S in the variable z = rho/nu - k on [-1, 1].

    Each returns rows (T, I, S) given the node z and the exact quantities
    |k + z|, 1 + z, 1 - z built from endpoint distances.
    """
    p = 1.0 / nu - 1.0

    def rows(z, kz_abs, one_plus, one_minus):
        g = (kz_abs * nu) ** p
        s = np.sqrt(one_plus * one_minus)
        return np.vstack((2.0 * g / s, -2.0 * z * g / s, 2.0 * g * s))

    if pieces == "left":
        # [-1, -k]: singular in (1 + z) at the left end and in |k + z| at the right end
        def f(x, da, db):
            return rows(x, db, da, 1.0 + k + db)
    elif pieces == "right":
        # [-k, 1]
        def f(x, da, db):
            return rows(x, da, 1.0 - k + da, db)
    elif pieces == "whole_positive":
        # k > 1: k + z = (k - 1) + (1 + z)
        def f(x, da, db):
            return rows(x, (k - 1.0) + da, da, db)
    else:
        # k < -1: |k + z| = (|k| - 1) + (1 - z)
        def f(x, da, db):
            return rows(x, (-k - 1.0) + db, da, db)
    return f


def _even_inner_integrand(nu: float, k: float, b2: float):
    """Integrands of T, I, S on y in [0, b2] for the even one-well regime"""
    b2_nu = b2 ** nu

    def f(y, da, db):
        c = np.where(da <= db, da ** nu, y ** nu) / nu
        outer = 1.0 - k + c
        inner = -b2_nu * np.expm1(nu * np.log1p(-db / b2)) / nu
        q = outer * inner
        root = np.sqrt(q)
        return np.vstack((4.0 / root, 4.0 * (k - c) / root, 4.0 * root))

    return f


@lru_cache(maxsize=8192)
def _orbit_integrals(nu: float, parity: Parity, k: float, band: float,
                     rel_tol: float, max_levels: int, t_max: float,
                     initial_step: float) -> Tuple[float, float, float]:
    """(T, I, S) for mu = 1; cached on every setting that changes the result"""
    b1, b2, wells = _classify(nu, parity, k, band)
    if wells in (WellType.DEGENERATE, WellType.TOUCHING):
        raise DegenerateLevel(f"level xi2={k} is degenerate ({wells.value})", {"k": k, "wells": wells.value})
    if wells is WellType.EMPTY:
        raise EmptyLevel(f"level xi2={k} is empty", {"k": k})

    if parity is Parity.EVEN and wells is WellType.ONE_WELL:
        values, _ = tanh_sinh(_even_inner_integrand(nu, k, b2), 0.0, b2, rel_tol)
        return float(values[0]), float(values[1]), float(values[2])

    if k > 1.0:
        values, _ = tanh_sinh(_z_integrands(nu, k, "whole_positive"), -1.0, 1.0, rel_tol)
    elif k < -1.0:
        values, _ = tanh_sinh(_z_integrands(nu, k, "whole_negative"), -1.0, 1.0, rel_tol)
    else:
        left, _ = tanh_sinh(_z_integrands(nu, k, "left"), -1.0, -k, rel_tol)
        right, _ = tanh_sinh(_z_integrands(nu, k, "right"), -k, 1.0, rel_tol)
        values = left + right
        if k == 0.0:
            values[1] = 0.0
    return float(values[0]), float(values[1]), float(values[2])


def _integrals(sym: ModelSymbol, k: float) -> Tuple[float, float, float]:
    settings = get_settings()
    q = settings.quadrature
    T, I, S = _orbit_integrals(float(sym.nu), sym.parity, float(k), settings.roots.exclusion_band,
                               q.rel_tol, q.max_levels, q.t_max, q.initial_step)
    scale = _length_scale(sym)
    return T * scale, I * scale, S * scale


def period(sym: ModelSymbol, k: float) -> float:
    """
    Period T(k) of (x1, xi1) along the orbit with xi2 = k (per well for two wells).

    Raises:
        DegenerateLevel: |k| = 1 within the exclusion band, or k = -1 (even)
        EmptyLevel: k < -1 for the even model
    """
    return _integrals(sym, k)[0]


def drift_integral(sym: ModelSymbol, k: float) -> float:
    """Shift I(k) of x2 over one period; errors as period()"""
    return _integrals(sym, k)[1]


def drift_velocity(sym: ModelSymbol, k: float) -> float:
    """Average x2 velocity v(k) = I(k) / T(k)"""
    T, I, _ = _integrals(sym, k)
    return I / T


def orbit(sym: ModelSymbol, k: float) -> OrbitData:
    """All invariants of one orbit; degenerate levels carry no T, I, v"""
    b1, b2, wells = turning_points(sym, k)
    if wells in (WellType.DEGENERATE, WellType.EMPTY, WellType.TOUCHING):
        return OrbitData(k=k, b1=b1, b2=b2, wells=wells)
    T, I, _ = _integrals(sym, k)
    return OrbitData(k=k, b1=b1, b2=b2, wells=wells, T=T, I=I, v=I / T)


def orbit_table(sym: ModelSymbol, k_values: Sequence[float], workers: int = 1) -> List[OrbitData]:
    """OrbitData over a k-grid, in grid order"""
    logger.info(f"🚀 Orbit table: nu={sym.nu:g} {sym.parity.value}, {len(k_values)} points")
    rows = ordered_map(lambda k: orbit(sym, float(k)), k_values, workers)
    logger.info(f"✅ Orbit table done ({len(rows)} rows)")
    return rows


def action(sym: ModelSymbol, xi2: float, tau: float = 0.0, W: float = 1.0) -> float:
    """
    Action S = 2 ∫ sqrt(W + 2 tau - (xi2 - mu rho/nu)^2)_+ dx1 over one connected well.

    Uses S(xi2, tau; W) = E^((nu+1)/(2 nu)) S(xi2 E^(-1/2), 0; 1) with E = W + 2 tau.

    Raises:
        EmptyLevel: E <= 0 or the level is empty
        DegenerateLevel: the scaled momentum sits on a touching/degenerate level
    """
    energy = W + 2.0 * tau
    if not energy > 0:
        raise EmptyLevel(f"level W + 2 tau = {energy} is empty", {"xi2": xi2, "tau": tau, "W": W})
    root = math.sqrt(energy)
    _, _, S = _integrals(sym, xi2 / root)
    return energy ** ((sym.nu + 1.0) / (2.0 * sym.nu)) * S


def phase_area(sym: ModelSymbol, xi2: float, tau: float = 0.0, W: float = 1.0) -> float:
    """
    Total area of {a < tau} in the (x1, xi1) plane, both wells included.

    Touching levels are evaluated just inside the one-well side (the area is
    continuous there); empty and degenerate levels have zero area.
    """
    energy = W + 2.0 * tau
    if not energy > 0:
        return 0.0
    settings = get_settings()
    band = settings.roots.exclusion_band
    k = xi2 / math.sqrt(energy)
    _, _, wells = _classify(sym.nu, sym.parity, k, band)
    if wells in (WellType.EMPTY, WellType.DEGENERATE):
        return 0.0
    if wells is WellType.TOUCHING:
        k = math.copysign(1.0 - 2.0 * band - 1e-12, k)
        wells = WellType.ONE_WELL
    _, _, S = _integrals(sym, k)
    factor = 2.0 if wells is WellType.TWO_WELLS else 1.0
    return factor * energy ** ((sym.nu + 1.0) / (2.0 * sym.nu)) * S
