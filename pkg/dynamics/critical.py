"""
Critical momentum k* (zero drift) and the constants of its periodic orbit
"""

import math
from typing import Tuple

import numpy as np
from loguru import logger
from scipy.optimize import brentq

from config import get_settings
from schemas import CriticalData, ModelSymbol, Parity
from utils.errors import NoBracket

from .orbits import action, drift_integral, period


def _kappa_central(sym: ModelSymbol, k: float, step: float) -> float:
    """dI/dk by central differences with one Richardson step"""
    def central(h: float) -> float:
        return (drift_integral(sym, k + h) - drift_integral(sym, k - h)) / (2.0 * h)

    return (4.0 * central(0.5 * step) - central(step)) / 3.0


def _kappa_one_sided(sym: ModelSymbol, step: float) -> float:
    """dI/dk at k = 0 from one side, I(0) = 0 by antisymmetry"""
    def forward(h: float) -> float:
        return drift_integral(sym, h) / h

    return 2.0 * forward(0.5 * step) - forward(step)


def find_kstar(sym: ModelSymbol) -> CriticalData:
    """
    Locate the periodic orbit (I(k*) = 0) and its constants.

    Even models: the root of I on (0, 1). Odd models: k* = 0 by symmetry.

    Args:
        sym: Pilot model

    Returns:
        CriticalData with k*, kappa = I'(k*), omega* = kappa/2, S0 and T*

    Raises:
        NoBracket: I does not change sign on (0, 1)
    """
    settings = get_settings().roots

    if sym.parity is Parity.ODD:
        kstar = 0.0
        kappa = _kappa_one_sided(sym, settings.fd_step)
    else:
        lo, hi = 0.0, 1.0 - 1e3 * max(settings.exclusion_band, 1e-12)
        f_lo, f_hi = drift_integral(sym, lo), drift_integral(sym, hi)
        if f_lo * f_hi > 0:
            raise NoBracket(f"I(k) keeps its sign on (0, 1): I(0)={f_lo:.3e}, I(1-)={f_hi:.3e}",
                            {"nu": sym.nu, "I_lo": f_lo, "I_hi": f_hi})
        kstar = brentq(lambda k: drift_integral(sym, k), lo, hi,
                       xtol=min(settings.root_tolerance, 1e-12), rtol=4 * np.finfo(float).eps)
        kappa = _kappa_central(sym, kstar, settings.fd_step)

    I_star = drift_integral(sym, kstar)
    if abs(I_star) > settings.root_tolerance:
        logger.warning(f"⚠️  |I(k*)| = {abs(I_star):.2e} exceeds root tolerance")
    data = CriticalData(kstar=kstar, kappa=kappa, omega_star=kappa / 2.0,
                        S0=action(sym, kstar, 0.0), T_star=period(sym, kstar), I_star=I_star)
    logger.info(f"✅ k* = {data.kstar:.10f} (nu={sym.nu:g}, {sym.parity.value}), kappa = {data.kappa:.6f}")
    return data


def level_critical(crit: CriticalData, sym: ModelSymbol, tau: float) -> Tuple[float, float]:
    """
    Periodic orbit on the level a = tau.

    Returns:
        (k*(tau), T*(tau)) = (k* E^(1/2), T* E^(-(nu-1)/(2 nu))) with E = 1 + 2 tau
    """
    energy = 1.0 + 2.0 * tau
    return crit.kstar * math.sqrt(energy), crit.T_star * energy ** (-(sym.nu - 1.0) / (2.0 * sym.nu))
