"""
Correction term of the Magnetic Weyl asymptotics
Exact value from the counting function and its leading sawtooth form
"""

import math
from typing import Optional

import numpy as np
from loguru import logger
from scipy.optimize import brentq

from dynamics import find_kstar
from schemas import CorrectionReport, CriticalData, FieldParams, ModelSymbol, PotentialProfile

from .integrals import n0_xi2_integral
from .landau import emw0_strip_integral
from .sawtooth import sawtooth_G


def _phase(fp: FieldParams, W: float, crit: CriticalData) -> float:
    """-S0 W^((nu+1)/(2 nu)) / (2 pi hbar)"""
    return -crit.S0 * W ** ((fp.nu + 1.0) / (2.0 * fp.nu)) / (2.0 * math.pi * fp.hbar)


def _amplitude(fp: FieldParams, W: float, crit: CriticalData) -> float:
    """(2 pi)^-1/2 hbar^1/2 kappa^-1/2 W^((nu-1)/(4 nu)), in units of h^-1"""
    return (math.sqrt(fp.hbar / (2.0 * math.pi * crit.kappa))
            * W ** ((fp.nu - 1.0) / (4.0 * fp.nu)))


def corr_leading(fp: FieldParams, W: float, crit: CriticalData, kappa1: float = 0.0) -> float:
    """
    Leading correction h^-1 (2 pi)^-1/2 hbar^1/2 kappa^-1/2 W^((nu-1)/(4 nu)) G(-S0 W^((nu+1)/(2 nu))/(2 pi hbar)).

    The stationary point of the area S(xi2) at k* gives the sawtooth G, with
    -d^2S/dxi2^2 = kappa. A nonzero kappa1 shifts the phase by kappa1 hbar.

    Args:
        fp: Field parameters
        W: Potential value
        crit: Critical data of the pilot model
        kappa1: Phase shift coefficient

    Returns:
        Leading correction in the units of corr_exact
    """
    return _amplitude(fp, W, crit) * sawtooth_G(_phase(fp, W, crit) + kappa1 * fp.hbar) / fp.h


def fit_kappa1(fp: FieldParams, W: float, crit: CriticalData, corr_exact_value: float,
               samples: int = 2001) -> Optional[float]:
    """
    Phase shift kappa1 matching the leading term to one exact value.

    Scans shifts delta in [-1/2, 1/2] of the sawtooth argument, refines every
    sign change of the mismatch and returns the smallest |delta| over hbar.
    Falls back to the best sampled shift when the mismatch keeps its sign.
    """
    amplitude = _amplitude(fp, W, crit)
    target = corr_exact_value * fp.h
    phase = _phase(fp, W, crit)

    def mismatch(delta: float) -> float:
        return amplitude * sawtooth_G(phase + delta) - target

    deltas = np.linspace(-0.5, 0.5, samples)
    values = np.array([mismatch(d) for d in deltas])
    roots = []
    for a, b, fa, fb in zip(deltas[:-1], deltas[1:], values[:-1], values[1:]):
        if fa == 0.0:
            roots.append(a)
        elif fa * fb < 0:
            roots.append(brentq(mismatch, a, b, xtol=1e-12))
    if roots:
        delta = min(roots, key=abs)
    else:
        delta = float(deltas[np.argmin(np.abs(values))])
        logger.warning(f"⚠️  Leading term never matches corr_exact; using best shift {delta:.4f}")
    logger.info(f"✅ kappa1 = {delta / fp.hbar:.6f} from hbar={fp.hbar:g}")
    return float(delta / fp.hbar)


def corr_exact(fp: FieldParams, W: float = 1.0, crit: Optional[CriticalData] = None,
               kappa1: Optional[float] = None, extrapolate: Optional[bool] = None) -> CorrectionReport:
    """
    Correction term (2 pi h)^-1 int n0 d xi2 - int E0^MW d x1 with its leading forms.

    Args:
        fp: Field parameters
        W: Potential value
        crit: Critical data (computed when omitted)
        kappa1: Phase shift of the refined leading term (0 when omitted)
        extrapolate: Richardson in the grid step (settings default)

    Returns:
        CorrectionReport with corr_exact = n0_integral - emw0_integral
    """
    if crit is None:
        crit = find_kstar(ModelSymbol(nu=fp.nu, parity=fp.parity))
    logger.info(f"🚀 Correction term: nu={fp.nu} {fp.parity.value}, hbar={fp.hbar:g}, h={fp.h:g}, W={W:g}")
    emw0 = emw0_strip_integral(fp, PotentialProfile.constant(W)) if W > 0 else 0.0
    n0_integral = n0_xi2_integral(fp, W, extrapolate)
    leading = corr_leading(fp, W, crit) if W > 0 else 0.0
    refined = corr_leading(fp, W, crit, kappa1 or 0.0) if W > 0 else 0.0
    report = CorrectionReport(nu=fp.nu, parity=fp.parity, mu=fp.mu, h=fp.h, hbar=fp.hbar, W=W,
                              emw0_integral=emw0, n0_integral=n0_integral,
                              corr_exact=n0_integral - emw0, corr_leading=leading,
                              corr_leading_refined=refined, kappa1=kappa1,
                              S0=crit.S0, kappa=crit.kappa, kstar=crit.kstar)
    logger.info(f"✅ corr_exact={report.corr_exact:.8g}, corr_leading={leading:.8g}")
    return report
