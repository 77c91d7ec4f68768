"""
hbar-scaling study of the correction term at fixed inner-zone width
"""

import math
from typing import Optional, Sequence

import numpy as np
from loguru import logger

from dynamics import find_kstar
from schemas import FieldParams, ModelSymbol, Parity, PotentialProfile, ScalingRow, ScalingTable
from utils.parallel import ordered_map

from .correction import corr_leading, fit_kappa1
from .integrals import n0_xi2_integral
from .landau import emw0_strip_integral


def scaling_experiment(nu: int, parity: Parity, hbar_list: Sequence[float], gamma_bar: float,
                       W: float = 1.0, kappa1: Optional[float] = None, calibrate: bool = True,
                       extrapolate: Optional[bool] = None, workers: int = 1) -> ScalingTable:
    """
    Correction terms over a list of hbar with (mu, h) rebuilt from (hbar, gamma_bar).

    Rows are computed independently and merged in input order. When kappa1 is
    not given and calibrate is set, it is fitted on the smallest hbar.

    Args:
        nu: Degeneration exponent
        parity: Model parity
        hbar_list: Semiclassical parameters (each <= 0.3)
        gamma_bar: Inner-zone width
        W: Potential value
        kappa1: Phase shift of the refined leading term
        calibrate: Fit kappa1 when it is not given
        extrapolate: Richardson in the grid step (settings default)
        workers: Threads over hbar

    Returns:
        ScalingTable with the log-log slope of h |residual| against hbar
    """
    if any(hbar > 0.3 for hbar in hbar_list):
        logger.warning("⚠️  scaling_experiment expects hbar <= 0.3")
    crit = find_kstar(ModelSymbol(nu=nu, parity=parity))
    profile = PotentialProfile.constant(W)
    params = [FieldParams.from_hbar(nu, parity, float(hbar), gamma_bar) for hbar in hbar_list]
    logger.info(f"🚀 Scaling experiment over hbar={list(hbar_list)} (gamma_bar={gamma_bar:g})")

    integrals = ordered_map(lambda fp: n0_xi2_integral(fp, W, extrapolate), params, workers)
    exact = [n0 - emw0_strip_integral(fp, profile) for fp, n0 in zip(params, integrals)]

    if kappa1 is None and calibrate and params:
        smallest = int(np.argmin([fp.hbar for fp in params]))
        kappa1 = fit_kappa1(params[smallest], W, crit, exact[smallest])

    rows = []
    for fp, n0_integral, corr in zip(params, integrals, exact):
        emw0 = emw0_strip_integral(fp, profile)
        leading = corr_leading(fp, W, crit)
        residual = corr - leading
        rows.append(ScalingRow(
            hbar=fp.hbar, mu=fp.mu, h=fp.h, n0_integral=n0_integral, emw0_integral=emw0,
            corr_exact=n0_integral - emw0, corr_leading=leading,
            corr_leading_refined=corr_leading(fp, W, crit, kappa1 or 0.0), residual=residual,
            corr_norm=fp.h * abs(corr) / math.sqrt(fp.hbar),
            residual_norm=fp.h * abs(residual) / fp.hbar,
        ))

    slope = None
    usable = [(math.log(r.hbar), math.log(r.h * abs(r.residual))) for r in rows if r.residual != 0]
    if len(usable) >= 2:
        x, y = np.array(usable).T
        slope = float(np.polyfit(x, y, 1)[0])
    logger.info(f"✅ Scaling experiment done, residual slope {slope}")
    return ScalingTable(nu=nu, parity=parity, gamma_bar=gamma_bar, kappa1=kappa1, rows=rows,
                        residual_slope=slope)
