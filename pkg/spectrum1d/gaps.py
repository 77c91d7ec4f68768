"""
Level spacing statistics
Bottom-of-well spacings, spacings near tau = 0, the 2 pi hbar / T law and
the large-momentum scaling of the W = 0 operator
"""

import math
from typing import Dict, List, Optional, Sequence

import numpy as np
from loguru import logger

from config import get_settings
from dynamics import period
from schemas import GapReport, GapZone, ModelSymbol, Parity, ReducedSymbol, WellType

from .bohr_sommerfeld import level_topology
from .operator import build_operator
from .sturm import Tridiagonal, _values_in, eigenvalues_in, kth_eigenvalue, parity_blocks


def _classes(sym: ReducedSymbol, window_top: float) -> Dict[Optional[str], Tridiagonal]:
    """Matrices whose spectra are free of tunnelling doublets"""
    op = build_operator(sym, window_top)
    if sym.model.parity is Parity.EVEN and sym.xi2 > math.sqrt(sym.W):
        return {parity.value: block for parity, block in parity_blocks(op).items()}
    return {None: op}


def _min_spacing(values: np.ndarray) -> Optional[float]:
    return float(np.min(np.diff(values))) if len(values) >= 2 else None


def level_period(model: ModelSymbol, xi2: float, tau: float, W: float) -> float:
    """Period of the classical orbit on {a0 = tau}, T(xi2 E^-1/2) E^(-(nu-1)/(2 nu)), E = W + 2 tau"""
    energy = W + 2.0 * tau
    return period(model, xi2 / math.sqrt(energy)) * energy ** (-(model.nu - 1.0) / (2.0 * model.nu))


def spacing_law(sym: ReducedSymbol, lo: float, hi: float) -> np.ndarray:
    """
    Consecutive spacings in [lo, hi) against 2 pi hbar / T(xi2, tau).

    Two-well levels of even models are compared within one parity class;
    otherwise consecutive levels of the full spectrum are used.

    Returns:
        Rows (tau_mid, spacing, predicted)
    """
    result = eigenvalues_in(build_operator(sym, hi), lo, hi)
    values = np.array(result.values)
    tags = result.parities
    two_wells = level_topology(sym, 0.5 * (lo + hi)) is WellType.TWO_WELLS
    if tags is not None and two_wells:
        series = [values[[t == tag for t in tags]] for tag in ("even", "odd")]
    else:
        series = [values]

    rows = []
    for seq in series:
        for a, b in zip(seq[:-1], seq[1:]):
            mid = 0.5 * (a + b)
            rows.append((mid, b - a, 2.0 * math.pi * sym.hbar / level_period(sym.model, sym.xi2, mid, sym.W)))
    rows.sort()
    return np.array(rows).reshape(-1, 3)


def eigenvalue_scaling(nu: int, z_values: Sequence[float], fraction: float = 0.1,
                       parity: Parity = Parity.EVEN) -> np.ndarray:
    """
    Ratios lambda_n / (z^((nu-1)/nu) n) for D^2 + (z - rho/nu)^2.

    That operator is 2 a0 with hbar = 1 and W = 0; n runs over
    1 <= n <= fraction z^((nu+1)/nu).

    Returns:
        Rows (z, n, ratio)
    """
    model = ModelSymbol(nu=nu, parity=parity)
    rows = []
    for z in z_values:
        count = int(math.floor(fraction * z ** ((nu + 1.0) / nu)))
        if count < 1:
            continue
        omega = (nu * z) ** ((nu - 1.0) / nu)
        sym = ReducedSymbol(model=model, xi2=float(z), hbar=1.0, W=0.0)
        op = build_operator(sym, omega * (count + 1) + 1.0)
        scale = z ** ((nu - 1.0) / nu)
        for n in range(1, count + 1):
            rows.append((float(z), n, 2.0 * kth_eigenvalue(op, n - 1) / (scale * n)))
    return np.array(rows).reshape(-1, 3)


def gap_stats(sym: ReducedSymbol, xi2_values: Sequence[float], hbar_values: Sequence[float],
              level_width: float = 0.1, bottom_levels: int = 4,
              z_values: Optional[Sequence[float]] = None) -> GapReport:
    """
    Minimal spacings per (xi2, hbar) and their power laws.

    Two zones are measured: the lowest levels above min U (where the bottom
    is x^(2 nu) at xi2 = 0, so spacings scale as hbar^(2 nu/(nu+1))) and the
    levels with |lambda| <= level_width (spacings of order hbar). Even models
    with xi2 > sqrt(W) (two wells) are split by parity.

    Args:
        sym: Reduced symbol template (xi2 and hbar are replaced)
        xi2_values: Momenta
        hbar_values: Semiclassical parameters
        level_width: Half-width of the level zone
        bottom_levels: Levels per class in the bottom zone
        z_values: Momenta for the W = 0 scaling ratios

    Returns:
        GapReport; the exponent is fitted on the bottom zone of the first xi2
    """
    settings = get_settings().grid
    top = max(level_width, settings.n0_window_top)
    zones: List[GapZone] = []
    for xi2 in xi2_values:
        for hbar in hbar_values:
            current = sym.model_copy(update={'xi2': float(xi2), 'hbar': float(hbar)})
            for tag, matrix in _classes(current, top).items():
                bottom = np.array([kth_eigenvalue(matrix, k) for k in range(bottom_levels)])
                level = _values_in(matrix, -level_width, level_width)
                zones.append(GapZone(xi2=xi2, hbar=hbar, zone="bottom", parity=tag,
                                     count=len(bottom), min_spacing=_min_spacing(bottom)))
                zones.append(GapZone(xi2=xi2, hbar=hbar, zone="level", parity=tag,
                                     count=len(level), min_spacing=_min_spacing(level)))

    exponent = None
    first = xi2_values[0] if len(xi2_values) else None
    fit = []
    for hbar in hbar_values:
        spacings = [z.min_spacing for z in zones
                    if z.zone == "bottom" and z.xi2 == first and z.hbar == hbar and z.min_spacing]
        if spacings:
            fit.append((math.log(hbar), math.log(min(spacings))))
    if len(fit) >= 2:
        x, y = np.array(fit).T
        exponent = float(np.polyfit(x, y, 1)[0])
        logger.info(f"✅ Bottom spacing exponent {exponent:.4f} at xi2={first:g}")

    level_eps = []
    for hbar in hbar_values:
        spacings = [z.min_spacing for z in zones if z.zone == "level" and z.hbar == hbar and z.min_spacing]
        level_eps.append(min(spacings) / hbar if spacings else None)

    ratios = None
    if z_values:
        ratios = [float(r) for r in eigenvalue_scaling(int(sym.model.nu), z_values, parity=sym.model.parity)[:, 2]]
    return GapReport(zones=zones, exponent=exponent, level_eps=level_eps, scaling_ratios=ratios)
