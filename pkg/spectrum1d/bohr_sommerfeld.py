"""
Bohr-Sommerfeld spectrum of the reduced operator
S(xi2, tau) / (2 pi hbar) + 1/2 in Z per connected well, Maslov index 2
"""

import math

from loguru import logger
from scipy.optimize import brentq

from dynamics import phase_area, turning_points
from schemas import EigenResult, Parity, ReducedSymbol, SpectrumMethod, WellType
from utils.errors import WindowInvalid


def level_topology(sym: ReducedSymbol, tau: float) -> WellType:
    """Topology of {a0 < tau} at the reduced symbol's xi2"""
    energy = sym.W + 2.0 * tau
    if energy <= 0:
        return WellType.EMPTY
    _, _, wells = turning_points(sym.model, sym.xi2 / math.sqrt(energy))
    return wells


def _crosses_unit(sym: ReducedSymbol, lo: float, hi: float) -> bool:
    """True when xi2 / sqrt(W + 2 tau) passes |k| = 1 for some tau in the window"""
    if sym.W + 2.0 * lo <= 0:
        return False
    k_lo = sym.xi2 / math.sqrt(sym.W + 2.0 * lo)
    k_hi = sym.xi2 / math.sqrt(sym.W + 2.0 * hi)
    a, b = min(k_lo, k_hi), max(k_lo, k_hi)
    return a <= 1.0 <= b or a <= -1.0 <= b


def well_action(sym: ReducedSymbol, tau: float, wells: WellType) -> float:
    """Area enclosed by one connected well on the level tau"""
    area = phase_area(sym.model, sym.xi2, tau, sym.W)
    return 0.5 * area if wells is WellType.TWO_WELLS else area


def bohr_sommerfeld(sym: ReducedSymbol, lo: float, hi: float) -> EigenResult:
    """
    Bohr-Sommerfeld eigenvalues in [lo, hi).

    Each quantum number n gives the root in tau of S(tau) = 2 pi hbar (n + 1/2),
    found by Brent's method; S increases with tau since dS/dtau = T > 0.
    Two-well levels report every root twice, once per parity class.

    Args:
        sym: Reduced symbol
        lo: Window bottom
        hi: Window top

    Returns:
        EigenResult with method BohrSommerfeld

    Raises:
        WindowInvalid: Level topology changes or degenerates inside the window
    """
    if not lo < hi:
        raise ValueError(f"empty window [{lo}, {hi})")
    if max(abs(lo), abs(hi)) > 0.4 * sym.W:
        logger.warning(f"⚠️  Window [{lo:g}, {hi:g}) leaves |tau| <= 0.4 W; wells may merge")

    top, bottom = level_topology(sym, lo), level_topology(sym, hi)
    if top is not bottom or top in (WellType.TOUCHING, WellType.DEGENERATE) or _crosses_unit(sym, lo, hi):
        raise WindowInvalid(f"level topology changes in [{lo:g}, {hi:g}): {top.value} -> {bottom.value}",
                            {"xi2": sym.xi2, "lo": lo, "hi": hi})
    if top is WellType.EMPTY:
        return EigenResult(values=[], method=SpectrumMethod.BOHR_SOMMERFELD, xi2=sym.xi2, hbar=sym.hbar)

    quantum = 2.0 * math.pi * sym.hbar
    s_lo, s_hi = well_action(sym, lo, top), well_action(sym, hi, top)
    n_first = max(0, math.ceil(s_lo / quantum - 0.5))

    even = sym.model.parity is Parity.EVEN
    values, parities = [], []
    n = n_first
    while quantum * (n + 0.5) < s_hi:
        target = quantum * (n + 0.5)
        root = brentq(lambda tau: well_action(sym, tau, top) - target, lo, hi, xtol=1e-13, rtol=1e-13)
        if top is WellType.TWO_WELLS:
            values.extend([root, root])
            parities.extend(["even", "odd"] if even else [None, None])
        else:
            values.append(root)
            parities.append(("even" if n % 2 == 0 else "odd") if even else None)
        n += 1

    logger.debug(f"BS xi2={sym.xi2:g} hbar={sym.hbar:g}: {len(values)} values in [{lo:g}, {hi:g})")
    return EigenResult(values=values, parities=parities if even else None,
                       method=SpectrumMethod.BOHR_SOMMERFELD, xi2=sym.xi2, hbar=sym.hbar)
