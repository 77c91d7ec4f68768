"""
Eigenvalue curves lambda_n(xi2) and the hbar-corrected critical momentum
"""

from typing import Optional, Sequence, Tuple

import numpy as np
from loguru import logger
from scipy.optimize import minimize_scalar

from config import get_settings
from schemas import LambdaCurve, Parity, ReducedSymbol
from utils.errors import CrossingDetected
from utils.parallel import ordered_map

from .operator import build_operator
from .sturm import Tridiagonal, count_below, kth_eigenvalue, parity_blocks


def _class_matrix(sym: ReducedSymbol, window_top: float, parity: Optional[Parity]) -> Tridiagonal:
    op = build_operator(sym, window_top)
    if parity is None:
        return op
    return parity_blocks(op)[Parity(parity)]


def eigenvalue_at(sym: ReducedSymbol, n: int, parity: Optional[Parity] = None,
                  window_top: Optional[float] = None) -> float:
    """n-th eigenvalue of a0 (within a parity class for even models)"""
    top = get_settings().grid.n0_window_top if window_top is None else window_top
    return kth_eigenvalue(_class_matrix(sym, top, parity), n)


def _tracked(sym: ReducedSymbol, n: int, parity: Optional[Parity], top: float) -> Tuple[float, float]:
    """(lambda_n, gap to the nearest neighbour in the same class)"""
    matrix = _class_matrix(sym, top, parity)
    value = kth_eigenvalue(matrix, n)
    gaps = [kth_eigenvalue(matrix, n + 1) - value]
    if n > 0:
        gaps.append(value - kth_eigenvalue(matrix, n - 1))
    if value > top:
        logger.warning(f"⚠️  lambda_{n}({sym.xi2:g}) = {value:.4f} above window top {top:g}")
    return value, min(gaps)


def divided_differences(x: np.ndarray, y: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Central first and second divided differences on interior points of a possibly uneven grid"""
    h_minus = x[1:-1] - x[:-2]
    h_plus = x[2:] - x[1:-1]
    d1 = (y[2:] - y[:-2]) / (h_plus + h_minus)
    d2 = 2.0 * ((y[2:] - y[1:-1]) / h_plus - (y[1:-1] - y[:-2]) / h_minus) / (h_plus + h_minus)
    return d1, d2


def lambda_curve(sym: ReducedSymbol, xi2_grid: Sequence[float], n: int,
                 parity: Optional[Parity] = None, window_top: Optional[float] = None,
                 workers: int = 1) -> LambdaCurve:
    """
    Track lambda_n over a xi2-grid.

    Eigenvalues of a 1D Sturm-Liouville matrix are simple, so within one
    parity class the n-th value is a continuous curve; the gap monitor only
    guards against neighbours that come closer than the bisection resolution.

    Args:
        sym: Reduced symbol template (its xi2 is replaced)
        xi2_grid: Increasing xi2 values, at least three
        n: Eigenvalue index (0-based, within the parity class if given)
        parity: Parity class for even models
        window_top: Box window (settings.grid.n0_window_top by default)
        workers: Threads for the sweep

    Returns:
        LambdaCurve with values and interior divided differences

    Raises:
        CrossingDetected: Two eigenvalues of the class closer than 10x the bisection tolerance
    """
    xi2 = np.asarray(xi2_grid, dtype=float)
    if xi2.size < 3 or np.any(np.diff(xi2) <= 0):
        raise ValueError("xi2 grid must be increasing with at least three points")
    settings = get_settings().grid
    top = settings.n0_window_top if window_top is None else window_top

    rows = ordered_map(lambda k: _tracked(sym.with_xi2(k), n, parity, top), xi2, workers)
    values = np.array([value for value, _ in rows])
    for k, (value, gap) in zip(xi2, rows):
        if gap < 10.0 * settings.eig_tol * max(1.0, abs(value)):
            logger.error(f"❌ lambda_{n} meets a neighbour at xi2={k:g} (gap {gap:.2e})")
            raise CrossingDetected(f"lambda_{n} within {gap:.2e} of a neighbour at xi2={k:g}",
                                   {"n": n, "xi2": float(k), "gap": gap})

    d1, d2 = divided_differences(xi2, values)
    return LambdaCurve(n=n, parity=Parity(parity).value if parity is not None else None,
                       xi2=xi2, values=values, d1=d1, d2=d2)


def level_near(sym: ReducedSymbol, tau: float = 0.0, parity: Optional[Parity] = None,
               window_top: Optional[float] = None) -> int:
    """Index of the eigenvalue closest to tau at the symbol's xi2"""
    top = get_settings().grid.n0_window_top if window_top is None else window_top
    matrix = _class_matrix(sym, top, parity)
    above = count_below(matrix, tau)
    if above == 0:
        return 0
    below = above - 1
    if abs(kth_eigenvalue(matrix, below) - tau) <= abs(kth_eigenvalue(matrix, above) - tau):
        return below
    return above


def locate_kstar_hbar(sym: ReducedSymbol, n: int, bounds: Tuple[float, float],
                      parity: Optional[Parity] = None, window_top: Optional[float] = None) -> float:
    """
    hbar-corrected critical momentum: the stationary point of lambda_n(xi2).

    lambda_n is convex near k*, so its minimiser on bounds is where the
    xi2-derivative vanishes.
    """
    result = minimize_scalar(lambda k: eigenvalue_at(sym.with_xi2(k), n, parity, window_top),
                             bounds=bounds, method='bounded', options={'xatol': 1e-7})
    logger.info(f"✅ k*_hbar = {result.x:.6f} (n={n}, hbar={sym.hbar:g})")
    return float(result.x)
