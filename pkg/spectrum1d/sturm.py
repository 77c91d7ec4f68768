"""
Sturm counting and bisection on symmetric tridiagonal matrices
The inertia of M - tau comes from the pivots of its LDL^T factorisation
"""

import math
from typing import Dict, NamedTuple, Union

import numpy as np
from loguru import logger
from numba import njit

from config import get_settings
from schemas import EigenResult, Parity, ReducedOperator, SpectrumMethod


class TridiagonalBlock(NamedTuple):
    """Symmetric tridiagonal matrix given by its diagonals"""
    label: str
    diag: np.ndarray
    offdiag: np.ndarray


Tridiagonal = Union[ReducedOperator, TridiagonalBlock]


@njit(cache=True, nogil=True)
def _sturm_count(diag, off2, tau, pivmin):
    # pivots of LDL^T; tiny pivots are pushed to -pivmin
    count = 0
    d = diag[0] - tau
    if abs(d) < pivmin:
        d = -pivmin
    if d < 0.0:
        count += 1
    for i in range(1, diag.shape[0]):
        d = diag[i] - tau - off2[i - 1] / d
        if abs(d) < pivmin:
            d = -pivmin
        if d < 0.0:
            count += 1
    return count


@njit(cache=True, nogil=True)
def _bisect_kth(diag, off2, k, lo, hi, rel_tol, pivmin):
    # invariant: count(lo) <= k < count(hi); stop at rel_tol * max(1, |mid|)
    while hi - lo > rel_tol * max(1.0, abs(0.5 * (lo + hi))):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if _sturm_count(diag, off2, mid, pivmin) > k:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


@njit(cache=True, nogil=True)
def _bisect_range(diag, off2, k_first, k_last, lo, hi, rel_tol, pivmin):
    out = np.empty(k_last - k_first)
    left = lo
    for j in range(k_last - k_first):
        value = _bisect_kth(diag, off2, k_first + j, left, hi, rel_tol, pivmin)
        out[j] = value
        # eigenvalues are ordered, so the next search starts just below this one
        left = max(lo, value - 2.0 * rel_tol * max(1.0, abs(value)))
    return out


def _arrays(op: Tridiagonal):
    diag = np.ascontiguousarray(op.diag, dtype=float)
    off2 = np.ascontiguousarray(op.offdiag, dtype=float) ** 2
    scale = float(off2.max()) if off2.size else 1.0
    pivmin = np.finfo(float).tiny * max(1.0, scale)
    return diag, off2, pivmin


def _bounds(op: Tridiagonal):
    off = np.abs(np.asarray(op.offdiag))
    radius = np.zeros(len(op.diag))
    radius[:-1] += off
    radius[1:] += off
    lo = float(np.min(op.diag - radius))
    hi = float(np.max(op.diag + radius))
    pad = 1e-12 * max(1.0, abs(lo), abs(hi))
    return lo - pad, hi + pad


def _rel_tol() -> float:
    return get_settings().grid.eig_tol


def count_below(op: Tridiagonal, tau: float) -> int:
    """
    Number of eigenvalues of the discrete matrix strictly below tau.

    Exact for the matrix: the count of negative pivots of M - tau.
    """
    diag, off2, pivmin = _arrays(op)
    return int(_sturm_count(diag, off2, float(tau), pivmin))


def kth_eigenvalue(op: Tridiagonal, n: int) -> float:
    """n-th eigenvalue (0-based, ascending) by bisection on the Sturm count"""
    size = len(op.diag)
    if not 0 <= n < size:
        raise ValueError(f"eigenvalue index {n} outside 0..{size - 1}")
    diag, off2, pivmin = _arrays(op)
    lo, hi = _bounds(op)
    return float(_bisect_kth(diag, off2, n, lo, hi, _rel_tol(), pivmin))


def _values_in(op: Tridiagonal, lo: float, hi: float) -> np.ndarray:
    diag, off2, pivmin = _arrays(op)
    k_first = int(_sturm_count(diag, off2, float(lo), pivmin))
    k_last = int(_sturm_count(diag, off2, float(hi), pivmin))
    if k_last <= k_first:
        return np.empty(0)
    values = _bisect_range(diag, off2, k_first, k_last, float(lo), float(hi), _rel_tol(), pivmin)
    return np.maximum.accumulate(values)


def parity_blocks(op: ReducedOperator) -> Dict[Parity, TridiagonalBlock]:
    """
    Even/odd blocks of an operator on a grid symmetric about 0.

    Even vectors (u_-i = u_i) give a block on u_0..u_m whose first coupling
    becomes sqrt(2) b after symmetrising; odd vectors (u_0 = 0) give the
    block on u_1..u_m. The two spectra together are the full spectrum.

    Raises:
        ValueError: Grid not symmetric, or potential not even
    """
    if not op.grid.symmetric:
        raise ValueError("parity blocks need a grid symmetric about the origin")
    if op.sym.model.parity is not Parity.EVEN:
        raise ValueError("parity blocks need an even model")
    m = (op.grid.n - 1) // 2
    diag = np.asarray(op.diag)
    off = np.asarray(op.offdiag)
    even_off = off[m:].copy()
    even_off[0] *= math.sqrt(2.0)
    return {
        Parity.EVEN: TridiagonalBlock("even", diag[m:].copy(), even_off),
        Parity.ODD: TridiagonalBlock("odd", diag[m + 1:].copy(), off[m + 1:].copy()),
    }


def eigenvalues_in(op: ReducedOperator, lo: float, hi: float) -> EigenResult:
    """
    All discrete eigenvalues in [lo, hi), nondecreasing.

    Even models on a symmetric grid are solved block by block and every
    value is tagged with its parity.

    Args:
        op: Reduced operator
        lo: Window bottom (inclusive)
        hi: Window top (exclusive)

    Returns:
        EigenResult with method FiniteDifference
    """
    if not lo < hi:
        raise ValueError(f"empty window [{lo}, {hi})")
    if hi > op.window_top:
        logger.warning(f"⚠️  Window top {hi:g} above the operator's box window {op.window_top:g}")

    sym = op.sym
    if sym.model.parity is Parity.EVEN and op.grid.symmetric:
        tagged = []
        for parity, block in parity_blocks(op).items():
            tagged.extend((value, parity.value) for value in _values_in(block, lo, hi))
        tagged.sort(key=lambda item: item[0])
        return EigenResult(values=[float(v) for v, _ in tagged], parities=[p for _, p in tagged],
                           method=SpectrumMethod.FINITE_DIFFERENCE, xi2=sym.xi2, hbar=sym.hbar)

    values = _values_in(op, lo, hi)
    return EigenResult(values=[float(v) for v in values], method=SpectrumMethod.FINITE_DIFFERENCE,
                       xi2=sym.xi2, hbar=sym.hbar)
