"""
Eigenvectors, spectral projector and grid-extrapolated eigenvalues
"""

from typing import Optional

import numpy as np
from loguru import logger
from scipy.linalg import eigh_tridiagonal, solve_banded

from schemas import EigenResult, ReducedOperator, ReducedSymbol, SpectrumMethod
from utils.errors import NotConverged, NotIsolated

from .operator import build_operator
from .sturm import count_below, kth_eigenvalue, _bisect_kth, _arrays, _rel_tol

ISOLATION_RADIUS = 1e-6
RESIDUAL_TOL = 1e-8


def eigenfunction(op: ReducedOperator, lam: float, iterations: int = 3) -> np.ndarray:
    """
    Eigenvector for the eigenvalue near lam by inverse iteration.

    Args:
        op: Reduced operator
        lam: Approximate eigenvalue, within 1e-6 of exactly one eigenvalue
        iterations: Inverse iteration sweeps

    Returns:
        Grid vector with sum |u_i|^2 Delta = 1 and positive largest entry

    Raises:
        NotIsolated: No eigenvalue, or more than one, within 1e-6 of lam
        NotConverged: |(M - lambda) u| above 1e-8 for the unit vector u
    """
    below = count_below(op, lam - ISOLATION_RADIUS)
    inside = count_below(op, lam + ISOLATION_RADIUS) - below
    if inside != 1:
        raise NotIsolated(f"{inside} eigenvalues within {ISOLATION_RADIUS:g} of {lam:g}",
                          {"lambda": lam, "count": inside})

    diag, off2, pivmin = _arrays(op)
    lo, hi = lam - ISOLATION_RADIUS, lam + ISOLATION_RADIUS
    shift = float(_bisect_kth(diag, off2, below, lo, hi, _rel_tol(), pivmin))

    n = len(op.diag)
    bands = np.empty((3, n))
    bands[0, 1:] = op.offdiag
    bands[1] = op.diag - shift
    bands[2, :-1] = op.offdiag
    v = np.ones(n) + np.linspace(0.0, 1.0, n)
    for _ in range(iterations):
        v = solve_banded((1, 1), bands, v)
        v /= np.linalg.norm(v)

    v /= np.linalg.norm(v)
    residual = float(np.linalg.norm(_apply(op, v) - shift * v))
    logger.debug(f"Inverse iteration at {shift:.12f}: residual {residual:.2e}")
    if residual > RESIDUAL_TOL:
        logger.error(f"❌ Inverse iteration at {shift:.12f} stalled, residual {residual:.2e}")
        raise NotConverged(f"residual {residual:.3e} exceeds {RESIDUAL_TOL:g}",
                           {"lambda": shift, "residual": residual, "iterations": iterations})
    v /= np.sqrt(op.spacing)
    if v[np.argmax(np.abs(v))] < 0:
        v = -v
    return v


def _apply(op: ReducedOperator, v: np.ndarray) -> np.ndarray:
    out = op.diag * v
    out[:-1] += op.offdiag * v[1:]
    out[1:] += op.offdiag * v[:-1]
    return out


def projector_diag(sym: ReducedSymbol, tau: float, op: Optional[ReducedOperator] = None) -> np.ndarray:
    """
    Diagonal of the spectral projector, sum over lambda_n < tau of |Y_n(x_i)|^2.

    Args:
        sym: Reduced symbol
        tau: Spectral cut
        op: Operator to use (built with window top tau when omitted)

    Returns:
        Values on the operator grid; sum(values) * Delta equals the count below tau
    """
    op = op or build_operator(sym, tau)
    count = count_below(op, tau)
    if count == 0:
        return np.zeros(op.grid.n)
    _, vectors = eigh_tridiagonal(op.diag, op.offdiag, select='i', select_range=(0, count - 1))
    return np.sum(vectors * vectors, axis=1) / op.spacing


def eigenvalues_richardson(sym: ReducedSymbol, lo: float, hi: float,
                           window_top: Optional[float] = None) -> EigenResult:
    """
    Eigenvalues in [lo, hi) extrapolated in the grid step.

    The coarse and the nested fine grid are paired by eigenvalue index and
    combined as (4 lambda(Delta/2) - lambda(Delta)) / 3.
    """
    top = hi if window_top is None else window_top
    coarse = build_operator(sym, top, refine=1)
    fine = build_operator(sym, top, refine=2)
    first, last = count_below(fine, lo), count_below(fine, hi)
    values = []
    for k in range(first, last):
        values.append((4.0 * kth_eigenvalue(fine, k) - kth_eigenvalue(coarse, k)) / 3.0)
    values = np.maximum.accumulate(np.array(values)) if values else np.empty(0)
    return EigenResult(values=[float(v) for v in values], method=SpectrumMethod.FINITE_DIFFERENCE,
                       xi2=sym.xi2, hbar=sym.hbar)
