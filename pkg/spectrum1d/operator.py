"""
Finite-difference discretisation of the reduced operator
a0 = 1/2 (hbar^2 D^2 + (xi2 - rho(x1)/nu)^2 - W) with Dirichlet walls
"""

import math
from typing import Tuple

import numpy as np
from loguru import logger

from config import get_settings
from schemas import GridSpec, Parity, ReducedOperator, ReducedSymbol
from utils.errors import ResourceLimit


def grid_spacing(sym: ReducedSymbol, window_top: float, refine: int = 1) -> float:
    """Delta = hbar / (points_per_hbar * sqrt(2 (window_top + W))) / refine"""
    settings = get_settings().grid
    energy = max(window_top + sym.W, 0.05)
    return sym.hbar / (settings.points_per_hbar * math.sqrt(2.0 * energy)) / refine


def _signed_root(y: float, nu: float) -> float:
    return math.copysign(abs(y) ** (1.0 / nu), y)


def allowed_interval(sym: ReducedSymbol, threshold: float) -> Tuple[float, float]:
    """
    Interval outside which U(x) >= threshold.

    U >= threshold exactly when |xi2 - rho/nu| >= P with P = sqrt(2 threshold + W).
    """
    nu = sym.model.nu
    P = math.sqrt(max(2.0 * threshold + sym.W, 0.0))
    upper = nu * (sym.xi2 + P)
    if sym.model.parity is Parity.EVEN:
        R = upper ** (1.0 / nu) if upper > 0 else 0.0
        return -R, R
    return _signed_root(nu * (sym.xi2 - P), nu), _signed_root(upper, nu)


def build_operator(sym: ReducedSymbol, window_top: float, refine: int = 1) -> ReducedOperator:
    """
    Build the tridiagonal matrix of a0 for eigenvalues up to window_top.

    The box is the region where U(x) < window_top + wall_margin, widened by
    the relative padding. Nodes sit at integer multiples of the spacing, so
    grids for different xi2 share their nodes and refine=2 nests into refine=1.
    Even models get a grid symmetric about the origin.

    Args:
        sym: Reduced symbol
        window_top: Top of the spectral window of interest
        refine: Integer refinement of the default spacing

    Returns:
        Immutable ReducedOperator

    Raises:
        ResourceLimit: Grid larger than settings.grid.max_points
    """
    settings = get_settings().grid
    if sym.hbar > 10:
        logger.warning(f"⚠️  hbar={sym.hbar:g} > 10; the ground state may need a wider box")

    if refine < 1:
        raise ValueError(f"refine must be a positive integer, got {refine}")
    coarse = grid_spacing(sym, window_top)
    threshold = max(window_top, -0.5 * sym.W) + settings.wall_margin
    left, right = allowed_interval(sym, threshold)
    half = 0.5 * (right - left)
    centre = 0.5 * (right + left)
    half = max(half * (1.0 + settings.padding), 8.0 * coarse)
    left, right = centre - half, centre + half

    if sym.model.parity is Parity.EVEN:
        m = int(math.ceil(max(abs(left), abs(right)) / coarse))
        i_min, n = -m, 2 * m + 1
    else:
        i_min = int(math.floor(left / coarse))
        n = int(math.ceil(right / coarse)) - i_min + 1

    # the box is fixed on the coarse grid and only subdivided
    spacing = coarse / refine
    i_min, n = i_min * refine, (n - 1) * refine + 1

    if n > settings.max_points:
        logger.error(f"❌ Grid of {n} points exceeds max_points={settings.max_points}")
        raise ResourceLimit(f"grid needs {n} points (max {settings.max_points})",
                            {"n": n, "max_points": settings.max_points, "hbar": sym.hbar,
                             "window_top": window_top})

    grid = GridSpec(i_min=i_min, n=n, spacing=spacing)
    kinetic = sym.hbar * sym.hbar / (spacing * spacing)
    diag = kinetic + sym.potential(grid.nodes)
    offdiag = np.full(n - 1, -0.5 * kinetic)
    logger.debug(f"Operator xi2={sym.xi2:g} hbar={sym.hbar:g}: n={n}, spacing={spacing:.3e}, "
                 f"box=[{grid.x_min:.3f}, {grid.x_max:.3f}]")
    return ReducedOperator(sym=sym, grid=grid, diag=diag, offdiag=offdiag, window_top=window_top)
