"""
Double-exponential (tanh-sinh) quadrature
Integrands see each node together with its exact distances to both endpoints
"""

import math
from functools import lru_cache
from typing import Callable, Optional, Tuple

import numpy as np
from loguru import logger

from config import get_settings


@lru_cache(maxsize=64)
def _unit_rule(step: float, t_max: float) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Nodes and weights on [0, 1].

    Returns (left, right, weight) where left = x and right = 1 - x are both
    computed from the tanh-sinh parameter, so neither loses digits near its end.
    """
    n = int(math.ceil(t_max / step))
    t = step * np.arange(-n, n + 1)
    u = 0.5 * np.pi * np.sinh(t)
    left = 1.0 / (1.0 + np.exp(-2.0 * u))
    right = 1.0 / (1.0 + np.exp(2.0 * u))
    e = np.exp(-2.0 * np.abs(u))
    sech2 = 4.0 * e / (1.0 + e) ** 2
    weight = 0.25 * np.pi * np.cosh(t) * sech2 * step
    keep = (left > 0.0) & (right > 0.0) & (weight > 0.0)
    left, right, weight = left[keep], right[keep], weight[keep]
    for arr in (left, right, weight):
        arr.setflags(write=False)
    return left, right, weight


def tanh_sinh(f: Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray],
              a: float, b: float,
              rel_tol: Optional[float] = None) -> Tuple[np.ndarray, float]:
    """
    Integrate f over [a, b] by tanh-sinh with step halving.

    f is called as f(x, da, db) with da = x - a and db = b - x. It may return
    an array of shape (m, nodes) to integrate m integrands on the same nodes;
    convergence is then judged against the largest component.

    Args:
        f: Vectorised integrand
        a: Lower limit
        b: Upper limit (b > a)
        rel_tol: Relative tolerance (settings.quadrature.rel_tol by default)

    Returns:
        (integral, estimated absolute error)
    """
    settings = get_settings().quadrature
    rel_tol = settings.rel_tol if rel_tol is None else rel_tol
    length = b - a
    if not length > 0:
        raise ValueError(f"tanh_sinh needs b > a, got [{a}, {b}]")

    step = settings.initial_step
    previous = None
    estimate = None
    error = math.inf
    for _ in range(settings.max_levels):
        left, right, weight = _unit_rule(step, settings.t_max)
        da = length * left
        db = length * right
        x = np.where(left <= 0.5, a + da, b - db)
        values = np.asarray(f(x, da, db), dtype=float)
        estimate = length * (values @ weight)
        if previous is not None:
            error = float(np.max(np.abs(estimate - previous)))
            scale = float(np.max(np.abs(estimate)))
            if error <= rel_tol * scale or error == 0.0:
                return estimate, error
        previous = estimate
        step *= 0.5

    logger.warning(f"⚠️  tanh-sinh did not reach rel_tol={rel_tol:g} on [{a:g}, {b:g}] (error≈{error:.2e})")
    return estimate, error
