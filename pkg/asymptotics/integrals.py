"""
xi2-integrals of the counting function n0

n0(xi2) is integer valued, so its integral is assembled from the intervals
{xi2 : lambda_m(xi2) < 0}, one per eigenvalue index, whose endpoints are
found by bisection on the Sturm count.
"""

import math
from functools import lru_cache
from typing import List, NamedTuple, Optional, Tuple

import numpy as np
from loguru import logger
from scipy.integrate import quad
from scipy.optimize import minimize_scalar

from config import get_settings
from dynamics import find_kstar
from schemas import FieldParams, ModelSymbol, Parity, PotentialProfile, ReducedSymbol
from spectrum1d import build_operator, count_below, kth_eigenvalue
from utils.errors import DomainNotClosed


class LevelInterval(NamedTuple):
    """Interval of xi2 where lambda_m < 0"""
    m: int
    left: float
    right: float
    lowest: float


def _sym(nu: int, parity: Parity, hbar: float, xi2: float = 0.0, W: float = 1.0) -> ReducedSymbol:
    return ReducedSymbol(model=ModelSymbol(nu=nu, parity=parity), xi2=xi2, hbar=hbar, W=W)


def xi2_cap(nu: int, hbar: float) -> float:
    """Largest xi2 searched: xi2_cap_factor * hbar^(-nu/(nu-1))"""
    return get_settings().asymptotics.xi2_cap_factor * hbar ** (-nu / (nu - 1.0))


class _Counter:
    """n0(xi2) and lambda_m(xi2) at fixed (nu, parity, hbar, refine, W)"""

    def __init__(self, nu: int, parity: Parity, hbar: float, refine: int, W: float = 1.0):
        self.template = _sym(nu, parity, hbar, W=W)
        self.refine = refine
        self.top = get_settings().grid.n0_window_top

    def _op(self, xi2: float):
        return build_operator(self.template.with_xi2(xi2), self.top, self.refine)

    def negative(self, xi2: float, m: int) -> bool:
        """lambda_m(xi2) < 0"""
        return count_below(self._op(xi2), 0.0) > m

    def count(self, xi2: float) -> int:
        return count_below(self._op(xi2), 0.0)

    def eigenvalue(self, xi2: float, m: int) -> float:
        return kth_eigenvalue(self._op(xi2), m)


def _bisect(counter: _Counter, m: int, inside: float, outside: float) -> float:
    rel_tol = get_settings().asymptotics.root_rel_tol
    while abs(inside - outside) > rel_tol * max(1.0, abs(inside)):
        mid = 0.5 * (inside + outside)
        if mid in (inside, outside):
            break
        if counter.negative(mid, m):
            inside = mid
        else:
            outside = mid
    return 0.5 * (inside + outside)


def _outside(counter: _Counter, m: int, start: float, direction: float, step: float, limit: float) -> float:
    """First point start + direction * step * 2^j where lambda_m >= 0"""
    point = start + direction * step
    while counter.negative(point, m):
        if abs(point) > limit:
            raise DomainNotClosed(f"lambda_{m} still negative at xi2={point:.6g} (cap {limit:.6g})",
                                  {"m": m, "xi2": point, "cap": limit})
        step *= 2.0
        point = start + direction * step
    return point


def level_intervals(nu: int, parity: Parity, hbar: float, refine: int = 1,
                    kstar: Optional[float] = None) -> List[LevelInterval]:
    """
    Intervals {xi2 : lambda_m(xi2, hbar) < 0} for W = 1, m = 0, 1, ...

    For each m the minimiser of lambda_m near k* gives an interior point
    (coarse scan, then bounded Brent); the search stops at the first m whose
    minimum is nonnegative. Endpoints are bracketed by doubling steps.

    Raises:
        DomainNotClosed: An interval extends beyond the xi2 cap
    """
    counter = _Counter(nu, parity, hbar, refine)
    if kstar is None:
        kstar = find_kstar(ModelSymbol(nu=nu, parity=parity)).kstar
    cap = xi2_cap(nu, hbar)
    scan = kstar + np.linspace(-1.0, 1.0, 21)

    intervals: List[LevelInterval] = []
    m = 0
    while True:
        values = [counter.eigenvalue(x, m) for x in scan]
        best = int(np.argmin(values))
        lo, hi = scan[max(best - 1, 0)], scan[min(best + 1, len(scan) - 1)]
        result = minimize_scalar(lambda x: counter.eigenvalue(x, m), bounds=(lo, hi), method='bounded',
                                 options={'xatol': 1e-6})
        centre, lowest = (float(result.x), float(result.fun)) if result.fun < values[best] \
            else (float(scan[best]), float(values[best]))
        if lowest >= 0 or not counter.negative(centre, m):
            break

        if parity is Parity.EVEN:
            left_out = -1.0
        else:
            left_out = _outside(counter, m, centre, -1.0, 1.0, cap)
        right_out = _outside(counter, m, centre, 1.0, 1.0, cap)
        left = _bisect(counter, m, centre, left_out)
        right = _bisect(counter, m, centre, right_out)
        intervals.append(LevelInterval(m=m, left=left, right=right, lowest=lowest))
        logger.debug(f"lambda_{m} < 0 on ({left:.10f}, {right:.10f}), min {lowest:.6f}")
        m += 1
    return intervals


@lru_cache(maxsize=256)
def _cached_integral(nu: int, parity: Parity, hbar: float, refine: int, settings_key: tuple) -> float:
    intervals = level_intervals(nu, parity, hbar, refine)
    return sum(iv.right - iv.left for iv in intervals) / (2.0 * math.pi)


def _reduced_integral(nu: int, parity: Parity, hbar: float, refine: int) -> float:
    settings = get_settings()
    key = (settings.grid.points_per_hbar, settings.grid.n0_window_top, settings.grid.wall_margin,
           settings.grid.padding, settings.asymptotics.root_rel_tol, settings.asymptotics.xi2_cap_factor)
    return _cached_integral(nu, parity, float(hbar), refine, key)


def reduced_n0_integral(nu: int, parity: Parity, hbar: float, W: float = 1.0,
                        extrapolate: Optional[bool] = None) -> float:
    """
    (2 pi)^-1 integral of n0(xi2, hbar; W) d xi2.

    W enters through xi2 -> xi2 W^-1/2, hbar -> hbar W^(-(nu+1)/(2 nu)), which
    maps a0 to W times the W = 1 operator. With extrapolation the grid steps
    Delta and Delta/2 are combined to remove the Delta^2 error.
    """
    if extrapolate is None:
        extrapolate = get_settings().asymptotics.extrapolate
    scaled = hbar * W ** (-(nu + 1.0) / (2.0 * nu))
    coarse = _reduced_integral(nu, parity, scaled, 1)
    if not extrapolate:
        return math.sqrt(W) * coarse
    fine = _reduced_integral(nu, parity, scaled, 2)
    return math.sqrt(W) * (4.0 * fine - coarse) / 3.0


def n0_xi2_integral(fp: FieldParams, W: float = 1.0, extrapolate: Optional[bool] = None) -> float:
    """
    (2 pi h)^-1 integral of n0(xi2, hbar; W) d xi2 = h^-1 (2 pi)^-1 sum_m |{lambda_m < 0}|.

    Args:
        fp: Field parameters (hbar from fp)
        W: Potential value
        extrapolate: Richardson in the grid step (settings default)

    Raises:
        DomainNotClosed: n0 has not vanished at the xi2 cap
    """
    if W <= 0:
        return 0.0
    return reduced_n0_integral(fp.nu, fp.parity, fp.hbar, W, extrapolate) / fp.h


def periodic_strip_count(nu: int, parity: Parity, hbar: float, length: float,
                         W: float = 1.0) -> Tuple[int, float]:
    """
    Separable count on a periodic strip of (rescaled) length L at constant W.

    xi2 runs over 2 pi hbar m / L; the count is sum_m n0(2 pi hbar m / L),
    taken over the momenta where the lowest eigenvalue is negative.

    Returns:
        (count, hbar * count / L), the second comparable with reduced_n0_integral
        at the same W without extrapolation. The operators are built at W
        directly, not through the W-scaling.
    """
    counter = _Counter(nu, parity, hbar, 1, W)
    root = math.sqrt(W)
    cap = root * xi2_cap(nu, hbar * W ** (-(nu + 1.0) / (2.0 * nu)))
    right = _outside(counter, 0, root, 1.0, 1.0, cap)
    left = -root if parity is Parity.EVEN else -right
    step = 2.0 * math.pi * hbar / length
    momenta = step * np.arange(math.ceil(left / step), math.floor(right / step) + 1)
    total = sum(counter.count(float(k)) for k in momenta)
    logger.debug(f"Strip count {total} over {len(momenta)} momenta")
    return total, hbar * total / length


def counting_density(fp: FieldParams, prof: PotentialProfile, extrapolate: Optional[bool] = None) -> float:
    """
    (2 pi h)^-1 double integral of n0(xi2, hbar; W(x2)) psi(x2).

    Constant profiles reduce to psi-mass times n0_xi2_integral; otherwise the
    x2-integral is adaptive over the support of psi.
    """
    a, b = prof.support
    if prof.W_const is not None:
        mass, _ = quad(prof.psi, a, b, limit=200)
        return mass * n0_xi2_integral(fp, prof.W_const, extrapolate)

    def integrand(x2: float) -> float:
        weight = prof.psi(x2)
        W = prof.W(x2)
        if weight == 0.0 or W <= 0:
            return 0.0
        return weight * reduced_n0_integral(fp.nu, fp.parity, fp.hbar, W, extrapolate)

    value, error = quad(integrand, a, b, limit=100, epsabs=1e-9, epsrel=1e-7)
    logger.debug(f"Counting density integral {value:.10g} (quad error {error:.1e})")
    return value / fp.h


def riemann_counting_density(fp: FieldParams, prof: PotentialProfile, x2_nodes: int = 32,
                             xi2_step: float = 1e-3, refine: int = 2) -> float:
    """
    Double midpoint sum of n0(xi2, hbar; W(x2)) psi(x2) / (2 pi h).

    Operators are built at W(x2) directly on a grid refined `refine` times,
    n0 is counted at every midpoint of a uniform xi2 grid. Slow; serves as
    an independent check of counting_density.
    """
    top = get_settings().grid.n0_window_top
    a, b = prof.support
    dx = (b - a) / x2_nodes
    total = 0.0
    for i in range(x2_nodes):
        x2 = a + (i + 0.5) * dx
        weight, W = prof.psi(x2), prof.W(x2)
        if weight == 0.0 or W <= 0:
            continue
        template = _sym(fp.nu, fp.parity, fp.hbar, W=W)

        def count(xi2: float) -> int:
            return count_below(build_operator(template.with_xi2(xi2), top, refine), 0.0)

        root = math.sqrt(W)
        right = root
        while count(right):
            right += 0.25
        left = -root
        if fp.parity is Parity.ODD:
            while count(left):
                left -= 0.25
        momenta = np.arange(left + 0.5 * xi2_step, right, xi2_step)
        total += weight * xi2_step * sum(count(float(k)) for k in momenta)
    logger.debug(f"Riemann counting density over {x2_nodes} x2 nodes, xi2 step {xi2_step:g}")
    return total * dx / (2.0 * math.pi * fp.h)
