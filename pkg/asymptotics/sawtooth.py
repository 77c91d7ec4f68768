"""
Sawtooth functions G and G1 of the correction term

G(t) = integral over R of f(t + eta^2/2) d eta with f(s) = s - floor(s + 1/2),
rewritten as sqrt(2) * integral_t^inf f(s) (s - t)^(-1/2) ds and summed
segment by segment between the jumps of f.
"""

import math
from functools import lru_cache

import numpy as np
from scipy.integrate import quad
from scipy.special import zeta

from config import get_settings

_SQRT2 = math.sqrt(2.0)
# expansion of the segment integral in 1/A: -(1/24) A^-3/2 - (1/256) A^-7/2 - (9/16384) A^-11/2
_TAIL = ((1.5, -1.0 / 24.0), (3.5, -1.0 / 256.0), (5.5, -9.0 / 16384.0))


def _segments(t: float, terms: int) -> float:
    j0 = math.floor(t + 0.5)
    w = j0 + 0.5 - t
    first = (2.0 / 3.0) * w ** 1.5 + 2.0 * (t - j0) * math.sqrt(w)

    A = (j0 + 1 + np.arange(terms)) - t
    p = np.sqrt(A + 0.5)
    q = np.sqrt(A - 0.5)
    full = np.sum(-1.0 / (6.0 * (p + q) * (A + p * q)))

    q0 = j0 + terms + 1 - t
    tail = sum(c * float(zeta(s, q0)) for s, c in _TAIL)
    return _SQRT2 * (first + float(full) + tail)


def sawtooth_G(t: float, terms: int = None) -> float:
    """
    G(t), 1-periodic, zero mean, Holder-1/2.

    The first partial segment and the next `terms` full segments are integrated
    in closed form; the remaining segments are summed through Hurwitz zeta
    values of their asymptotic expansion.

    Args:
        t: Argument
        terms: Full segments summed exactly (settings.asymptotics.g_terms)
    """
    return _segments(float(t), terms or get_settings().asymptotics.g_terms)


@lru_cache(maxsize=4)
def _g1_offset(terms: int) -> float:
    """integral_0^1 (1 - t) G(t) dt"""
    value, _ = quad(lambda t: (1.0 - t) * _segments(t, terms), 0.0, 1.0, points=[0.5],
                    limit=200, epsabs=1e-12, epsrel=1e-12)
    return value


def sawtooth_G1(t: float, terms: int = None) -> float:
    """
    G1(t) = integral_0^t G - integral_0^1 (1 - t') G(t') dt'.

    G has zero mean, so only the fractional part of t contributes.
    """
    terms = terms or get_settings().asymptotics.g_terms
    frac = float(t) - math.floor(float(t))
    points = [0.5] if frac > 0.5 else None
    integral, _ = quad(lambda s: _segments(s, terms), 0.0, frac, points=points,
                       limit=200, epsabs=1e-12, epsrel=1e-12) if frac > 0 else (0.0, 0.0)
    return integral - _g1_offset(terms)
