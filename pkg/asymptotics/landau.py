"""
Magnetic Weyl expressions of the pilot model
Landau-level sums with field strength F = |x1|^(nu-1)
"""

import math

import numpy as np
from scipy.special import zeta

from schemas import FieldParams, PotentialProfile


def active_levels(x1, energy: float, fp: FieldParams):
    """
    Number of n >= 0 with (2n + 1) mu h F(x1) < energy.

    Vectorised over x1; zero where F vanishes or the level is empty.
    """
    field = fp.mu * fp.h * np.abs(np.asarray(x1, dtype=float)) ** (fp.nu - 1)
    with np.errstate(divide='ignore', invalid='ignore'):
        ratio = np.where(field > 0, energy / field, 0.0)
    return np.maximum(0.0, np.ceil(0.5 * (ratio - 1.0)))


def emw_density(x1, x2: float, tau: float, fp: FieldParams, prof: PotentialProfile):
    """
    E^MW(x, tau) = (2 pi)^-1 sum_n theta(2 tau + W - (2n+1) mu h F) mu h^-1 F.

    Args:
        x1: Distance from the degeneration line (scalar or array)
        x2: Position along the line
        tau: Spectral parameter
        fp: Field parameters
        prof: Potential profile

    Returns:
        Density, with the shape of x1
    """
    energy = 2.0 * tau + prof.W(x2)
    field = np.abs(np.asarray(x1, dtype=float)) ** (fp.nu - 1)
    density = active_levels(x1, energy, fp) * fp.mu / fp.h * field / (2.0 * math.pi)
    return float(density) if np.ndim(density) == 0 else density


def emw0_strip_integral(fp: FieldParams, prof: PotentialProfile, x2: float = 0.0, tau: float = 0.0) -> float:
    """
    Integral of E^MW over x1.

    Level n occupies |x1| < X_n = (E / ((2n+1) mu h))^(1/(nu-1)) and contributes
    (pi nu)^-1 mu h^-1 X_n^nu; the sum over n is (1 - 2^-p) zeta(p), p = nu/(nu-1).
    """
    energy = 2.0 * tau + prof.W(x2)
    if energy <= 0:
        return 0.0
    p = fp.nu / (fp.nu - 1.0)
    odd_zeta = (1.0 - 2.0 ** (-p)) * float(zeta(p))
    return fp.mu / (math.pi * fp.nu * fp.h) * (energy / (fp.mu * fp.h)) ** p * odd_zeta
