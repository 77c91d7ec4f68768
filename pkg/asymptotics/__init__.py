"""
Magnetic Weyl expressions, the correction term and its sawtooth asymptotics
"""

from .landau import active_levels, emw_density, emw0_strip_integral
from .sawtooth import sawtooth_G, sawtooth_G1
from .integrals import (
    LevelInterval,
    level_intervals,
    reduced_n0_integral,
    n0_xi2_integral,
    periodic_strip_count,
    counting_density,
    riemann_counting_density,
    xi2_cap,
)
from .correction import corr_exact, corr_leading, fit_kappa1
from .scaling import scaling_experiment

__all__ = [
    'active_levels',
    'emw_density',
    'emw0_strip_integral',
    'sawtooth_G',
    'sawtooth_G1',
    'LevelInterval',
    'level_intervals',
    'reduced_n0_integral',
    'n0_xi2_integral',
    'periodic_strip_count',
    'counting_density',
    'riemann_counting_density',
    'xi2_cap',
    'corr_exact',
    'corr_leading',
    'fit_kappa1',
    'scaling_experiment',
]
