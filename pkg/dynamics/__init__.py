"""
Classical dynamics of the pilot models and general symbols
"""

from .hamiltonian import eval_hamiltonian, model_energy, general_energy, potential_slope
from .orbits import (
    turning_points,
    period,
    drift_integral,
    drift_velocity,
    orbit,
    orbit_table,
    action,
    phase_area,
)
from .critical import find_kstar, level_critical
from .trajectory import (
    integrate_trajectory,
    orbit_start,
    decompose_drift,
    poincare_shift,
)

__all__ = [
    'eval_hamiltonian',
    'model_energy',
    'general_energy',
    'potential_slope',
    'turning_points',
    'period',
    'drift_integral',
    'drift_velocity',
    'orbit',
    'orbit_table',
    'action',
    'phase_area',
    'find_kstar',
    'level_critical',
    'integrate_trajectory',
    'orbit_start',
    'decompose_drift',
    'poincare_shift',
]
