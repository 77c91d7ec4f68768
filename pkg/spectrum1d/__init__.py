"""
Reduced one-dimensional operator: finite-difference and Bohr-Sommerfeld spectra
"""

from .operator import build_operator, grid_spacing
from .sturm import TridiagonalBlock, count_below, kth_eigenvalue, eigenvalues_in, parity_blocks
from .eigen import eigenfunction, projector_diag, eigenvalues_richardson
from .counting import n0, weyl_count
from .bohr_sommerfeld import bohr_sommerfeld, level_topology
from .curves import lambda_curve, locate_kstar_hbar, level_near, eigenvalue_at, divided_differences
from .gaps import gap_stats, spacing_law, eigenvalue_scaling, level_period

__all__ = [
    'build_operator',
    'grid_spacing',
    'TridiagonalBlock',
    'count_below',
    'kth_eigenvalue',
    'eigenvalues_in',
    'parity_blocks',
    'eigenfunction',
    'projector_diag',
    'eigenvalues_richardson',
    'n0',
    'weyl_count',
    'bohr_sommerfeld',
    'level_topology',
    'lambda_curve',
    'locate_kstar_hbar',
    'level_near',
    'eigenvalue_at',
    'divided_differences',
    'gap_stats',
    'spacing_law',
    'eigenvalue_scaling',
    'level_period',
]
