"""
Configuration management for magnetic-weyl.

Usage:
    from config import get_settings

    settings = get_settings()
    print(settings.quadrature.rel_tol)
    print(settings.grid.max_points)
"""

from .settings import (
    Settings,
    IsolatedSettings,
    QuadratureSettings,
    RootSettings,
    IntegratorSettings,
    GridSettings,
    AsymptoticsSettings,
    LoggingSettings,
    get_settings,
    use_settings,
    reset_settings
)
from .acceptance import Criterion, load_acceptance

__all__ = [
    'Settings',
    'IsolatedSettings',
    'QuadratureSettings',
    'RootSettings',
    'IntegratorSettings',
    'GridSettings',
    'AsymptoticsSettings',
    'LoggingSettings',
    'get_settings',
    'use_settings',
    'reset_settings',
    'Criterion',
    'load_acceptance',
]
