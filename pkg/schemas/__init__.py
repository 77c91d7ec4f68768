"""
Pydantic schemas shared by the numerical modules and the CLI
"""

from .dynamics import (
    Parity,
    WellType,
    ModelSymbol,
    GeneralSymbol,
    PhasePoint,
    OrbitData,
    Trajectory,
    CriticalData,
)
from .spectrum import (
    SpectrumMethod,
    ReducedSymbol,
    GridSpec,
    ReducedOperator,
    EigenResult,
    CountingResult,
    LambdaCurve,
    GapZone,
    GapReport,
)
from .asymptotics import (
    FieldParams,
    PotentialProfile,
    CorrectionReport,
    ScalingRow,
    ScalingTable,
)
from .cli import OutputFormat, RunConfig

__all__ = [
    # Dynamics
    'Parity',
    'WellType',
    'ModelSymbol',
    'GeneralSymbol',
    'PhasePoint',
    'OrbitData',
    'Trajectory',
    'CriticalData',

    # Spectrum
    'SpectrumMethod',
    'ReducedSymbol',
    'GridSpec',
    'ReducedOperator',
    'EigenResult',
    'CountingResult',
    'LambdaCurve',
    'GapZone',
    'GapReport',

    # Asymptotics
    'FieldParams',
    'PotentialProfile',
    'CorrectionReport',
    'ScalingRow',
    'ScalingTable',

    # CLI
    'OutputFormat',
    'RunConfig',
]
