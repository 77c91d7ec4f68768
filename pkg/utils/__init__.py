"""
Shared utilities: domain errors, writers, logging and sweeps
"""
from .errors import (
    SpectralError,
    DegenerateLevel,
    EmptyLevel,
    NoBracket,
    StepTooLarge,
    SpanTooShort,
    ResourceLimit,
    WindowInvalid,
    NotIsolated,
    NotConverged,
    CrossingDetected,
    DomainNotClosed,
)
from .logging import setup_logging
from .parallel import ordered_map

__all__ = [
    'SpectralError',
    'DegenerateLevel',
    'EmptyLevel',
    'NoBracket',
    'StepTooLarge',
    'SpanTooShort',
    'ResourceLimit',
    'WindowInvalid',
    'NotIsolated',
    'NotConverged',
    'CrossingDetected',
    'DomainNotClosed',
    'setup_logging',
    'ordered_map',
]
