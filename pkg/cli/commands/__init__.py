"""
CLI command groups
Each module adds its subparsers through register()
"""

from .dynamics import register as register_dynamics
from .spectrum import register as register_spectrum
from .asympt import register as register_asympt
from .verify import register as register_verify

__all__ = [
    "register_dynamics",
    "register_spectrum",
    "register_asympt",
    "register_verify"
]
