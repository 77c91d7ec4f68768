"""
Counting function n0 and its Weyl approximation
"""

import math

from config import get_settings
from dynamics import phase_area
from schemas import CountingResult, ReducedSymbol

from .operator import build_operator
from .sturm import count_below


def weyl_count(sym: ReducedSymbol) -> float:
    """n0^W = S(xi2, 0; W) / (2 pi hbar), S the total area of {a0 < 0}"""
    return phase_area(sym.model, sym.xi2, 0.0, sym.W) / (2.0 * math.pi * sym.hbar)


def n0(sym: ReducedSymbol) -> CountingResult:
    """
    Number of negative eigenvalues of a0 and its phase-space approximation.

    Args:
        sym: Reduced symbol

    Returns:
        CountingResult with n0, n0_weyl and the area S
    """
    op = build_operator(sym, get_settings().grid.n0_window_top)
    S = phase_area(sym.model, sym.xi2, 0.0, sym.W)
    return CountingResult(n0=count_below(op, 0.0), n0_weyl=S / (2.0 * math.pi * sym.hbar), S=S,
                          xi2=sym.xi2, hbar=sym.hbar, W=sym.W)
