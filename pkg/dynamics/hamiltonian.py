"""
Hamiltonian symbols and their gradients
"""

from typing import Union

import numpy as np

from schemas import GeneralSymbol, ModelSymbol, PhasePoint

Symbol = Union[ModelSymbol, GeneralSymbol]


def eval_hamiltonian(sym: Symbol, p: PhasePoint, V_const: float = 1.0) -> float:
    """
    a = 1/2 (xi1^2 + sigma^2 (xi2 - mu phi rho(x1)/nu)^2 - V).

    Args:
        sym: Pilot model (sigma = phi = 1, V = V_const) or general symbol
        p: Phase point
        V_const: Constant potential for the pilot model

    Returns:
        Value of the symbol at p
    """
    if isinstance(sym, GeneralSymbol):
        return general_energy(sym, np.array([p.x1, p.x2, p.xi1, p.xi2]))
    momentum = p.xi2 - sym.mu * float(sym.rho(p.x1)) / sym.nu
    return 0.5 * (p.xi1 * p.xi1 + momentum * momentum - V_const)


def model_energy(sym: ModelSymbol, points: np.ndarray, V_const: float = 1.0) -> np.ndarray:
    """Pilot-model symbol on rows (x1, x2, xi1, xi2)"""
    momentum = points[:, 3] - sym.mu * sym.rho(points[:, 0]) / sym.nu
    return 0.5 * (points[:, 2] ** 2 + momentum ** 2 - V_const)


def general_energy(sym: GeneralSymbol, z: np.ndarray) -> float:
    """General symbol at a single point z = (x1, x2, xi1, xi2)"""
    x1, x2, xi1, xi2 = (float(c) for c in z)
    base = sym.base
    sigma = sym.sigma(x1, x2)
    momentum = xi2 - base.mu * sym.phi(x1, x2) * float(base.rho(x1)) / base.nu
    return 0.5 * (xi1 * xi1 + sigma * sigma * momentum * momentum - sym.V(x1, x2))


def general_vector_field(sym: GeneralSymbol, z: np.ndarray, eps: float = 1e-6) -> np.ndarray:
    """
    Hamiltonian vector field (dx1, dx2, dxi1, dxi2) of a general symbol.

    Momentum derivatives are exact; position derivatives use central
    differences since sigma, phi and V are opaque callables.
    """
    x1, x2, xi1, xi2 = (float(c) for c in z)
    base = sym.base
    sigma = sym.sigma(x1, x2)
    momentum = xi2 - base.mu * sym.phi(x1, x2) * float(base.rho(x1)) / base.nu

    def a_at(y1: float, y2: float) -> float:
        return general_energy(sym, np.array([y1, y2, xi1, xi2]))

    h1 = eps * (1.0 + abs(x1))
    h2 = eps * (1.0 + abs(x2))
    da_dx1 = (a_at(x1 + h1, x2) - a_at(x1 - h1, x2)) / (2.0 * h1)
    da_dx2 = (a_at(x1, x2 + h2) - a_at(x1, x2 - h2)) / (2.0 * h2)
    return np.array([xi1, sigma * sigma * momentum, -da_dx1, -da_dx2])


def potential_slope(sym: ModelSymbol, x1, xi2: float):
    """
    dU/dx1 for U(x1) = 1/2 (xi2 - mu rho(x1)/nu)^2, vectorised in x1.

    The pilot-model force on xi1 is -potential_slope.
    """
    momentum = xi2 - sym.mu * sym.rho(x1) / sym.nu
    return -momentum * sym.mu * sym.rho_prime(x1) / sym.nu
