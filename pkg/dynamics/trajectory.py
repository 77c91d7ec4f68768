"""
Trajectory integration
Symplectic splitting for the pilot model, implicit midpoint for general symbols
"""

import math
from typing import Optional, Tuple, Union

import numpy as np
from loguru import logger
from numba import njit

from config import get_settings
from schemas import GeneralSymbol, ModelSymbol, Parity, PhasePoint, Trajectory
from utils.errors import SpanTooShort, StepTooLarge

from .critical import find_kstar
from .hamiltonian import general_energy, general_vector_field, model_energy
from .orbits import period, turning_points

POINCARE_RADIUS = 0.1
_CBRT2 = 2.0 ** (1.0 / 3.0)
SCHEME_WEIGHTS = {
    "verlet": np.array([1.0]),
    "yoshida4": np.array([1.0 / (2.0 - _CBRT2), -_CBRT2 / (2.0 - _CBRT2), 1.0 / (2.0 - _CBRT2)]),
}


@njit(cache=True, nogil=True)
def _kick(x1, x2, xi1, xi2, s, nu, odd, mu):
    # flow of U = 1/2 ((xi2 - mu rho/nu)^2 - V) for time s: x1, xi2 frozen
    ax = abs(x1)
    rho = ax ** nu
    drho = nu * ax ** (nu - 1.0)
    if odd:
        if x1 < 0.0:
            rho = -rho
    elif x1 < 0.0:
        drho = -drho
    p = xi2 - mu * rho / nu
    return x2 + s * p, xi1 + s * p * mu * drho / nu


@njit(cache=True, nogil=True)
def _pilot_flow(z0, dt, n_steps, nu, odd, mu, weights):
    out = np.empty((n_steps + 1, 4))
    x1, x2, xi1, xi2 = z0[0], z0[1], z0[2], z0[3]
    out[0, 0] = x1
    out[0, 1] = x2
    out[0, 2] = xi1
    out[0, 3] = xi2
    for n in range(n_steps):
        for w in weights:
            h = w * dt
            x2, xi1 = _kick(x1, x2, xi1, xi2, 0.5 * h, nu, odd, mu)
            x1 = x1 + h * xi1
            x2, xi1 = _kick(x1, x2, xi1, xi2, 0.5 * h, nu, odd, mu)
        out[n + 1, 0] = x1
        out[n + 1, 1] = x2
        out[n + 1, 2] = xi1
        out[n + 1, 3] = xi2
    return out


def _implicit_midpoint(sym: GeneralSymbol, z0: np.ndarray, dt: float, n_steps: int,
                       iterations: int) -> np.ndarray:
    out = np.empty((n_steps + 1, 4))
    out[0] = z0
    z = z0.copy()
    for n in range(n_steps):
        z_next = z + dt * general_vector_field(sym, z)
        for _ in range(iterations):
            candidate = z + dt * general_vector_field(sym, 0.5 * (z + z_next))
            if np.max(np.abs(candidate - z_next)) <= 1e-14 * (1.0 + np.max(np.abs(candidate))):
                z_next = candidate
                break
            z_next = candidate
        z = z_next
        out[n + 1] = z
    return out


def _step_count(t_max: float, dt: float) -> int:
    n = int(round(t_max / dt))
    if n * dt < t_max * (1.0 - 1e-12):
        n += 1
    return max(n, 1)


def integrate_trajectory(sym: Union[ModelSymbol, GeneralSymbol], start: PhasePoint, t_max: float,
                         dt: float, V_const: float = 1.0, scheme: Optional[str] = None) -> Trajectory:
    """
    Integrate the Hamiltonian flow from start over [0, t_max].

    The pilot model uses a composition of the splitting a = xi1^2/2 + U(x1; xi2),
    whose U-flow moves xi1 and x2 exactly and never touches xi2. General
    symbols use a fixed-step implicit midpoint rule.

    Args:
        sym: Pilot model or general symbol
        start: Initial phase point
        t_max: Final time
        dt: Step size
        V_const: Constant potential for the pilot model
        scheme: 'yoshida4' or 'verlet' (settings default)

    Returns:
        Trajectory sampled at every step

    Raises:
        StepTooLarge: Energy drift above settings.integrator.energy_tolerance
    """
    if not dt > 0 or not t_max > 0:
        raise ValueError(f"dt and t_max must be positive, got dt={dt}, t_max={t_max}")
    settings = get_settings().integrator
    n_steps = _step_count(t_max, dt)
    z0 = start.as_array()

    if isinstance(sym, GeneralSymbol):
        points = _implicit_midpoint(sym, z0, dt, n_steps, settings.implicit_iterations)
        energies = np.array([general_energy(sym, z) for z in points])
    else:
        weights = SCHEME_WEIGHTS[scheme or settings.scheme]
        points = _pilot_flow(z0, float(dt), n_steps, float(sym.nu), sym.parity is Parity.ODD,
                             float(sym.mu), weights)
        energies = model_energy(sym, points, V_const)

    energy0 = float(energies[0])
    drift = float(np.max(np.abs(energies - energy0)))
    if drift > settings.energy_tolerance:
        logger.error(f"❌ Energy drift {drift:.2e} over {n_steps} steps, try dt/2")
        raise StepTooLarge(f"energy drift {drift:.3e} exceeds {settings.energy_tolerance:g}",
                           {"dt": dt, "drift": drift})
    logger.debug(f"Integrated {n_steps} steps, energy drift {drift:.2e}")
    return Trajectory(t=dt * np.arange(n_steps + 1), points=points, energies=energies, dt=dt,
                      energy0=energy0, energy_drift=drift, energy_tolerance=settings.energy_tolerance)


def orbit_start(sym: ModelSymbol, k: float) -> PhasePoint:
    """Right turning point of the orbit with xi2 = k, at rest in xi1"""
    _, b2, _ = turning_points(sym, k)
    return PhasePoint(x1=b2, x2=0.0, xi1=0.0, xi2=k)


def decompose_drift(traj: Trajectory, T: float) -> Tuple[float, float]:
    """
    Split x2(t) = v t + periodic part.

    Args:
        traj: Trajectory spanning at least three periods
        T: Period of (x1, xi1)

    Returns:
        (v_est, residual_sup): average velocity over the whole periods
        covered, and sup over the first period of |x2(t) - v_est t - x2(0)|

    Raises:
        SpanTooShort: Fewer than three periods
    """
    t = traj.t - traj.t[0]
    span = float(t[-1])
    n_periods = int(math.floor(span / T * (1.0 + 1e-9)))
    if n_periods < 3:
        raise SpanTooShort(f"trajectory covers {span / T:.2f} periods, need 3", {"span": span, "T": T})

    x2 = traj.x2
    end = n_periods * T
    x2_end = float(np.interp(end, t, x2))
    v_est = (x2_end - float(x2[0])) / end

    first = t <= T
    residual = x2[first] - v_est * t[first] - x2[0]
    return v_est, float(np.max(np.abs(residual)))


def poincare_shift(sym: ModelSymbol, xi2: float, steps_per_period: Optional[int] = None,
                   kstar: Optional[float] = None) -> float:
    """
    x2-shift after one period of (x1, xi1), from an integrated trajectory.

    Near k* it approaches 2 omega* (xi2 - k*).

    Args:
        sym: Pilot model
        xi2: Momentum within POINCARE_RADIUS of k*
        steps_per_period: Integrator steps per period (settings default)
        kstar: Critical momentum when already known

    Raises:
        ValueError: xi2 farther than POINCARE_RADIUS from k*
    """
    if kstar is None:
        kstar = find_kstar(sym).kstar
    if abs(xi2 - kstar) > POINCARE_RADIUS:
        raise ValueError(f"poincare_shift needs |xi2 - k*| <= {POINCARE_RADIUS:g}, got xi2={xi2:g}, k*={kstar:.6g}")
    T = period(sym, xi2)
    steps = steps_per_period or get_settings().integrator.steps_per_period
    traj = integrate_trajectory(sym, orbit_start(sym, xi2), T, T / steps)
    return float(traj.x2[-1] - traj.x2[0])
