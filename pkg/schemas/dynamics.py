"""
Pydantic schemas for the classical dynamics module
Symbols, phase points, orbit invariants and trajectories
"""

from enum import Enum
from typing import Callable, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, FiniteFloat, model_validator


class Parity(str, Enum):
    """Choice of rho: |x|^nu (even) or |x|^nu sign(x) (odd)"""
    EVEN = "even"
    ODD = "odd"


class WellType(str, Enum):
    """Topology of the energy-zero level at fixed xi2 = k"""
    TWO_WELLS = "TwoWells"
    ONE_WELL = "OneWell"
    TOUCHING = "Touching"
    DEGENERATE = "Degenerate"
    EMPTY = "Empty"


class ModelSymbol(BaseModel):
    """Pilot model a = 1/2 (xi1^2 + (xi2 - mu rho(x1)/nu)^2 - V)"""
    nu: float = Field(..., ge=2, description="Degeneration exponent")
    parity: Parity = Field(default=Parity.EVEN, description="Even or odd rho")
    mu: float = Field(default=1.0, gt=0, description="Coupling (1 in rescaled units)")

    model_config = ConfigDict(frozen=True)

    @property
    def is_integer(self) -> bool:
        return float(self.nu).is_integer()

    def rho(self, x):
        """rho(x) = |x|^nu, times sign(x) for the odd model"""
        x = np.asarray(x, dtype=float)
        r = np.abs(x) ** self.nu
        if self.parity is Parity.ODD:
            r = r * np.sign(x)
        return r

    def rho_prime(self, x):
        """Derivative of rho"""
        x = np.asarray(x, dtype=float)
        r = self.nu * np.abs(x) ** (self.nu - 1)
        if self.parity is Parity.EVEN:
            r = r * np.sign(x)
        return r


def _unit(x1: float, x2: float) -> float:
    return 1.0


class GeneralSymbol(BaseModel):
    """a = 1/2 (xi1^2 + sigma^2 (xi2 - mu phi rho/nu)^2 - V) with smooth coefficients"""
    base: ModelSymbol
    sigma: Callable[[float, float], float] = Field(default=_unit, description="Metric factor")
    phi: Callable[[float, float], float] = Field(default=_unit, description="Field profile factor")
    V: Callable[[float, float], float] = Field(default=_unit, description="Potential")

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    def check_positive(self, box: Tuple[float, float, float, float], eps0: float = 1e-6,
                       samples: int = 21) -> bool:
        """
        Check sigma, phi >= eps0 on a sampled working box.

        Args:
            box: (x1_min, x1_max, x2_min, x2_max)
            eps0: Lower bound
            samples: Samples per axis

        Returns:
            True if both coefficients clear eps0 at every sample
        """
        xs = np.linspace(box[0], box[1], samples)
        ys = np.linspace(box[2], box[3], samples)
        return all(self.sigma(a, b) >= eps0 and self.phi(a, b) >= eps0 for a in xs for b in ys)

    def is_normalized(self, x2_values, tol: float = 1e-12) -> bool:
        """sigma(0, x2) = phi(0, x2) = 1 on the given x2 samples"""
        return all(abs(self.sigma(0.0, y) - 1) <= tol and abs(self.phi(0.0, y) - 1) <= tol for y in x2_values)


class PhasePoint(BaseModel):
    """Point (x1, x2, xi1, xi2) of the 4D phase space"""
    x1: FiniteFloat
    x2: FiniteFloat
    xi1: FiniteFloat
    xi2: FiniteFloat

    model_config = ConfigDict(frozen=True)

    def as_array(self) -> np.ndarray:
        return np.array([self.x1, self.x2, self.xi1, self.xi2], dtype=float)

    @classmethod
    def from_array(cls, z) -> "PhasePoint":
        return cls(x1=float(z[0]), x2=float(z[1]), xi1=float(z[2]), xi2=float(z[3]))


class OrbitData(BaseModel):
    """Classical invariants of the orbit with conserved xi2 = k"""
    k: float
    b1: float
    b2: float
    wells: WellType
    T: Optional[float] = Field(default=None, description="Period (per well for TwoWells)")
    I: Optional[float] = Field(default=None, description="x2-shift over one period")
    v: Optional[float] = Field(default=None, description="Drift velocity I/T")

    @model_validator(mode='after')
    def check_invariants(self) -> "OrbitData":
        if self.wells in (WellType.DEGENERATE, WellType.EMPTY):
            return self
        if not self.b1 < self.b2:
            raise ValueError(f"turning points must satisfy b1 < b2, got {self.b1}, {self.b2}")
        if self.T is not None and not self.T > 0:
            raise ValueError(f"period must be positive, got {self.T}")
        if self.T is not None and self.I is not None and self.v is None:
            self.v = self.I / self.T
        return self


class Trajectory(BaseModel):
    """Uniformly sampled integral curve with its energy record"""
    t: np.ndarray = Field(..., description="Sample times, uniformly spaced")
    points: np.ndarray = Field(..., description="Samples as rows (x1, x2, xi1, xi2)")
    energies: np.ndarray = Field(..., description="Hamiltonian along the samples")
    dt: float = Field(..., gt=0)
    energy0: float
    energy_drift: float = Field(..., ge=0, description="max |a - energy0|")
    energy_tolerance: float = Field(..., gt=0)

    model_config = ConfigDict(arbitrary_types_allowed=True)

    @property
    def samples(self) -> List[Tuple[float, PhasePoint]]:
        return [(float(t), PhasePoint.from_array(z)) for t, z in zip(self.t, self.points)]

    @property
    def x1(self) -> np.ndarray:
        return self.points[:, 0]

    @property
    def x2(self) -> np.ndarray:
        return self.points[:, 1]

    @property
    def xi1(self) -> np.ndarray:
        return self.points[:, 2]

    @property
    def xi2(self) -> np.ndarray:
        return self.points[:, 3]


class CriticalData(BaseModel):
    """Periodic orbit at zero drift and the constants built on it"""
    kstar: float
    kappa: float = Field(..., gt=0, description="dI/dk at k*")
    omega_star: float = Field(..., description="kappa / 2")
    S0: float = Field(..., gt=0, description="Action at k*, level 0")
    T_star: float = Field(..., gt=0, description="Period at k*")
    I_star: float = Field(default=0.0, description="Residual drift integral at k*")

    @model_validator(mode='after')
    def check_omega(self) -> "CriticalData":
        if self.omega_star != self.kappa / 2:
            raise ValueError("omega_star must equal kappa/2")
        return self
