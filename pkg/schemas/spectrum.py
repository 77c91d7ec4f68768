"""
Pydantic schemas for the reduced one-dimensional operator
"""

from enum import Enum
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from .dynamics import ModelSymbol


class SpectrumMethod(str, Enum):
    FINITE_DIFFERENCE = "FiniteDifference"
    BOHR_SOMMERFELD = "BohrSommerfeld"


class ReducedSymbol(BaseModel):
    """a0 = 1/2 (hbar^2 D^2 + (xi2 - rho(x1)/nu)^2 - W) at fixed xi2"""
    model: ModelSymbol
    xi2: float = Field(..., allow_inf_nan=False)
    hbar: float = Field(..., gt=0)
    W: float = Field(default=1.0, ge=0, description="Potential value W(x2)")

    model_config = ConfigDict(frozen=True)

    @field_validator('model')
    @classmethod
    def validate_model(cls, v: ModelSymbol) -> ModelSymbol:
        if v.mu != 1.0:
            raise ValueError(f"reduced operator works in rescaled units (mu = 1), got mu={v.mu}")
        if not v.is_integer:
            raise ValueError(f"reduced operator needs an integer nu, got {v.nu}")
        return v

    def with_xi2(self, xi2: float) -> "ReducedSymbol":
        return self.model_copy(update={'xi2': float(xi2)})

    def potential(self, x) -> np.ndarray:
        """U(x) = 1/2 ((xi2 - rho(x)/nu)^2 - W)"""
        p = self.xi2 - self.model.rho(x) / self.model.nu
        return 0.5 * (p * p - self.W)


class GridSpec(BaseModel):
    """Nodes x_i = (i_min + i) * spacing, i = 0..n-1, anchored at the origin"""
    i_min: int
    n: int = Field(..., ge=3)
    spacing: float = Field(..., gt=0)

    model_config = ConfigDict(frozen=True)

    @property
    def x_min(self) -> float:
        return self.i_min * self.spacing

    @property
    def x_max(self) -> float:
        return (self.i_min + self.n - 1) * self.spacing

    @property
    def nodes(self) -> np.ndarray:
        return (self.i_min + np.arange(self.n)) * self.spacing

    @property
    def symmetric(self) -> bool:
        return self.i_min == -(self.n - 1) // 2 and self.n % 2 == 1


class ReducedOperator(BaseModel):
    """Symmetric tridiagonal finite-difference matrix of a0 with Dirichlet walls"""
    sym: ReducedSymbol
    grid: GridSpec
    diag: np.ndarray
    offdiag: np.ndarray
    window_top: float

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    def model_post_init(self, __context) -> None:
        self.diag.setflags(write=False)
        self.offdiag.setflags(write=False)

    @property
    def x(self) -> np.ndarray:
        return self.grid.nodes

    @property
    def spacing(self) -> float:
        return self.grid.spacing

    @property
    def lower_bound(self) -> float:
        """Gershgorin lower bound of the spectrum"""
        return float(self.diag.min() - 2.0 * np.abs(self.offdiag).max())

    @property
    def upper_bound(self) -> float:
        return float(self.diag.max() + 2.0 * np.abs(self.offdiag).max())


class EigenResult(BaseModel):
    """Eigenvalues in a window, nondecreasing"""
    values: List[float] = Field(default_factory=list)
    parities: Optional[List[str]] = Field(default=None, description="'even'/'odd' tags (even nu only)")
    method: SpectrumMethod
    xi2: Optional[float] = None
    hbar: Optional[float] = None


class CountingResult(BaseModel):
    """Number of negative eigenvalues and its phase-space approximation"""
    n0: int = Field(..., ge=0)
    n0_weyl: float = Field(..., ge=0)
    S: float = Field(..., ge=0, description="Area of {a0 < 0} in the (x1, xi1) plane")
    xi2: float
    hbar: float
    W: float


class LambdaCurve(BaseModel):
    """lambda_n(xi2) on a grid with divided differences"""
    n: int = Field(..., ge=0)
    parity: Optional[str] = None
    xi2: np.ndarray
    values: np.ndarray
    d1: np.ndarray = Field(..., description="Central first differences on interior points")
    d2: np.ndarray = Field(..., description="Second differences on interior points")

    model_config = ConfigDict(arbitrary_types_allowed=True)


class GapZone(BaseModel):
    """Minimal spacing of one zone at one (xi2, hbar)"""
    xi2: float
    hbar: float
    zone: str = Field(..., description="'bottom' (lowest levels) or 'level' (|lambda| <= width)")
    parity: Optional[str] = None
    count: int
    min_spacing: Optional[float] = None


class GapReport(BaseModel):
    """Spacing statistics and power-law fits"""
    zones: List[GapZone] = Field(default_factory=list)
    exponent: Optional[float] = Field(default=None, description="Fitted exponent of bottom spacing vs hbar")
    level_eps: Optional[List[Optional[float]]] = Field(default=None, description="level-zone spacing / hbar per hbar")
    scaling_ratios: Optional[List[float]] = Field(default=None, description="lambda_n / (z^((nu-1)/nu) n)")
