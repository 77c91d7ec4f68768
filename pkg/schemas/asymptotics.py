"""
Pydantic schemas for Magnetic Weyl expressions and correction terms
"""

import math
from typing import Callable, List, Optional, Tuple

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, model_validator

from .dynamics import Parity


class FieldParams(BaseModel):
    """
    Field strength and Planck parameter with the derived scales.

    hbar = mu^(1/nu) h, gamma_bar = mu^(-1/nu), gamma_bar_1 = (mu h)^(-1/(nu-1)).
    Construct from (mu, h) directly or from (hbar, gamma_bar) via from_hbar.
    """
    nu: int = Field(..., ge=2)
    parity: Parity = Parity.EVEN
    mu: float = Field(..., gt=0)
    h: float = Field(..., gt=0)
    hbar: Optional[float] = None
    gamma_bar: Optional[float] = None
    gamma_bar_1: Optional[float] = None

    model_config = ConfigDict(frozen=True)

    @model_validator(mode='before')
    @classmethod
    def fill_derived(cls, data):
        if not isinstance(data, dict):
            return data
        data = dict(data)
        nu, mu, h = data.get('nu'), data.get('mu'), data.get('h')
        if nu is None or mu is None or h is None or nu <= 1 or mu <= 0 or h <= 0:
            return data
        if data.get('hbar') is None:
            data['hbar'] = mu ** (1.0 / nu) * h
        if data.get('gamma_bar') is None:
            data['gamma_bar'] = mu ** (-1.0 / nu)
        if data.get('gamma_bar_1') is None:
            data['gamma_bar_1'] = (mu * h) ** (-1.0 / (nu - 1))
        return data

    def model_post_init(self, __context) -> None:
        if self.mu < 1 or self.mu * self.h ** self.nu > 1:
            logger.warning(f"⚠️  FieldParams outside the strong-field regime: mu={self.mu:g}, mu h^nu={self.mu * self.h ** self.nu:g}")

    @classmethod
    def from_hbar(cls, nu: int, parity: Parity, hbar: float, gamma_bar: float) -> "FieldParams":
        """Reconstruct (mu, h) from hbar and the inner-zone width"""
        return cls(nu=nu, parity=parity, mu=gamma_bar ** (-nu), h=hbar * gamma_bar,
                   hbar=hbar, gamma_bar=gamma_bar)


def _bump(x2: float) -> float:
    """Smooth bump supported on [-1, 1]"""
    if abs(x2) >= 1.0:
        return 0.0
    return math.exp(-1.0 / (1.0 - x2 * x2))


class PotentialProfile(BaseModel):
    """W(x2) = V(0, x2) with a compactly supported weight psi(x2)"""
    W: Callable[[float], float]
    psi: Callable[[float], float] = Field(default=_bump)
    support: Tuple[float, float] = Field(default=(-1.0, 1.0))
    W_const: Optional[float] = Field(default=None, description="Set when W is constant")

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    @model_validator(mode='after')
    def check_positive(self) -> "PotentialProfile":
        a, b = self.support
        if not a < b:
            raise ValueError(f"support must be an interval, got {self.support}")
        samples = np.linspace(a, b, 101)
        if min(self.W(float(s)) for s in samples) <= 0:
            raise ValueError("W must stay positive on supp psi")
        if min(self.psi(float(s)) for s in samples) < 0:
            raise ValueError("psi must be nonnegative")
        return self

    @classmethod
    def constant(cls, W: float, psi: Optional[Callable[[float], float]] = None,
                 support: Tuple[float, float] = (-1.0, 1.0)) -> "PotentialProfile":
        return cls(W=lambda _x2: W, psi=psi or _bump, support=support, W_const=W)


class CorrectionReport(BaseModel):
    """Exact and leading correction terms at one (mu, h, W)"""
    nu: int
    parity: Parity
    mu: float
    h: float
    hbar: float
    W: float
    emw0_integral: float
    n0_integral: float
    corr_exact: float
    corr_leading: float
    corr_leading_refined: float
    kappa1: Optional[float] = None
    S0: float
    kappa: float
    kstar: float


class ScalingRow(BaseModel):
    hbar: float
    mu: float
    h: float
    n0_integral: float
    emw0_integral: float
    corr_exact: float
    corr_leading: float
    corr_leading_refined: float
    residual: float
    corr_norm: float = Field(..., description="h |corr_exact| hbar^(-1/2)")
    residual_norm: float = Field(..., description="h |residual| hbar^(-1)")


class ScalingTable(BaseModel):
    nu: int
    parity: Parity
    gamma_bar: float
    kappa1: Optional[float] = None
    rows: List[ScalingRow] = Field(default_factory=list)
    residual_slope: Optional[float] = Field(default=None, description="log-log slope of h|residual| vs hbar")
