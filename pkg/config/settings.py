"""
Centralized configuration management using Pydantic BaseSettings
Numerical tolerances, grid rules and logging in one validated place
"""

from pydantic import BaseModel, Field, field_validator
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict
from typing import Literal, Optional
import warnings
from loguru import logger


class QuadratureSettings(BaseModel):
    """Double-exponential quadrature for periods, drifts and actions"""
    rel_tol: float = Field(default=1e-10, gt=0, lt=1, description="Relative tolerance of orbit integrals")
    max_levels: int = Field(default=12, ge=2, le=20, description="Maximum step halvings")
    t_max: float = Field(default=4.0, gt=1, le=6, description="Truncation of the tanh-sinh parameter")
    initial_step: float = Field(default=0.5, gt=0, le=1, description="Initial tanh-sinh step")

    @field_validator('rel_tol')
    @classmethod
    def warn_loose_tolerance(cls, v: float) -> float:
        """Warn when the tolerance is too loose for the acceptance checks"""
        if v > 1e-6:
            msg = f"⚠️  Quadrature tolerance {v:g} is looser than 1e-6; orbit invariants will be noisy"
            warnings.warn(msg, UserWarning, stacklevel=2)
            logger.warning(msg)
        return v


class RootSettings(BaseModel):
    """Root finding and finite-difference settings"""
    root_tolerance: float = Field(default=1e-8, gt=0, description="Absolute tolerance of k* and BS roots")
    fd_step: float = Field(default=1e-4, gt=0, lt=0.1, description="Finite-difference step for kappa")
    exclusion_band: float = Field(default=1e-9, ge=0, lt=1e-3, description="Refused band around |k| = 1")


class IntegratorSettings(BaseModel):
    """Trajectory integration settings"""
    steps_per_period: int = Field(default=2000, ge=50, description="Default steps per orbit period")
    energy_tolerance: float = Field(default=1e-4, gt=0, description="Energy drift that aborts integration")
    scheme: Literal['yoshida4', 'verlet'] = Field(default='yoshida4', description="Splitting composition")
    implicit_iterations: int = Field(default=50, ge=5, description="Fixed-point sweeps per implicit step")

    @field_validator('steps_per_period')
    @classmethod
    def warn_coarse_steps(cls, v: int) -> int:
        """Warn when the step is above T/200"""
        if v < 200:
            msg = f"⚠️  steps_per_period={v} gives dt > T/200; energy drift may trip StepTooLarge"
            warnings.warn(msg, UserWarning, stacklevel=2)
            logger.warning(msg)
        return v


class GridSettings(BaseModel):
    """Finite-difference discretisation of the reduced operator"""
    points_per_hbar: float = Field(default=10.0, ge=2, description="Grid points per hbar/sqrt(2(top+W))")
    wall_margin: float = Field(default=2.0, gt=0, description="Potential clearance above the window at the walls")
    padding: float = Field(default=0.25, ge=0, description="Relative padding of the box")
    max_points: int = Field(default=2_000_000, ge=100, description="Largest accepted grid")
    eig_tol: float = Field(default=1e-10, gt=0, description="Bisection tolerance of eigenvalues")
    n0_window_top: float = Field(default=0.5, gt=0, description="Window top used when counting n0")


class AsymptoticsSettings(BaseModel):
    """Correction term and scaling experiment settings"""
    g_terms: int = Field(default=200, ge=20, description="Exact sawtooth segments before the zeta tail")
    extrapolate: bool = Field(default=True, description="Richardson-extrapolate n0 integrals in the grid step")
    xi2_cap_factor: float = Field(default=10.0, gt=1, description="xi2 cap in units of hbar^(-nu/(nu-1))")
    root_rel_tol: float = Field(default=1e-12, gt=0, description="Relative tolerance of level-crossing roots")
    workers: int = Field(default=1, ge=1, le=64, description="Threads for parameter sweeps")


class LoggingSettings(BaseModel):
    """Logging configuration"""
    level: str = Field(default="WARNING", description="Log level")

    @field_validator('level')
    @classmethod
    def validate_level(cls, v: str) -> str:
        """Validate and normalize log level"""
        v = v.upper()
        valid_levels = ['TRACE', 'DEBUG', 'INFO', 'SUCCESS', 'WARNING', 'ERROR', 'CRITICAL']
        if v not in valid_levels:
            msg = f"⚠️  Invalid log level '{v}'. Using 'WARNING'. Valid: {valid_levels}"
            warnings.warn(msg, UserWarning, stacklevel=2)
            logger.warning(msg)
            return 'WARNING'
        return v


class Settings(BaseSettings):
    """
    Library configuration loaded from the environment or a .env file.

    Example:
        settings = get_settings()
        tol = settings.quadrature.rel_tol
        dx_rule = settings.grid.points_per_hbar
    """

    model_config = SettingsConfigDict(
        env_file='.env',
        env_file_encoding='utf-8',
        case_sensitive=False,
        env_prefix='MAGWEYL_',
        env_nested_delimiter='__',  # MAGWEYL_GRID__MAX_POINTS → grid.max_points
        extra='ignore'
    )

    quadrature: QuadratureSettings = Field(
        default_factory=QuadratureSettings,
        description="Orbit-integral quadrature settings"
    )
    roots: RootSettings = Field(
        default_factory=RootSettings,
        description="Root finding settings"
    )
    integrator: IntegratorSettings = Field(
        default_factory=IntegratorSettings,
        description="Trajectory integrator settings"
    )
    grid: GridSettings = Field(
        default_factory=GridSettings,
        description="Reduced operator grid settings"
    )
    asymptotics: AsymptoticsSettings = Field(
        default_factory=AsymptoticsSettings,
        description="Correction term settings"
    )
    logging: LoggingSettings = Field(
        default_factory=LoggingSettings,
        description="Logging settings"
    )

    def model_post_init(self, __context) -> None:
        """Log configuration status after initialization"""
        self._log_configuration_status()

    def _log_configuration_status(self):
        """Log the numerical configuration at debug level"""
        logger.debug("=" * 60)
        logger.debug("Configuration Loaded Successfully")
        logger.debug("=" * 60)
        logger.debug(f"Quadrature: rel_tol={self.quadrature.rel_tol:g}, levels≤{self.quadrature.max_levels}")
        logger.debug(f"Roots: tol={self.roots.root_tolerance:g}, fd_step={self.roots.fd_step:g}")
        logger.debug(f"Integrator: {self.integrator.scheme}, {self.integrator.steps_per_period} steps/period")
        logger.debug(f"Grid: {self.grid.points_per_hbar:g} pts/hbar, max {self.grid.max_points} points")
        if not self.asymptotics.extrapolate:
            logger.warning("⚠️  Richardson extrapolation disabled - n0 integrals carry O(dx^2) bias")
        logger.debug("=" * 60)


class IsolatedSettings(Settings):
    """Settings that ignore the environment; every value comes from init arguments"""

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> tuple[PydanticBaseSettingsSource, ...]:
        return (init_settings,)


# Singleton instance
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """
    Get or create Settings singleton.
    Loads from the environment on first call, returns cached instance afterwards.

    Returns:
        Settings instance

    Example:
        from config import get_settings

        settings = get_settings()
        print(settings.grid.max_points)
    """
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def use_settings(settings: Settings) -> Settings:
    """
    Install an explicit Settings instance as the singleton.

    Args:
        settings: Instance to use for all later get_settings() calls

    Returns:
        The installed instance
    """
    global _settings
    _settings = settings
    return _settings


def reset_settings():
    """
    Reset settings singleton (useful for testing).

    Example:
        reset_settings()
        settings = get_settings()  # Will reload from the environment
    """
    global _settings
    _settings = None
