"""
Domain exceptions
Every numerical failure the library reports carries a stable code and details
"""

from typing import Any, Dict, Optional


class SpectralError(Exception):
    """Base class for domain errors raised by the numerical modules"""

    code = "spectral_error"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        self.message = message
        self.details = details or {}
        super().__init__(self.message)

    def __str__(self):
        return f"[{self.code}] {self.message}"

    def to_dict(self) -> Dict[str, Any]:
        """Machine-readable form written to stderr by the CLI"""
        return {"error": self.code, "message": self.message, "details": self.details}


class DegenerateLevel(SpectralError):
    """Energy level collapses to a point or the wells touch (|k| = 1)"""
    code = "degenerate_level"


class EmptyLevel(SpectralError):
    """No classically allowed region on the requested level"""
    code = "empty_level"


class NoBracket(SpectralError):
    """Root finder could not find a sign change"""
    code = "no_bracket"


class StepTooLarge(SpectralError):
    """Energy drift of an integrated trajectory exceeded the tolerance"""
    code = "step_too_large"


class SpanTooShort(SpectralError):
    """Trajectory does not cover enough periods"""
    code = "span_too_short"


class ResourceLimit(SpectralError):
    """Discretisation would exceed the configured size"""
    code = "resource_limit"


class WindowInvalid(SpectralError):
    """Spectral window outside the region where the level sets are regular"""
    code = "window_invalid"


class NotIsolated(SpectralError):
    """Requested eigenvalue is not isolated"""
    code = "not_isolated"


class NotConverged(SpectralError):
    """Inverse iteration left a residual above tolerance"""
    code = "not_converged"


class CrossingDetected(SpectralError):
    """Tracked eigenvalue came too close to a neighbour"""
    code = "crossing_detected"


class DomainNotClosed(SpectralError):
    """n0 did not vanish before the xi2 cap"""
    code = "domain_not_closed"
