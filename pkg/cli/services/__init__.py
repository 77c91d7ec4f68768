"""
CLI Services
Long-running work behind the commands
"""

from .verify_service import AcceptanceSuite, CheckResult

__all__ = ["AcceptanceSuite", "CheckResult"]
