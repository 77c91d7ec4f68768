"""
Loguru sink setup
"""

import sys

from loguru import logger


def setup_logging(level: str = "WARNING") -> None:
    """
    Route all library logging to stderr at the given level.

    Args:
        level: Loguru level name
    """
    logger.remove()
    logger.add(
        sys.stderr,
        level=level.upper(),
        format="<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | {name}:{function} - {message}",
    )
