"""
Acceptance criteria catalogue
Loads config/acceptance.yaml into typed criteria for the verify suite
"""

from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml
from loguru import logger
from pydantic import BaseModel, Field


DEFAULT_ACCEPTANCE_FILE = Path(__file__).parent / "acceptance.yaml"


class Criterion(BaseModel):
    """One acceptance criterion with its thresholds"""
    id: str = Field(..., description="Stable criterion identifier")
    title: str = Field(..., description="Short human-readable title")
    target: str = Field(..., description="What the measurement must satisfy")
    quick: bool = Field(default=False, description="Part of the sub-minute subset")
    params: Dict[str, Any] = Field(default_factory=dict, description="Tolerances and sample points")


def load_acceptance(path: Optional[Path] = None) -> List[Criterion]:
    """
    Load acceptance criteria from YAML.

    Args:
        path: Alternative YAML file (defaults to config/acceptance.yaml)

    Returns:
        Criteria in file order

    Raises:
        FileNotFoundError: If the file does not exist
    """
    path = Path(path) if path else DEFAULT_ACCEPTANCE_FILE
    with open(path, 'r', encoding='utf-8') as f:
        data = yaml.safe_load(f) or {}

    criteria = [Criterion(**item) for item in data.get('criteria', [])]
    logger.debug(f"Loaded {len(criteria)} acceptance criteria from {path}")
    return criteria
