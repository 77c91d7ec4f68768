"""
Run configuration for the command-line surface
"""

from enum import Enum
from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"
    SVG = "svg"


class RunConfig(BaseModel):
    """Everything a CLI run depends on, parsed from its flags"""
    command: str = Field(..., description="Command group (dynamics, spectrum, asympt, verify)")
    subcommand: Optional[str] = Field(default=None, description="Subcommand within the group")
    output_path: Optional[str] = Field(default=None, description="Output file, stdout when absent")
    format: OutputFormat = Field(default=OutputFormat.CSV)
    workers: int = Field(default=1, ge=1, le=64)
    params: Dict[str, Any] = Field(default_factory=dict, description="Typed subcommand parameters")

    model_config = ConfigDict(frozen=True)
