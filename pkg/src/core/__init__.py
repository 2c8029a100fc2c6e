"""Core configuration module for InfoFlow."""

from .config import Settings, get_settings
from .errors import (
    InfoFlowError,
    SpecStructureError,
    SpecFileError,
    GuardExceededError,
    SelectorError,
    QueryError,
    SweepParameterError,
    InternalConsistencyError,
)
from .logging import setup_logging, get_logger

__all__ = [
    "Settings",
    "get_settings",
    "setup_logging",
    "get_logger",
    "InfoFlowError",
    "SpecStructureError",
    "SpecFileError",
    "GuardExceededError",
    "SelectorError",
    "QueryError",
    "SweepParameterError",
    "InternalConsistencyError",
]
