"""Python version compatibility shims."""
from enum import Enum

try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    class StrEnum(str, Enum):
        """Backport of enum.StrEnum (Python 3.11+)."""

        __str__ = str.__str__
        __format__ = str.__format__

__all__ = ["StrEnum"]
