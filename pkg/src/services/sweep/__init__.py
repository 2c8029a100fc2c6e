"""Parameter sweep package."""

from .service import sweep, variant, write_sweep_csv

__all__ = [
    "sweep",
    "variant",
    "write_sweep_csv",
]
