"""Trajectory engine package."""

from .engine import build_joint, cmi, conditional_entropy, dump_csv, entropy, marginal

__all__ = [
    "build_joint",
    "cmi",
    "conditional_entropy",
    "dump_csv",
    "entropy",
    "marginal",
]
