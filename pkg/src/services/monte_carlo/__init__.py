"""Monte Carlo sampling and plug-in estimation package."""

from .sampler import (
    convergence_study,
    empirical_distribution,
    estimate,
    sample,
    write_batch_csv,
)

__all__ = [
    "convergence_study",
    "empirical_distribution",
    "estimate",
    "sample",
    "write_batch_csv",
]
