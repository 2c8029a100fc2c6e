"""Service layer for InfoFlow.

Subpackages: system_model, trajectory, info, identities, monte_carlo, sweep.
"""
