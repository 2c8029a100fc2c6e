"""
System-model service: validate, expand and randomly generate closed-loop specs.

Specs are immutable; every operation returns a new spec.
"""
import hashlib
import json
import logging
from typing import Optional

import numpy as np

from src.core import get_settings
from src.core.errors import GuardExceededError, SpecStructureError
from src.models.report import ValidationReport, Violation
from src.models.run import EncoderMode
from src.models.system import (
    KERNEL_OUTPUT,
    Dims,
    KernelRole,
    StochasticKernel,
    SystemSpec,
)

from .indexing import row_count
from .kernels import expand_kernel

logger = logging.getLogger(__name__)

MAX_SEED = 2**64


def check_guard(dims: Dims, guard: Optional[int] = None) -> int:
    """Return the dense table size, raising if it exceeds the enumeration guard."""
    guard = guard if guard is not None else get_settings().guard
    required = dims.table_entries
    if required > guard:
        raise GuardExceededError(required, guard)
    return required


def expand(spec: SystemSpec) -> SystemSpec:
    """Canonical full-table form of ``spec``; the identity on already expanded specs."""
    prior = spec.message_prior
    if prior.ndim != 1 or prior.shape[0] != spec.alphabets.m:
        raise SpecStructureError(
            f"message_prior has shape {prior.shape}, expected ({spec.alphabets.m},)"
        )
    update = {
        role.value: expand_kernel(spec.kernel(role), role, spec.alphabets, spec.horizon)
        for role in KernelRole
    }
    return spec.model_copy(update=update)


def _check_structure(spec: SystemSpec) -> None:
    for role in KernelRole:
        kernel: StochasticKernel = spec.kernel(role)
        if len(kernel.steps) != spec.horizon:
            raise SpecStructureError(
                f"{role}: {len(kernel.steps)} step tables for horizon {spec.horizon}"
            )
        n_out = spec.alphabets.size(KERNEL_OUTPUT[role])
        for step, table in enumerate(kernel.steps, start=1):
            expected = (row_count(role, step, spec.alphabets), n_out)
            if table.ndim != 2 or table.shape != expected:
                raise SpecStructureError(
                    f"{role} step {step}: table shape {table.shape}, expected {expected}"
                )


def _row_problem(row: np.ndarray, tolerance: float) -> Optional[str]:
    if not np.all(np.isfinite(row)):
        return "non-finite entry"
    if np.any(row < 0):
        return f"negative entry {row.min():.3g}"
    total = row.sum()
    if abs(total - 1.0) > tolerance:
        return f"row sums to {total:.17g}"
    return None


def validate(
    spec: SystemSpec,
    repair: bool = False,
    normalization_tolerance: Optional[float] = None,
    repair_tolerance: Optional[float] = None,
) -> ValidationReport:
    """
    Check normalization and shape invariants of ``spec``.

    Structural mismatches raise :class:`SpecStructureError` and are never
    repaired. With ``repair`` set, rows off by at most ``repair_tolerance`` are
    renormalized and counted instead of reported. The returned report carries
    the expanded (and possibly repaired) spec.
    """
    settings = get_settings()
    tol = normalization_tolerance if normalization_tolerance is not None else settings.normalization_tolerance
    repair_tol = repair_tolerance if repair_tolerance is not None else settings.repair_tolerance

    expanded = expand(spec)
    _check_structure(expanded)

    violations: list[Violation] = []
    repaired = 0

    def inspect(name: str, step: int, table: np.ndarray) -> np.ndarray:
        nonlocal repaired
        fixed = table
        for r, row in enumerate(table):
            problem = _row_problem(row, tol)
            if problem is None:
                continue
            fixable = (
                repair
                and np.all(np.isfinite(row))
                and np.all(row >= 0)
                and abs(row.sum() - 1.0) <= repair_tol
            )
            if fixable:
                if fixed is table:
                    fixed = table.copy()
                fixed[r] = row / row.sum()
                repaired += 1
            else:
                violations.append(Violation(kernel=name, step=step, row=r, message=problem))
        return fixed

    prior = inspect("message_prior", 0, expanded.message_prior[np.newaxis, :])[0]

    update = {"message_prior": prior}
    for role in KernelRole:
        kernel: StochasticKernel = expanded.kernel(role)
        steps = [inspect(role.value, step, t) for step, t in enumerate(kernel.steps, start=1)]
        if role == KernelRole.ENCODER and kernel.deterministic:
            for step, table in enumerate(steps, start=1):
                point_mass = np.all((table == 0.0) | (table == 1.0), axis=1)
                for r in np.flatnonzero(~point_mass):
                    violations.append(Violation(
                        kernel=role.value, step=step, row=int(r),
                        message="declared deterministic but row is not a point mass",
                    ))
        update[role.value] = StochasticKernel(steps=steps, deterministic=kernel.deterministic)

    result = expanded.model_copy(update=update)
    if violations:
        logger.warning(f"⚠️  Spec has {len(violations)} invalid rows")
    if repaired:
        logger.info(f"🔧 Renormalized {repaired} rows")
    return ValidationReport(violations=violations, repaired_rows=repaired, spec=result)


def _random_rows(rng: np.random.Generator, rows: int, width: int) -> np.ndarray:
    """Rows of independent positive weights in (0, 1], normalized."""
    weights = 1.0 - rng.random((rows, width))
    return weights / weights.sum(axis=1, keepdims=True)


def generate_random(
    seed: int,
    dims: Dims,
    encoder_mode: EncoderMode = EncoderMode.DETERMINISTIC,
    guard: Optional[int] = None,
) -> SystemSpec:
    """
    Draw a random full-table spec.

    The generator is numpy's PCG64 seeded with ``seed``; draws happen in a fixed
    order (prior, encoder, forward channel, feedback channel, each step by step),
    so identical arguments reproduce the spec bit for bit.

    Args:
        seed: 64-bit unsigned seed
        dims: Alphabet sizes and horizon
        encoder_mode: Point-mass encoder rows, or random positive rows like the channels
        guard: Largest dense table allowed (default: settings.guard)

    Returns:
        Expanded spec of full stochastic tables
    """
    if not 0 <= seed < MAX_SEED:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    check_guard(dims, guard)

    rng = np.random.Generator(np.random.PCG64(seed))
    a = dims.alphabets
    prior = _random_rows(rng, 1, a.m)[0]

    kernels = {}
    for role in KernelRole:
        width = a.size(KERNEL_OUTPUT[role])
        steps = []
        for step in range(1, dims.horizon + 1):
            rows = row_count(role, step, a)
            if role == KernelRole.ENCODER and encoder_mode == EncoderMode.DETERMINISTIC:
                table = np.zeros((rows, width))
                table[np.arange(rows), rng.integers(0, width, size=rows)] = 1.0
            else:
                table = _random_rows(rng, rows, width)
            steps.append(table)
        deterministic = role == KernelRole.ENCODER and encoder_mode == EncoderMode.DETERMINISTIC
        kernels[role.value] = StochasticKernel(steps=steps, deterministic=deterministic)

    return SystemSpec(alphabets=a, horizon=dims.horizon, message_prior=prior, **kernels)


def spec_digest(spec: SystemSpec) -> str:
    """sha256 over the expanded spec's dimensions and table bytes."""
    expanded = expand(spec)
    digest = hashlib.sha256()
    header = {"alphabets": expanded.alphabets.model_dump(), "horizon": expanded.horizon}
    digest.update(json.dumps(header, sort_keys=True).encode())
    digest.update(np.ascontiguousarray(expanded.message_prior).tobytes())
    for role in KernelRole:
        for table in expanded.kernel(role).steps:
            digest.update(np.ascontiguousarray(table).tobytes())
    return digest.hexdigest()
