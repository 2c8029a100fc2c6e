"""Exact expansion of shorthand kernels into per-step full tables."""
import logging

import numpy as np

from src.core.errors import SpecStructureError
from src.models.system import (
    KERNEL_OUTPUT,
    Alphabets,
    BscKernel,
    ConstantKernel,
    IdentityKernel,
    KernelRole,
    MemorylessKernel,
    RepetitionKernel,
    StochasticKernel,
    Stream,
)

from .indexing import designated_input_axis, history_coordinates, history_radices

logger = logging.getLogger(__name__)


def _designated_input_size(role: KernelRole, alphabets: Alphabets) -> int:
    stream = Stream.M if role == KernelRole.ENCODER else history_coordinates(role, 1)[-1].stream
    return alphabets.size(stream)


def _input_matrix(kernel, role: KernelRole, alphabets: Alphabets) -> np.ndarray:
    """(|input|, |output|) matrix of a memoryless-style shorthand."""
    n_in = _designated_input_size(role, alphabets)
    n_out = alphabets.size(KERNEL_OUTPUT[role])

    if isinstance(kernel, BscKernel):
        if n_in != 2 or n_out != 2:
            raise SpecStructureError(
                f"{role}: bsc requires binary alphabets, got input {n_in} and output {n_out}"
            )
        eps = kernel.eps
        return np.array([[1.0 - eps, eps], [eps, 1.0 - eps]])

    if isinstance(kernel, (IdentityKernel, RepetitionKernel)):
        if isinstance(kernel, RepetitionKernel) and role != KernelRole.ENCODER:
            raise SpecStructureError(f"{role}: repetition is an encoder shorthand")
        if n_in != n_out:
            raise SpecStructureError(
                f"{role}: {kernel.type} needs equal alphabets, got input {n_in} and output {n_out}"
            )
        return np.eye(n_out)

    if isinstance(kernel, ConstantKernel):
        if kernel.value >= n_out:
            raise SpecStructureError(f"{role}: constant {kernel.value} outside output alphabet of size {n_out}")
        matrix = np.zeros((n_in, n_out))
        matrix[:, kernel.value] = 1.0
        return matrix

    if isinstance(kernel, MemorylessKernel):
        matrix = np.array(kernel.rows, dtype=np.float64)
        if matrix.ndim != 2 or matrix.shape != (n_in, n_out):
            raise SpecStructureError(
                f"{role}: memoryless rows must have shape ({n_in}, {n_out}), got {matrix.shape}"
            )
        return matrix

    raise SpecStructureError(f"{role}: unknown kernel type {type(kernel).__name__}")


def expand_kernel(kernel, role: KernelRole, alphabets: Alphabets, horizon: int) -> StochasticKernel:
    """
    Canonical full-table form of ``kernel``.

    Shorthands read their designated input (x_0 for the encoder, x_i for the
    forward channel, y_i for the feedback channel) and are time-invariant. A
    full table is returned unchanged apart from resolving the determinism flag.
    """
    if isinstance(kernel, StochasticKernel):
        if kernel.deterministic is None:
            return kernel.model_copy(update={"deterministic": kernel.is_point_mass()})
        return kernel

    matrix = _input_matrix(kernel, role, alphabets)
    steps = []
    for step in range(1, horizon + 1):
        radices = history_radices(role, step, alphabets)
        rows = int(np.prod(radices, dtype=np.int64))
        symbols = np.unravel_index(np.arange(rows), radices)[designated_input_axis(role, step)]
        steps.append(matrix[symbols])

    expanded = StochasticKernel(steps=steps)
    logger.debug(f"Expanded {role} shorthand '{kernel.type}' over {horizon} steps")
    return expanded.model_copy(update={"deterministic": expanded.is_point_mass()})
