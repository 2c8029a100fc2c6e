"""
Ancestral sampling of closed-loop trajectories and plug-in estimation.

Trajectories are drawn in factorization order x_0, then x_i, y_i, e_i for
each step. Every block of ``sample_block_size`` trajectories owns a PCG64
generator spawned from ``SeedSequence(seed)``, so a batch depends only on
(spec, count, seed) and never on the worker count.

Plug-in estimates are biased upward for finite samples; no correction is applied.
"""
import csv
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional, Sequence, Union

import numpy as np

from src.core import get_settings
from src.core.errors import InfoFlowError
from src.models.distribution import DistributionKind, TrajectoryDistribution, trajectory_coordinates
from src.models.query import InfoQuery
from src.models.report import ConvergenceRow, ConvergenceTable
from src.models.sample import SampleBatch
from src.models.system import Dims, KernelRole, SystemSpec
from src.services.info import generalized_di, query_for
from src.services.system_model import check_guard, expand, history_coordinates, spec_digest
from src.services.trajectory import build_joint

logger = logging.getLogger(__name__)

_ROLE_ORDER = (KernelRole.ENCODER, KernelRole.FORWARD, KernelRole.FEEDBACK)


def _draw(rng: np.random.Generator, rows: np.ndarray) -> np.ndarray:
    """Inverse-CDF draw of one symbol per probability row."""
    cum = np.cumsum(rows, axis=1)
    u = rng.random(rows.shape[0])[:, np.newaxis] * cum[:, -1:]
    return np.argmax(u < cum, axis=1)


def _sample_block(spec: SystemSpec, size: int, seed_seq: np.random.SeedSequence) -> np.ndarray:
    rng = np.random.Generator(np.random.PCG64(seed_seq))
    alphabets = spec.alphabets
    block = np.zeros((size, 3 * spec.horizon + 1), dtype=np.int64)
    prior = np.broadcast_to(spec.message_prior, (size, alphabets.m))
    block[:, 0] = _draw(rng, prior)
    for step in range(1, spec.horizon + 1):
        for offset, role in enumerate(_ROLE_ORDER, start=1):
            table = spec.kernel(role).steps[step - 1]
            history = history_coordinates(role, step)
            columns = tuple(block[:, c.position] for c in history)
            radices = tuple(alphabets.size(c.stream) for c in history)
            rows = np.ravel_multi_index(columns, radices)
            block[:, 3 * (step - 1) + offset] = _draw(rng, table[rows])
    return block


def sample(
    spec: SystemSpec,
    count: int,
    seed: int,
    jobs: int = 1,
    block_size: Optional[int] = None,
) -> SampleBatch:
    """
    Draw ``count`` i.i.d. trajectories from the joint of ``spec``.

    Args:
        spec: Validated spec; shorthands are expanded first
        count: Number of trajectories
        seed: Root of the per-block seed sequence
        jobs: Threads drawing blocks; the batch does not depend on this
        block_size: Trajectories per seeded block (default: settings.sample_block_size)

    Returns:
        Batch whose rows are identical for identical (spec, count, seed, block_size)
    """
    if count < 1:
        raise InfoFlowError(f"sample count must be positive, got {count}")
    block_size = block_size or get_settings().sample_block_size
    spec = expand(spec)

    n_blocks = math.ceil(count / block_size)
    sizes = [min(block_size, count - b * block_size) for b in range(n_blocks)]
    children = np.random.SeedSequence(seed).spawn(n_blocks)

    logger.info(f"🎲 Sampling {count} trajectories in {n_blocks} blocks (seed {seed})")
    if jobs > 1 and n_blocks > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            blocks = list(pool.map(lambda args: _sample_block(spec, *args), zip(sizes, children)))
    else:
        blocks = [_sample_block(spec, size, child) for size, child in zip(sizes, children)]

    return SampleBatch(
        count=count,
        horizon=spec.horizon,
        alphabets=spec.alphabets,
        trajectories=np.concatenate(blocks, axis=0),
        seed=seed,
        spec_digest=spec_digest(spec),
    )


def empirical_distribution(batch: SampleBatch, guard: Optional[int] = None) -> TrajectoryDistribution:
    """Normalized frequency table over the full trajectory space."""
    coords = trajectory_coordinates(batch.horizon)
    shape = tuple(batch.alphabets.size(c.stream) for c in coords)
    check_guard(Dims(alphabets=batch.alphabets, horizon=batch.horizon), guard)

    index = np.ravel_multi_index(tuple(batch.trajectories.T), shape)
    counts = np.bincount(index, minlength=int(np.prod(shape, dtype=np.int64)))
    return TrajectoryDistribution(
        coordinates=coords,
        shape=shape,
        probabilities=counts / batch.count,
        horizon=batch.horizon,
        kind=DistributionKind.EMPIRICAL,
    )


def estimate(batch: SampleBatch, query: InfoQuery, dist: Optional[TrajectoryDistribution] = None) -> float:
    """Plug-in estimate: ``query`` evaluated on the batch's empirical distribution."""
    dist = dist if dist is not None else empirical_distribution(batch)
    value, _ = generalized_di(dist, query)
    return value


def convergence_study(
    spec: SystemSpec,
    counts: Sequence[int],
    seeds: Sequence[int],
    label: str = "MI[M;E]",
    jobs: int = 1,
) -> ConvergenceTable:
    """|estimate - exact| for every (count, seed) pair, plus the max error per count."""
    exact_dist = build_joint(spec)
    query = query_for(label, spec.horizon)
    exact, _ = generalized_di(exact_dist, query)

    rows = []
    for count in counts:
        for seed in seeds:
            value = estimate(sample(spec, count, seed, jobs=jobs), query)
            rows.append(ConvergenceRow(
                count=count,
                seed=seed,
                estimate_bits=value,
                exact_bits=exact,
                abs_error=abs(value - exact),
            ))
        logger.debug(f"{label}: count {count} done")

    max_error = {count: max(r.abs_error for r in rows if r.count == count) for count in counts}
    logger.info(f"📉 Convergence of {label}: " + ", ".join(f"{c}: {e:.4f}" for c, e in max_error.items()))
    return ConvergenceTable(label=label, rows=rows, max_error_per_count=max_error)


def write_batch_csv(batch: SampleBatch, path: Union[str, Path]) -> Path:
    """One row per trajectory under the header x0, x1, y1, e1, ..."""
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow([c.label for c in trajectory_coordinates(batch.horizon)])
        writer.writerows(batch.trajectories.tolist())
    logger.info(f"💾 Wrote {batch.count} trajectories to {path}")
    return path
