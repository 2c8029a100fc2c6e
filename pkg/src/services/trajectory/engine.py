"""
Trajectory engine: exact joint construction, marginalization, entropy and CMI.

The joint is a dense array with one axis per coordinate in the layout
(x_0, x_1, y_1, e_1, ..., x_n, y_n, e_n). Reductions use numpy's fixed
pairwise summation, so results do not depend on how work is scheduled.
"""
import csv
import logging
from pathlib import Path
from typing import Optional, Union

import numpy as np
from scipy.stats import entropy as scipy_entropy

from src.core import get_settings
from src.core.errors import InternalConsistencyError, SelectorError, SpecStructureError
from src.models.distribution import (
    MASS_TOLERANCE,
    DistributionKind,
    Selector,
    TrajectoryDistribution,
    trajectory_coordinates,
)
from src.models.system import KernelRole, SystemSpec
from src.services.system_model import check_guard, expand, history_coordinates

logger = logging.getLogger(__name__)


def build_joint(spec: SystemSpec, guard: Optional[int] = None) -> TrajectoryDistribution:
    """
    Exact joint p(x_0) * prod_i p(x_i|x_0,x^{i-1},e^{i-1}) p(y_i|x^i,y^{i-1}) p(e_i|e^{i-1},y^i).

    Args:
        spec: System spec; shorthand kernels are expanded first
        guard: Largest table allowed, in entries (default: settings.guard)

    Returns:
        Exact distribution over the 3n+1 trajectory coordinates

    Raises:
        GuardExceededError: Table would exceed the guard; raised before allocating
        SpecStructureError: Rows do not form a distribution (spec was not validated)
    """
    check_guard(spec.dims, guard)
    spec = expand(spec)
    alphabets = spec.alphabets

    joint = np.array(spec.message_prior, dtype=np.float64)
    for step in range(1, spec.horizon + 1):
        for role in (KernelRole.ENCODER, KernelRole.FORWARD, KernelRole.FEEDBACK):
            table = spec.kernel(role).steps[step - 1]
            shape = [1] * joint.ndim + [table.shape[1]]
            for coord in history_coordinates(role, step):
                shape[coord.position] = alphabets.size(coord.stream)
            joint = joint[..., np.newaxis] * table.reshape(shape)

    mass = float(joint.sum())
    if abs(mass - 1.0) > MASS_TOLERANCE or float(joint.min()) < 0.0:
        raise SpecStructureError(
            f"joint has mass {mass!r} or negative entries; validate the spec before building"
        )

    coords = trajectory_coordinates(spec.horizon)
    logger.debug(f"Built joint over {len(coords)} coordinates ({joint.size} entries)")
    return TrajectoryDistribution(
        coordinates=coords,
        shape=joint.shape,
        probabilities=joint.reshape(-1),
        horizon=spec.horizon,
        kind=DistributionKind.EXACT,
    )


def _axes(dist: TrajectoryDistribution, selector: Selector) -> list[int]:
    axes = []
    for coord in selector.coordinates:
        axis = dist.axis_of(coord)
        if axis is None:
            raise SelectorError(f"coordinate {coord.label} is not part of this distribution")
        axes.append(axis)
    return axes


def _marginal_table(dist: TrajectoryDistribution, keep: Selector) -> np.ndarray:
    """Marginal with one axis per kept coordinate, in the distribution's order."""
    key = keep.coordinates
    cached = dist.cached_marginal(key)
    if cached is not None:
        return cached
    axes = _axes(dist, keep)
    drop = tuple(a for a in range(len(dist.coordinates)) if a not in axes)
    table = dist.table.sum(axis=drop) if drop else dist.table.copy()
    # sum() keeps remaining axes in increasing order; reorder to match the selector
    order = np.argsort(np.argsort(axes))
    table = np.ascontiguousarray(np.transpose(table, order)) if table.ndim > 1 else table
    dist.store_marginal(key, table)
    return table


def marginal(dist: TrajectoryDistribution, keep: Selector) -> TrajectoryDistribution:
    """
    Sum out every coordinate not in ``keep``.

    Args:
        dist: Exact or empirical joint
        keep: Non-empty selector of coordinates present in ``dist``

    Returns:
        Distribution over ``keep`` in layout order, same horizon and kind
    """
    if not keep:
        raise SelectorError("marginal needs a non-empty selector")
    table = _marginal_table(dist, keep)
    return TrajectoryDistribution(
        coordinates=keep.coordinates,
        shape=table.shape,
        probabilities=np.array(table, dtype=np.float64).reshape(-1),
        horizon=dist.horizon,
        kind=dist.kind,
    )


def _clamp(value: float, what: str, threshold: Optional[float]) -> float:
    threshold = threshold if threshold is not None else get_settings().clamp_threshold
    if value >= 0.0:
        return value
    if value > -threshold:
        return 0.0
    raise InternalConsistencyError(f"{what} = {value!r} bits is negative beyond {threshold}")


def entropy(dist: TrajectoryDistribution, a: Selector) -> float:
    """Shannon entropy in bits of the marginal on ``a`` (0 log 0 = 0)."""
    if not a:
        raise SelectorError("entropy needs a non-empty selector")
    p = _marginal_table(dist, a).reshape(-1)
    return float(scipy_entropy(p, base=2))


def conditional_entropy(dist: TrajectoryDistribution, a: Selector, c: Selector) -> float:
    """H(A | C) = H(A, C) - H(C); C may be empty."""
    if not a.isdisjoint(c):
        raise SelectorError(f"selectors {a.describe()} and {c.describe()} overlap")
    if not c:
        return entropy(dist, a)
    return entropy(dist, a | c) - entropy(dist, c)


def cmi(
    dist: TrajectoryDistribution,
    a: Selector,
    b: Selector,
    c: Optional[Selector] = None,
    clamp_threshold: Optional[float] = None,
) -> float:
    """
    I(A;B|C) = sum p(a,b,c) log2[p(a,b,c) p(c) / (p(a,c) p(b,c))] in bits.

    Zero-mass cells contribute nothing. An empty A or B gives exactly 0; an
    empty C gives plain mutual information.

    Args:
        dist: Joint containing every selected coordinate
        a: First argument
        b: Second argument
        c: Conditioning set (default: empty)
        clamp_threshold: Negative values above minus this are reported as 0
            (default: settings.clamp_threshold)

    Returns:
        Value in bits, never negative

    Raises:
        SelectorError: Two selectors overlap or name a missing coordinate
        InternalConsistencyError: Value is negative beyond the clamp threshold
    """
    c = c if c is not None else Selector()
    for x, y in ((a, b), (a, c), (b, c)):
        if not x.isdisjoint(y):
            raise SelectorError(f"selectors {x.describe()} and {y.describe()} overlap")
    if not a or not b:
        return 0.0

    union = a | b | c
    table = _marginal_table(dist, union)
    position = {coord: i for i, coord in enumerate(union.coordinates)}
    perm = [position[coord] for coord in a.coordinates + b.coordinates + c.coordinates]
    sizes = table.shape
    size_a = int(np.prod([sizes[position[x]] for x in a.coordinates]))
    size_b = int(np.prod([sizes[position[x]] for x in b.coordinates]))
    pabc = np.transpose(table, perm).reshape(size_a, size_b, -1)

    pc = pabc.sum(axis=(0, 1), keepdims=True)
    pac = pabc.sum(axis=1, keepdims=True)
    pbc = pabc.sum(axis=0, keepdims=True)
    mask = pabc > 0
    numerator = (pabc * pc)[mask]
    denominator = np.broadcast_to(pac * pbc, pabc.shape)[mask]
    value = float(np.sum(pabc[mask] * np.log2(numerator / denominator)))
    return _clamp(value, f"I({a.describe()};{b.describe()}|{c.describe()})", clamp_threshold)


def dump_csv(dist: TrajectoryDistribution, path: Union[str, Path]) -> Path:
    """Debug dump: one row per positive-mass trajectory, coordinates then probability."""
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f)
        writer.writerow([c.label for c in dist.coordinates] + ["probability"])
        flat = dist.probabilities
        for index in np.flatnonzero(flat > 0):
            symbols = np.unravel_index(index, dist.shape)
            writer.writerow([int(s) for s in symbols] + [repr(float(flat[index]))])
    logger.info(f"💾 Wrote joint dump to {path}")
    return path
