"""Generalized directed information over a trajectory distribution."""
import logging
import math
from typing import Optional

from src.core.errors import QueryError
from src.models.distribution import Selector, TrajectoryDistribution
from src.models.query import InfoForm, InfoQuery
from src.models.system import Stream
from src.services.trajectory import cmi, conditional_entropy

logger = logging.getLogger(__name__)


def _seq(stream: Stream, upto: int) -> Selector:
    """stream^upto; empty for upto < 1 except the message, which is always x_0."""
    return Selector.stream(stream, upto)


def _check_query(dist: TrajectoryDistribution, query: InfoQuery) -> int:
    n = dist.horizon
    k = n if query.horizon_override is None else query.horizon_override
    if k > n:
        raise QueryError(f"horizon override {k} exceeds distribution horizon {n}")
    for coord in query.static_condition.coordinates:
        if coord.time > n:
            raise QueryError(f"static condition {coord.label} lies beyond horizon {n}")
    if query.form == InfoForm.DIRECTED_INFORMATION and query.dst == Stream.M:
        raise QueryError("the message has no time index and cannot be a directed-information destination")
    return k


def generalized_di(
    dist: TrajectoryDistribution,
    query: InfoQuery,
    clamp_threshold: Optional[float] = None,
) -> tuple[float, list[float]]:
    """
    Evaluate ``query`` on ``dist``.

    Directed information sums I(src^{i-lag}; dst_i | dst^{i-1}, conds, static)
    for i = 1..k; mutual information and entropy report their chain-rule
    expansion over the destination stream as terms.

    Args:
        dist: Exact or empirical joint over a full trajectory
        query: Form, streams, lag, causal conditions and static condition
        clamp_threshold: Passed through to :func:`cmi`

    Returns:
        Value in bits and the per-step terms

    Raises:
        QueryError: Upto, lag or static condition does not fit ``dist``
    """
    k = _check_query(dist, query)
    static = query.static_condition
    dst = query.dst

    if query.form == InfoForm.ENTROPY:
        if dst == Stream.M:
            terms = [conditional_entropy(dist, Selector.message(), static)]
        else:
            terms = [
                conditional_entropy(dist, Selector.at(dst, i), _seq(dst, i - 1) | static)
                for i in range(1, k + 1)
            ]
        return math.fsum(terms), terms

    src = _seq(query.src.stream, k - query.src.lag)

    if query.form == InfoForm.MUTUAL_INFORMATION:
        if dst == Stream.M:
            value = cmi(dist, src, Selector.message(), static, clamp_threshold)
            return value, [value]
        terms = [
            cmi(dist, src, Selector.at(dst, i), _seq(dst, i - 1) | static, clamp_threshold)
            for i in range(1, k + 1)
        ]
        value = cmi(dist, src, _seq(dst, k), static, clamp_threshold) if k >= 1 else 0.0
        return value, terms

    terms = []
    for i in range(1, k + 1):
        condition = _seq(dst, i - 1) | static
        for c in query.causal_conditions:
            condition = condition | _seq(c.stream, i - c.lag)
        source = _seq(query.src.stream, i - query.src.lag)
        terms.append(cmi(dist, source, Selector.at(dst, i), condition, clamp_threshold))
    logger.debug(f"{query.formula()} terms: {terms}")
    return math.fsum(terms), terms
