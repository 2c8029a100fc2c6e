"""
Seeded fuzzing of the identity suite over random systems.

Trial dims and seeds are drawn up front from a PCG64 generator seeded with the
master seed, so the summary is identical for any worker count.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Optional

import numpy as np

from src.core import get_settings
from src.core.errors import InfoFlowError
from src.models.report import FuzzSummary, FuzzTrial, FuzzViolation, IdentityId, Verdict
from src.models.run import EncoderMode
from src.models.system import Alphabets, Dims
from src.services.system_model import check_guard, generate_random
from src.services.trajectory import build_joint

from .verifier import deviation_bits, verify_all

logger = logging.getLogger(__name__)

MIN_ALPHABET = 2


def trial_plan(master_seed: int, trials: int, alphabet_max: int, max_n: int) -> list[tuple[int, Dims]]:
    """(seed, dims) for every trial, derived deterministically from ``master_seed``."""
    rng = np.random.Generator(np.random.PCG64(master_seed))
    low = min(MIN_ALPHABET, alphabet_max)
    plan = []
    for _ in range(trials):
        m, x, y, e = (int(s) for s in rng.integers(low, alphabet_max + 1, size=4))
        n = int(rng.integers(1, max_n + 1))
        seed = int(rng.integers(0, 2**63))
        plan.append((seed, Dims(alphabets=Alphabets(m=m, x=x, y=y, e=e), horizon=n)))
    return plan


def _run_trial(args: tuple[int, int, Dims, EncoderMode, float, Optional[int]]) -> FuzzTrial:
    index, seed, dims, mode, tolerance, guard = args
    spec = generate_random(seed, dims, mode, guard=guard)
    result = verify_all(build_joint(spec, guard=guard), spec, tolerance)
    return FuzzTrial(
        index=index,
        seed=seed,
        dims=dims,
        deterministic_encoder=result.deterministic_encoder,
        residuals={r.identity_id: r.residual_bits for r in result.reports},
        verdicts={r.identity_id: r.verdict for r in result.reports},
        deviations={r.identity_id: deviation_bits(r) for r in result.reports},
    )


def fuzz(
    master_seed: int,
    trials: int,
    alphabet_max: int = 3,
    max_n: int = 4,
    encoder_mode: EncoderMode = EncoderMode.DETERMINISTIC,
    tolerance: Optional[float] = None,
    jobs: int = 1,
    guard: Optional[int] = None,
) -> FuzzSummary:
    """
    Verify every identity on ``trials`` random systems.

    Alphabet sizes are drawn from [2, alphabet_max] and horizons from
    [1, max_n]. The summary keeps, per identity, the largest deviation over
    in-scope trials, and full reproduction info for every violation.

    Args:
        master_seed: Seed from which every trial seed and shape is derived
        trials: Number of random systems
        alphabet_max: Largest alphabet size drawn
        max_n: Largest horizon drawn
        encoder_mode: Deterministic or stochastic random encoders
        tolerance: Allowed residual in bits (default: settings.tolerance)
        jobs: Worker processes; the summary does not depend on this
        guard: Largest dense table per trial (default: settings.guard)

    Returns:
        Summary that is identical for identical arguments

    Raises:
        InfoFlowError: Non-positive trial count or size bounds
        GuardExceededError: The largest drawn shape would exceed the guard
    """
    settings = get_settings()
    tolerance = tolerance if tolerance is not None else settings.tolerance
    if trials < 1:
        raise InfoFlowError(f"fuzz needs at least one trial, got {trials}")
    if alphabet_max < 1 or max_n < 1:
        raise InfoFlowError("alphabet_max and max_n must be positive")
    worst = Dims(
        alphabets=Alphabets(m=alphabet_max, x=alphabet_max, y=alphabet_max, e=alphabet_max),
        horizon=max_n,
    )
    check_guard(worst, guard)

    plan = trial_plan(master_seed, trials, alphabet_max, max_n)
    work = [(i, seed, dims, encoder_mode, tolerance, guard) for i, (seed, dims) in enumerate(plan)]

    logger.info(f"🎲 Fuzzing {trials} systems (seed {master_seed}, mode {encoder_mode}, jobs {jobs})")
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_run_trial, work, chunksize=max(1, trials // (4 * jobs))))
    else:
        records = [_run_trial(item) for item in work]

    max_dev = {identity: 0.0 for identity in IdentityId}
    out_of_scope = {identity: 0 for identity in IdentityId}
    violations = []
    for record in records:
        for identity in IdentityId:
            verdict = record.verdicts[identity]
            if verdict == Verdict.OUT_OF_SCOPE:
                out_of_scope[identity] += 1
                continue
            max_dev[identity] = max(max_dev[identity], record.deviations[identity])
            if verdict == Verdict.VIOLATED:
                violations.append(FuzzViolation(
                    trial=record.index,
                    seed=record.seed,
                    dims=record.dims,
                    identity_id=identity,
                    residual_bits=record.residuals[identity],
                ))

    for v in violations:
        logger.warning(f"❌ trial {v.trial} (seed {v.seed}) violates {v.identity_id}: {v.residual_bits:.3e}")
    logger.info(f"🏁 Fuzz finished: {len(violations)} violations")

    return FuzzSummary(
        master_seed=master_seed,
        trials=trials,
        encoder_mode=encoder_mode.value,
        tolerance=tolerance,
        max_abs_residual=max_dev,
        violation_count=len(violations),
        violations=violations,
        out_of_scope_counts=out_of_scope,
        trial_records=records,
    )
