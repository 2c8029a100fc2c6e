"""fuzz: verify the identity suite on seeded random systems."""
import logging

from src.models.report import IdentityId
from src.models.run import OutputFormat, RunConfig
from src.services.identities import fuzz

from .common import EXIT_OK, EXIT_VIOLATION, bits, summary, write_json, write_rows

logger = logging.getLogger(__name__)


def run(config: RunConfig) -> int:
    result = fuzz(
        master_seed=config.seed,
        trials=config.trials,
        alphabet_max=config.alphabet_max,
        max_n=config.max_n,
        encoder_mode=config.encoder_mode,
        tolerance=config.tolerance,
        jobs=config.jobs,
    )

    if config.output_format == OutputFormat.CSV:
        header = ["trial", "seed", "m", "x", "y", "e", "n"] + [f"residual[{i.value}]" for i in IdentityId]
        rows = []
        for t in result.trial_records:
            a = t.dims.alphabets
            rows.append(
                [t.index, t.seed, a.m, a.x, a.y, a.e, t.dims.horizon]
                + [bits(t.residuals[i]) for i in IdentityId]
            )
        write_rows(header, rows, config)
    else:
        write_json(result, config)

    lines = [f"{result.trials} trials, {result.violation_count} violations"]
    for identity in IdentityId:
        skipped = result.out_of_scope_counts.get(identity, 0)
        note = f" ({skipped} out of scope)" if skipped else ""
        lines.append(f"  {identity:<22} max deviation {result.max_abs_residual[identity]:.3e}{note}")
    summary(lines, config)
    return EXIT_OK if result.ok else EXIT_VIOLATION
