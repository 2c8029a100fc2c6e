"""verify: run the identity suite on one spec."""
import logging

from src.models.run import OutputFormat, RunConfig
from src.services.identities import proof_trace_lines, verify_all
from src.services.system_model import load_spec
from src.services.trajectory import build_joint

from .common import EXIT_OK, EXIT_VIOLATION, bits, summary, write_json, write_rows

logger = logging.getLogger(__name__)


def run(config: RunConfig) -> int:
    spec = load_spec(config.spec_path)
    result = verify_all(build_joint(spec), spec, config.tolerance)

    if config.output_format == OutputFormat.CSV:
        write_rows(
            ["identity", "verdict", "lhs_bits", "rhs_bits", "residual_bits", "gap_bits"],
            (
                [
                    r.identity_id.value,
                    r.verdict.value,
                    bits(r.lhs_bits),
                    bits(sum(c.value_bits for c in r.rhs_components)),
                    bits(r.residual_bits),
                    "" if r.gap_bits is None else bits(r.gap_bits),
                ]
                for r in result.reports
            ),
            config,
        )
    elif config.proof_trace:
        write_json(result, config)
    else:
        # per-step terms only travel with --proof-trace
        write_json(result.model_copy(update={
            "reports": [r.model_copy(update={"proof_trace": []}) for r in result.reports]
        }), config)

    lines = [f"{r.identity_id:<22} {r.verdict:<13} residual {r.residual_bits:+.3e}" for r in result.reports]
    if config.proof_trace:
        for report in result.reports:
            lines.append("")
            lines.extend(proof_trace_lines(report))
    summary(lines, config)
    return EXIT_OK if result.all_hold else EXIT_VIOLATION
