"""simulate: exact catalog next to plug-in estimates from sampled trajectories."""
import logging

from src.models.report import SimulationEntry, SimulationReport
from src.models.run import OutputFormat, RunConfig
from src.services.info import named_quantities
from src.services.monte_carlo import empirical_distribution, sample, write_batch_csv
from src.services.system_model import load_spec
from src.services.trajectory import build_joint

from .common import EXIT_OK, bits, summary, write_json, write_rows

logger = logging.getLogger(__name__)


def run(config: RunConfig) -> int:
    spec = load_spec(config.spec_path)
    exact = named_quantities(build_joint(spec))
    batch = sample(spec, config.samples, config.seed, jobs=config.jobs)
    if config.batch_out is not None:
        write_batch_csv(batch, config.batch_out)
    estimated = named_quantities(empirical_distribution(batch))

    entries = [
        SimulationEntry(
            label=q.label,
            exact_bits=q.value_bits,
            estimate_bits=estimated.value(q.label),
            abs_error=abs(estimated.value(q.label) - q.value_bits),
        )
        for q in exact.quantities
    ]
    report = SimulationReport(
        samples=batch.count,
        seed=batch.seed,
        spec_digest=batch.spec_digest,
        batch_digest=batch.digest,
        entries=entries,
    )

    if config.output_format == OutputFormat.CSV:
        write_rows(
            ["label", "exact_bits", "estimate_bits", "abs_error"],
            ([e.label, bits(e.exact_bits), bits(e.estimate_bits), bits(e.abs_error)] for e in entries),
            config,
        )
    else:
        write_json(report, config)

    summary([f"{e.label:<30} exact {e.exact_bits:.6f}  estimate {e.estimate_bits:.6f}" for e in entries], config)
    return EXIT_OK
