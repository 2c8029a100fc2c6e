"""compute: evaluate the named-quantity catalog of one spec."""
import logging

from src.models.run import OutputFormat, RunConfig
from src.services.info import named_quantities
from src.services.system_model import load_spec
from src.services.trajectory import build_joint, dump_csv

from .common import EXIT_OK, bits, summary, write_json, write_rows

logger = logging.getLogger(__name__)


def run(config: RunConfig) -> int:
    spec = load_spec(config.spec_path)
    dist = build_joint(spec)
    if config.dump_joint is not None:
        dump_csv(dist, config.dump_joint)

    catalog = named_quantities(dist)
    if config.output_format == OutputFormat.CSV:
        write_rows(
            ["label", "value_bits", "formula", "per_step_terms"],
            (
                [q.label, bits(q.value_bits), q.formula, " ".join(bits(t) for t in q.per_step_terms)]
                for q in catalog.quantities
            ),
            config,
        )
    else:
        write_json(catalog, config)

    summary([f"{q.label:<30} {q.value_bits:.6f}" for q in catalog.quantities], config)
    return EXIT_OK
