"""sweep: catalog and identity residuals along a shorthand parameter."""
import io
import logging

from src.models.run import OutputFormat, RunConfig
from src.services.sweep import sweep, write_sweep_csv
from src.services.system_model import read_spec

from .common import EXIT_OK, EXIT_VIOLATION, write_text, summary, write_json

logger = logging.getLogger(__name__)


def run(config: RunConfig) -> int:
    spec = read_spec(config.spec_path)
    result = sweep(spec, config.sweep, config.tolerance, jobs=config.jobs)

    if config.output_format == OutputFormat.JSON:
        write_json(result, config)
    else:
        buffer = io.StringIO()
        write_sweep_csv(result, buffer)
        write_text(buffer.getvalue(), config.out)

    summary([f"{result.steps} points of {result.parameter}; all identities hold: {result.all_hold}"], config)
    return EXIT_OK if result.all_hold else EXIT_VIOLATION
