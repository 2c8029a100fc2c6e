"""CLI command implementations; each ``run(config)`` returns an exit status."""

from src.models.run import Command

from . import compute, fuzz, simulate, sweep, verify
from .common import EXIT_INPUT_ERROR, EXIT_INTERNAL_ERROR, EXIT_OK, EXIT_VIOLATION

COMMANDS = {
    Command.COMPUTE: compute.run,
    Command.VERIFY: verify.run,
    Command.FUZZ: fuzz.run,
    Command.SIMULATE: simulate.run,
    Command.SWEEP: sweep.run,
}

__all__ = [
    "COMMANDS",
    "EXIT_OK",
    "EXIT_VIOLATION",
    "EXIT_INPUT_ERROR",
    "EXIT_INTERNAL_ERROR",
]
