#!/usr/bin/env python3
"""
InfoFlow - Main Application Entry Point

Exact information-flow computations for closed-loop systems with feedback.

Usage:
    python -m src.main compute  --spec systems/bsc01.json
    python -m src.main verify   --spec systems/bsc01.json --proof-trace
    python -m src.main fuzz     --seed 42 --trials 200 --encoder det
    python -m src.main simulate --spec systems/bsc01.json --samples 100000 --seed 7
    python -m src.main sweep    --spec systems/bsc01.json --param forward_channel.eps \\
                                --from 0 --to 0.5 --steps 51 --format csv

Exit status: 0 success, 1 identity violation, 2 usage or input error,
3 internal consistency failure.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from pydantic import ValidationError

from src.commands import COMMANDS, EXIT_INPUT_ERROR, EXIT_INTERNAL_ERROR
from src.core import InfoFlowError, InternalConsistencyError, get_logger, get_settings, setup_logging
from src.models.run import Command, EncoderMode, OutputFormat, RunConfig, SweepParameter

logger = get_logger(__name__)


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(
        prog="infoflow",
        description="InfoFlow - directed-information conservation laws, computed exactly",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Commands:
  compute   Named information quantities of a spec, with per-step terms
  verify    Identity suite on a spec (exit 1 on any violation)
  fuzz      Identity suite on seeded random systems
  simulate  Exact quantities next to Monte Carlo plug-in estimates
  sweep     Quantities and residuals along a shorthand parameter

Environment:
  IFLOW_GUARD  maximum dense trajectory-table entries (default 2^24)
        """,
    )
    parser.add_argument("command", choices=[c.value for c in Command], help="Command to run")
    parser.add_argument("--spec", type=Path, help="Spec file (JSON)")
    parser.add_argument(
        "--tol",
        type=float,
        default=settings.tolerance,
        help=f"Identity tolerance in bits (default: {settings.tolerance})",
    )
    parser.add_argument("--seed", type=int, default=0, help="Random seed, unsigned 64-bit (default: 0)")
    parser.add_argument("--samples", type=int, default=100_000, help="Monte Carlo sample count (default: 100000)")
    parser.add_argument("--trials", type=int, default=200, help="Fuzz trials (default: 200)")
    parser.add_argument("--max-n", type=int, default=4, help="Largest fuzz horizon (default: 4)")
    parser.add_argument("--alphabet-max", type=int, default=3, help="Largest fuzz alphabet (default: 3)")
    parser.add_argument(
        "--encoder",
        choices=[m.value for m in EncoderMode],
        default=EncoderMode.DETERMINISTIC.value,
        help="Fuzz encoder mode (default: det)",
    )
    parser.add_argument("--param", help="Sweep field path, e.g. forward_channel.eps")
    parser.add_argument("--from", dest="start", type=float, help="Sweep start value")
    parser.add_argument("--to", dest="stop", type=float, help="Sweep stop value")
    parser.add_argument("--steps", type=int, help="Sweep grid points, endpoints included")
    parser.add_argument("--out", type=Path, help="Report path (default: stdout)")
    parser.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        help="Report format (default: json; csv for sweep)",
    )
    parser.add_argument(
        "--jobs",
        type=int,
        default=settings.jobs,
        help=f"Worker cap; never changes results (default: {settings.jobs})",
    )
    parser.add_argument("--proof-trace", action="store_true", help="Print per-step terms of every identity")
    parser.add_argument("--dump-joint", type=Path, help="compute: write the joint distribution as CSV")
    parser.add_argument("--batch-out", type=Path, help="simulate: write sampled trajectories as CSV")
    parser.add_argument("--verbose", "-v", action="store_true", help="Enable verbose logging")
    return parser


def to_config(args: argparse.Namespace) -> RunConfig:
    """Validate parsed arguments into a :class:`RunConfig`."""
    command = Command(args.command)
    sweep = None
    if command == Command.SWEEP and None not in (args.param, args.start, args.stop, args.steps):
        sweep = SweepParameter(path=args.param, start=args.start, stop=args.stop, steps=args.steps)
    output_format = args.format or (OutputFormat.CSV if command == Command.SWEEP else OutputFormat.JSON)
    return RunConfig(
        command=command,
        spec_path=args.spec,
        tolerance=args.tol,
        seed=args.seed,
        samples=args.samples,
        trials=args.trials,
        max_n=args.max_n,
        alphabet_max=args.alphabet_max,
        encoder_mode=EncoderMode(args.encoder),
        sweep=sweep,
        output_format=OutputFormat(output_format),
        out=args.out,
        jobs=args.jobs,
        proof_trace=args.proof_trace,
        dump_joint=args.dump_joint,
        batch_out=args.batch_out,
    )


def _log_validation_error(e: ValidationError, fallback: str) -> None:
    for err in e.errors():
        field = ".".join(str(p) for p in err["loc"]) or fallback
        logger.error(f"❌ {field}: {err['msg']}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """CLI entry point; returns the process exit status."""
    try:
        settings = get_settings()
    except ValidationError as e:
        setup_logging()
        logger.error("❌ Invalid IFLOW_* environment settings")
        _log_validation_error(e, "settings")
        return EXIT_INPUT_ERROR

    args = build_parser().parse_args(argv)
    setup_logging(logging.DEBUG if args.verbose or settings.debug else logging.INFO)

    try:
        config = to_config(args)
        logger.info(f"🚀 {settings.app_name} {config.command}")
        return COMMANDS[config.command](config)
    except ValidationError as e:
        _log_validation_error(e, "arguments")
        return EXIT_INPUT_ERROR
    except InfoFlowError as e:
        logger.error(f"❌ {e}")
        return EXIT_INPUT_ERROR
    except InternalConsistencyError as e:
        logger.exception(f"💥 Internal consistency failure: {e}")
        return EXIT_INTERNAL_ERROR


if __name__ == "__main__":
    sys.exit(main())
