"""Shared helpers for CLI commands: exit codes, report output and summaries."""
import csv
import io
import logging
import sys
from pathlib import Path
from typing import Iterable, Optional, Sequence

from pydantic import BaseModel

from src.models.run import RunConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT_ERROR = 2
EXIT_INTERNAL_ERROR = 3


def write_text(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    logger.info(f"💾 Wrote report to {out}")


def write_json(report: BaseModel, config: RunConfig) -> None:
    """Serialize ``report`` to ``--out`` or stdout; output is byte-stable for equal reports."""
    write_text(report.model_dump_json(indent=2) + "\n", config.out)


def write_rows(header: Sequence[str], rows: Iterable[Sequence], config: RunConfig) -> None:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    write_text(buffer.getvalue(), config.out)


def summary(lines: Iterable[str], config: RunConfig) -> None:
    """Human-readable summary; goes to stdout only when the report itself went to a file."""
    stream = sys.stdout if config.out is not None else sys.stderr
    for line in lines:
        print(line, file=stream)


def bits(value: float) -> str:
    return repr(float(value))
