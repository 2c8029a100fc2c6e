"""
Spec-file reading and writing.

A spec file is JSON:

    {
      "alphabets": {"m": 2, "x": 2, "y": 2, "e": 2},
      "horizon": 2,
      "message_prior": [0.5, 0.5],
      "encoder": {"type": "repetition"},
      "forward_channel": {"type": "bsc", "eps": 0.1},
      "feedback_channel": {"type": "identity"}
    }

Kernels are either ``{"type": "table", "steps": [[row, ...], ...]}`` (rows in
mixed-radix history order, optional ``"deterministic"``) or one of the
shorthands bsc / identity / constant / memoryless / repetition.
"""
import json
import logging
from pathlib import Path
from typing import Any, Union

from pydantic import ValidationError

from src.core.errors import SpecFileError, SpecStructureError
from src.models.system import KernelRole, StochasticKernel, SystemSpec

from .service import check_guard, validate

logger = logging.getLogger(__name__)


def _format_validation_error(exc: ValidationError) -> str:
    parts = []
    for err in exc.errors():
        field = ".".join(str(p) for p in err["loc"])
        parts.append(f"field '{field}': {err['msg']}")
    return "; ".join(parts)


def parse_spec_document(document: dict[str, Any], source: str = "<document>") -> SystemSpec:
    """Build a (possibly shorthand) spec from a decoded JSON document."""
    try:
        return SystemSpec.model_validate(document)
    except ValidationError as e:
        raise SpecFileError(source, _format_validation_error(e)) from e


def read_spec(path: Union[str, Path]) -> SystemSpec:
    """Parse a spec file as written, shorthands included, without validating rows."""
    path = Path(path)
    try:
        document = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError as e:
        raise SpecFileError(str(path), "file not found") from e
    except json.JSONDecodeError as e:
        raise SpecFileError(str(path), f"invalid JSON at line {e.lineno}: {e.msg}") from e
    return parse_spec_document(document, str(path))


def load_spec(path: Union[str, Path], repair: bool = False) -> SystemSpec:
    """
    Read, expand and validate a spec file.

    Args:
        path: JSON spec file
        repair: Renormalize rows within the repair tolerance instead of rejecting them

    Returns:
        Expanded, validated spec

    Raises:
        SpecFileError: Names the file and the offending field, kernel, step and row
        GuardExceededError: The dense table for this spec would exceed the guard
    """
    path = Path(path)
    spec = read_spec(path)
    check_guard(spec.dims)
    try:
        report = validate(spec, repair=repair)
    except SpecStructureError as e:
        raise SpecFileError(str(path), f"structural error: {e}") from e

    if not report.ok:
        shown = "; ".join(
            f"kernel {v.kernel} step {v.step} row {v.row}: {v.message}" for v in report.violations[:10]
        )
        more = f" (+{len(report.violations) - 10} more)" if len(report.violations) > 10 else ""
        raise SpecFileError(str(path), f"{len(report.violations)} invalid rows: {shown}{more}")

    logger.info(f"📄 Loaded spec {path.name} (n={spec.horizon}, alphabets={spec.alphabets.model_dump()})")
    return report.spec


def spec_to_document(spec: SystemSpec) -> dict[str, Any]:
    """JSON-compatible document for ``spec``; shorthands are kept as written."""
    document: dict[str, Any] = {
        "alphabets": spec.alphabets.model_dump(),
        "horizon": spec.horizon,
        "message_prior": spec.message_prior.tolist(),
    }
    for role in KernelRole:
        kernel = spec.kernel(role)
        if isinstance(kernel, StochasticKernel):
            entry: dict[str, Any] = {"type": "table", "steps": [t.tolist() for t in kernel.steps]}
            if kernel.deterministic is not None:
                entry["deterministic"] = kernel.deterministic
        else:
            entry = kernel.model_dump()
        document[role.value] = entry
    return document


def write_spec(spec: SystemSpec, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(json.dumps(spec_to_document(spec), indent=2), encoding="utf-8")
    return path
