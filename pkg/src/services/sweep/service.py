"""
Parameter sweeps over shorthand kernels.

A sweep varies one numeric field of a parametric shorthand (for example
``forward_channel.eps`` of a bsc kernel) over a linear grid and records every
catalog quantity and identity residual at each point.
"""
import csv
import logging
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Optional, TextIO, Union

import numpy as np
from pydantic import ValidationError

from src.core.errors import SpecStructureError, SweepParameterError
from src.models.report import IdentityId, SweepResult, SweepRow
from src.models.run import SweepParameter
from src.models.system import BscKernel, KernelRole, StochasticKernel, SystemSpec
from src.services.identities import verify_all
from src.services.info import named_quantities
from src.services.system_model import check_guard, validate
from src.services.trajectory import build_joint

logger = logging.getLogger(__name__)

BSC_RANGE = (0.0, 0.5)


def _resolve(spec: SystemSpec, path: str) -> tuple[KernelRole, str]:
    role_name, _, field = path.partition(".")
    try:
        role = KernelRole(role_name)
    except ValueError:
        roles = ", ".join(r.value for r in KernelRole)
        raise SweepParameterError(f"unknown kernel '{role_name}' in '{path}' (expected one of {roles})")

    kernel = spec.kernel(role)
    if isinstance(kernel, StochasticKernel):
        raise SweepParameterError(
            f"{role} is a full table; only parametric shorthand fields can be swept"
        )
    fields = type(kernel).model_fields
    if field not in fields or fields[field].annotation is not float:
        numeric = [name for name, f in fields.items() if f.annotation is float]
        raise SweepParameterError(
            f"'{field}' is not a numeric parameter of {role} shorthand '{kernel.type}'"
            + (f" (sweepable: {', '.join(numeric)})" if numeric else " (it has none)")
        )
    return role, field


def variant(spec: SystemSpec, role: KernelRole, field: str, value: float) -> SystemSpec:
    """``spec`` with one shorthand field replaced; the new kernel is revalidated."""
    kernel = spec.kernel(role)
    try:
        updated = type(kernel).model_validate({**kernel.model_dump(), field: value})
    except ValidationError as e:
        raise SweepParameterError(f"{role}.{field} = {value}: {e.errors()[0]['msg']}") from e
    return spec.model_copy(update={role.value: updated})


def _evaluate(args: tuple[SystemSpec, float, float]) -> SweepRow:
    spec, value, tolerance = args
    report = validate(spec)
    if not report.ok:
        first = report.violations[0]
        raise SpecStructureError(
            f"sweep point {value}: kernel {first.kernel} step {first.step} row {first.row}: {first.message}"
        )
    dist = build_joint(report.spec)
    catalog = named_quantities(dist)
    verification = verify_all(dist, report.spec, tolerance, catalog)
    return SweepRow(
        value=value,
        quantities=catalog.as_dict(),
        residuals={r.identity_id: r.residual_bits for r in verification.reports},
        verdicts={r.identity_id: r.verdict for r in verification.reports},
    )


def sweep(
    spec: SystemSpec,
    parameter: SweepParameter,
    tolerance: Optional[float] = None,
    jobs: int = 1,
) -> SweepResult:
    """
    Evaluate the catalog and the identity suite on ``parameter.steps`` grid points.

    ``spec`` must be the parsed, unexpanded spec so the shorthand is still
    visible. bsc crossover sweeps are restricted to [0, 0.5].

    Args:
        spec: Parsed spec with a parametric shorthand at ``parameter.path``
        parameter: Field path, range and number of grid points
        tolerance: Identity tolerance in bits (default: settings.tolerance)
        jobs: Worker processes; rows stay in grid order

    Returns:
        One row per grid point with every catalog quantity and identity residual

    Raises:
        SweepParameterError: The path is not a parametric field or the range is invalid
    """
    check_guard(spec.dims)
    role, field = _resolve(spec, parameter.path)
    kernel = spec.kernel(role)
    if isinstance(kernel, BscKernel) and field == "eps":
        low, high = BSC_RANGE
        for bound in (parameter.start, parameter.stop):
            if not low <= bound <= high:
                raise SweepParameterError(f"bsc eps range must lie within [{low}, {high}], got {bound}")

    grid = [float(v) for v in np.linspace(parameter.start, parameter.stop, parameter.steps)]
    work = [(variant(spec, role, field, value), value, tolerance) for value in grid]

    logger.info(f"📈 Sweeping {parameter.path} over {parameter.steps} points [{parameter.start}, {parameter.stop}]")
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_evaluate, work))
    else:
        rows = [_evaluate(item) for item in work]

    return SweepResult(
        parameter=parameter.path,
        start=parameter.start,
        stop=parameter.stop,
        steps=parameter.steps,
        rows=rows,
    )


def write_sweep_csv(result: SweepResult, target: Union[str, Path, TextIO]) -> None:
    """One row per grid point: parameter value, catalog quantities, identity residuals."""
    labels = list(result.rows[0].quantities) if result.rows else []
    header = [result.parameter] + labels + [f"residual[{i.value}]" for i in IdentityId]

    def emit(f: TextIO) -> None:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in result.rows:
            writer.writerow(
                [repr(row.value)]
                + [repr(row.quantities[label]) for label in labels]
                + [repr(row.residuals[i]) for i in IdentityId]
            )

    if isinstance(target, (str, Path)):
        with Path(target).open("w", newline="", encoding="utf-8") as f:
            emit(f)
        logger.info(f"💾 Wrote sweep table to {target}")
    else:
        emit(target)
