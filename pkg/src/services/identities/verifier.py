"""
Numerical verification of the information-flow identities.

Violations are data: they show up as verdicts, never as exceptions. Identities
whose derivation needs x^i to be a function of (x_0, e^{i-1}) are reported as
out_of_scope for stochastic encoders, with their residual still computed.
"""
import logging
import math
from typing import Optional

from src.core import get_settings
from src.models.distribution import TrajectoryDistribution
from src.models.report import (
    AuxiliaryCheck,
    Component,
    IdentityId,
    IdentityReport,
    ProofLine,
    QuantityCatalog,
    Verdict,
    VerificationReport,
)
from src.models.system import SystemSpec
from src.services.info import named_quantities

from .definitions import IDENTITIES, IDENTITY_BY_ID, AuxiliaryDefinition, IdentityDefinition

logger = logging.getLogger(__name__)


def deviation_bits(report: IdentityReport) -> float:
    """The amount by which ``report`` misses its relation (0 when exactly satisfied)."""
    if not report.is_inequality:
        return abs(report.residual_bits)
    deviation = max(0.0, -report.residual_bits)
    if report.gap_bits is not None:
        deviation = max(deviation, abs(report.gap_residual_bits), max(0.0, -report.gap_bits))
    return deviation


def _signed_sum(catalog: QuantityCatalog, labels: tuple[str, ...]) -> float:
    return math.fsum(
        -catalog.value(label[1:]) if label.startswith("-") else catalog.value(label)
        for label in labels
    )


def _auxiliary(
    catalog: QuantityCatalog,
    aux: AuxiliaryDefinition,
    tolerance: float,
) -> AuxiliaryCheck:
    lhs = catalog.value(aux.lhs)
    rhs = _signed_sum(catalog, aux.rhs)
    residual = lhs - rhs
    return AuxiliaryCheck(
        name=aux.name,
        lhs_bits=lhs,
        rhs_bits=rhs,
        residual_bits=residual,
        passed=abs(residual) <= tolerance,
    )


def _proof_trace(catalog: QuantityCatalog, definition: IdentityDefinition, horizon: int) -> list[ProofLine]:
    def term(label: str, step: int) -> float:
        terms = catalog.get(label).per_step_terms
        return terms[step - 1] if step <= len(terms) else 0.0

    return [
        ProofLine(
            step=step,
            lhs_term=term(definition.lhs, step),
            rhs_terms=[term(label, step) for label in definition.rhs],
        )
        for step in range(1, horizon + 1)
    ]


def _build_report(
    definition: IdentityDefinition,
    catalog: QuantityCatalog,
    deterministic: bool,
    tolerance: float,
) -> IdentityReport:
    lhs = catalog.value(definition.lhs)
    components = [Component(label=label, value_bits=catalog.value(label)) for label in definition.rhs]
    residual = lhs - math.fsum(c.value_bits for c in components)

    gap = gap_residual = None
    if definition.gap is not None:
        gap = catalog.value(definition.gap)
        gap_residual = residual - gap

    auxiliary = [
        _auxiliary(catalog, aux, tolerance)
        for aux in definition.auxiliary
        if deterministic or not aux.requires_deterministic_encoder
    ]

    report = IdentityReport(
        identity_id=definition.identity_id,
        statement=definition.statement,
        lhs_label=definition.lhs,
        lhs_bits=lhs,
        rhs_components=components,
        residual_bits=residual,
        is_inequality=definition.is_inequality,
        requires_deterministic_encoder=definition.requires_deterministic_encoder,
        verdict=Verdict.HOLDS,
        tolerance=tolerance,
        gap_bits=gap,
        gap_residual_bits=gap_residual,
        auxiliary=auxiliary,
        proof_trace=_proof_trace(catalog, definition, catalog.horizon),
    )

    if definition.requires_deterministic_encoder and not deterministic:
        verdict = Verdict.OUT_OF_SCOPE
    elif deviation_bits(report) <= tolerance:
        verdict = Verdict.HOLDS
    else:
        verdict = Verdict.VIOLATED
    return report.model_copy(update={"verdict": verdict})


def verify(
    dist: TrajectoryDistribution,
    spec: SystemSpec,
    identity_id: IdentityId,
    tolerance: Optional[float] = None,
    catalog: Optional[QuantityCatalog] = None,
) -> IdentityReport:
    """Verify one identity on the joint ``dist`` built from ``spec``."""
    tolerance = tolerance if tolerance is not None else get_settings().tolerance
    catalog = catalog or named_quantities(dist)
    report = _build_report(IDENTITY_BY_ID[identity_id], catalog, spec.deterministic_encoder, tolerance)
    if report.verdict == Verdict.VIOLATED:
        logger.warning(f"❌ {identity_id} violated: residual {report.residual_bits:.3e} bits")
    else:
        logger.debug(f"{identity_id}: {report.verdict} (residual {report.residual_bits:.3e})")
    return report


def verify_all(
    dist: TrajectoryDistribution,
    spec: SystemSpec,
    tolerance: Optional[float] = None,
    catalog: Optional[QuantityCatalog] = None,
) -> VerificationReport:
    """
    Run every identity; the aggregate fails if any in-scope identity is violated.

    Args:
        dist: Exact joint built from ``spec``
        spec: The spec, consulted for whether its encoder is deterministic
        tolerance: Allowed residual in bits (default: settings.tolerance)
        catalog: Precomputed named quantities of ``dist``, if available

    Returns:
        One report per identity, in definition order
    """
    tolerance = tolerance if tolerance is not None else get_settings().tolerance
    catalog = catalog or named_quantities(dist)
    reports = [
        verify(dist, spec, definition.identity_id, tolerance, catalog)
        for definition in IDENTITIES
    ]
    result = VerificationReport(
        deterministic_encoder=spec.deterministic_encoder,
        tolerance=tolerance,
        reports=reports,
    )
    held = sum(r.verdict == Verdict.HOLDS for r in reports)
    logger.info(f"✅ {held}/{len(reports)} identities hold" if result.all_hold
                else f"❌ identity violation ({held}/{len(reports)} hold)")
    return result


def proof_trace_lines(report: IdentityReport) -> list[str]:
    """Human-readable per-step alignment of an identity's terms."""
    definition = IDENTITY_BY_ID[report.identity_id]
    header = f"{report.identity_id}: {report.statement}"
    columns = "  step  " + definition.lhs.ljust(26) + "".join(label.ljust(26) for label in definition.rhs)
    lines = [header, columns]
    for line in report.proof_trace:
        values = [line.lhs_term] + line.rhs_terms
        lines.append(f"  {line.step:>4}  " + "".join(f"{v:<26.12f}" for v in values))
    totals = [report.lhs_bits] + [c.value_bits for c in report.rhs_components]
    lines.append("  sum   " + "".join(f"{v:<26.12f}" for v in totals))
    lines.append(f"  residual {report.residual_bits:.3e}  verdict {report.verdict}")
    if report.gap_bits is not None:
        lines.append(f"  gap {report.gap_bits:.12f}  residual - gap {report.gap_residual_bits:.3e}")
    for aux in report.auxiliary:
        mark = "ok" if aux.passed else "differs"
        lines.append(f"  [{mark}] {aux.name}: {aux.lhs_bits:.12f} vs {aux.rhs_bits:.12f}")
    return lines
