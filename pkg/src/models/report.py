"""Report models serialized by the CLI."""
from ._compat import StrEnum
from typing import Optional

from pydantic import BaseModel, Field

from .system import Dims, SystemSpec


class Violation(BaseModel):
    """A kernel row (or the message prior) breaking normalization or determinism."""
    kernel: str = Field(..., description="Kernel role, or message_prior")
    step: int = Field(..., ge=0, description="Time index, 1-based; 0 for the message prior")
    row: int = Field(..., ge=0, description="Mixed-radix history index")
    message: str


class ValidationReport(BaseModel):
    """Outcome of validating one spec."""
    model_config = {"arbitrary_types_allowed": True}

    violations: list[Violation] = Field(default_factory=list)
    repaired_rows: int = Field(default=0, ge=0)
    spec: Optional[SystemSpec] = Field(default=None, description="Expanded (and repaired) spec")

    @property
    def ok(self) -> bool:
        return not self.violations


class QuantityValue(BaseModel):
    """One labeled catalog entry."""
    label: str
    formula: str
    value_bits: float
    per_step_terms: list[float] = Field(default_factory=list)


class QuantityCatalog(BaseModel):
    """All named quantities of one distribution."""
    version: str = "1"
    horizon: int
    kind: str
    quantities: list[QuantityValue] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list)

    def value(self, label: str) -> float:
        return self.get(label).value_bits

    def get(self, label: str) -> QuantityValue:
        for q in self.quantities:
            if q.label == label:
                return q
        raise KeyError(label)

    def as_dict(self) -> dict[str, float]:
        return {q.label: q.value_bits for q in self.quantities}


class IdentityId(StrEnum):
    LEMMA1 = "lemma1"
    LEMMA2 = "lemma2"
    THEOREM1 = "theorem1"
    THEOREM2 = "theorem2"
    THEOREM3 = "theorem3"
    MASSEY_CONSERVATION = "massey_conservation"
    MASSEY_INEQUALITY = "massey_inequality"


class Verdict(StrEnum):
    HOLDS = "holds"
    VIOLATED = "violated"
    OUT_OF_SCOPE = "out_of_scope"


class Component(BaseModel):
    label: str
    value_bits: float


class AuxiliaryCheck(BaseModel):
    """A proof-internal equality checked alongside the identity."""
    name: str
    lhs_bits: float
    rhs_bits: float
    residual_bits: float
    passed: bool


class ProofLine(BaseModel):
    """Per-step terms of the lhs and of each rhs component."""
    step: int
    lhs_term: float
    rhs_terms: list[float]


class IdentityReport(BaseModel):
    identity_id: IdentityId
    statement: str
    lhs_label: str
    lhs_bits: float
    rhs_components: list[Component]
    residual_bits: float
    is_inequality: bool = False
    requires_deterministic_encoder: bool
    verdict: Verdict
    tolerance: float
    gap_bits: Optional[float] = None
    gap_residual_bits: Optional[float] = None
    auxiliary: list[AuxiliaryCheck] = Field(default_factory=list)
    proof_trace: list[ProofLine] = Field(default_factory=list)


class VerificationReport(BaseModel):
    """All identity reports for one system plus the aggregate outcome."""
    deterministic_encoder: bool
    tolerance: float
    reports: list[IdentityReport]

    @property
    def all_hold(self) -> bool:
        return all(r.verdict != Verdict.VIOLATED for r in self.reports)


class FuzzTrial(BaseModel):
    index: int
    seed: int
    dims: Dims
    deterministic_encoder: bool
    residuals: dict[IdentityId, float]
    verdicts: dict[IdentityId, Verdict]
    deviations: dict[IdentityId, float] = Field(default_factory=dict)


class FuzzViolation(BaseModel):
    trial: int
    seed: int
    dims: Dims
    identity_id: IdentityId
    residual_bits: float


class FuzzSummary(BaseModel):
    master_seed: int
    trials: int
    encoder_mode: str
    tolerance: float
    max_abs_residual: dict[IdentityId, float]
    violation_count: int
    violations: list[FuzzViolation] = Field(default_factory=list)
    out_of_scope_counts: dict[IdentityId, int] = Field(default_factory=dict)
    trial_records: list[FuzzTrial] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.violation_count == 0


class ConvergenceRow(BaseModel):
    count: int
    seed: int
    estimate_bits: float
    exact_bits: float
    abs_error: float


class ConvergenceTable(BaseModel):
    label: str
    rows: list[ConvergenceRow]
    max_error_per_count: dict[int, float]


class SimulationEntry(BaseModel):
    label: str
    exact_bits: float
    estimate_bits: float
    abs_error: float


class SimulationReport(BaseModel):
    samples: int
    seed: int
    spec_digest: str
    batch_digest: str
    entries: list[SimulationEntry]


class SweepRow(BaseModel):
    """Catalog values and identity residuals at one grid point."""
    value: float
    quantities: dict[str, float]
    residuals: dict[IdentityId, float]
    verdicts: dict[IdentityId, Verdict]


class SweepResult(BaseModel):
    parameter: str
    start: float
    stop: float
    steps: int
    rows: list[SweepRow]

    @property
    def all_hold(self) -> bool:
        return all(v != Verdict.VIOLATED for row in self.rows for v in row.verdicts.values())
