"""Pydantic models and schemas for type-safe data handling."""

from .system import (
    Stream,
    KernelRole,
    Alphabets,
    Dims,
    StochasticKernel,
    BscKernel,
    IdentityKernel,
    ConstantKernel,
    MemorylessKernel,
    RepetitionKernel,
    SystemSpec,
)
from .distribution import (
    Coordinate,
    Selector,
    TrajectoryDistribution,
    DistributionKind,
    trajectory_coordinates,
)
from .query import InfoForm, InfoQuery, StreamLag
from .report import (
    Violation,
    ValidationReport,
    QuantityValue,
    QuantityCatalog,
    IdentityId,
    Verdict,
    IdentityReport,
    VerificationReport,
    FuzzSummary,
    ConvergenceTable,
    SimulationReport,
    SweepResult,
)
from .sample import SampleBatch
from .run import RunConfig, Command, OutputFormat, EncoderMode, SweepParameter

__all__ = [
    # System models
    "Stream",
    "KernelRole",
    "Alphabets",
    "Dims",
    "StochasticKernel",
    "BscKernel",
    "IdentityKernel",
    "ConstantKernel",
    "MemorylessKernel",
    "RepetitionKernel",
    "SystemSpec",
    # Distribution models
    "Coordinate",
    "Selector",
    "TrajectoryDistribution",
    "DistributionKind",
    "trajectory_coordinates",
    # Queries
    "InfoForm",
    "InfoQuery",
    "StreamLag",
    # Reports
    "Violation",
    "ValidationReport",
    "QuantityValue",
    "QuantityCatalog",
    "IdentityId",
    "Verdict",
    "IdentityReport",
    "VerificationReport",
    "FuzzSummary",
    "ConvergenceTable",
    "SimulationReport",
    "SweepResult",
    "SampleBatch",
    # Run configuration
    "RunConfig",
    "Command",
    "OutputFormat",
    "EncoderMode",
    "SweepParameter",
]
