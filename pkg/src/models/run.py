"""Parsed command-line invocation."""
from ._compat import StrEnum
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field, model_validator


class Command(StrEnum):
    COMPUTE = "compute"
    VERIFY = "verify"
    FUZZ = "fuzz"
    SIMULATE = "simulate"
    SWEEP = "sweep"


class OutputFormat(StrEnum):
    JSON = "json"
    CSV = "csv"


class EncoderMode(StrEnum):
    DETERMINISTIC = "det"
    STOCHASTIC = "stoch"


class SweepParameter(BaseModel):
    """Kernel field path and linear range, e.g. forward_channel.eps from 0 to 0.5."""
    path: str = Field(..., min_length=1)
    start: float
    stop: float
    steps: int = Field(..., ge=2, description="Number of grid points, endpoints included")


class RunConfig(BaseModel):
    """One CLI run; every command is deterministic given this config."""
    command: Command
    spec_path: Optional[Path] = None
    tolerance: float = Field(default=1e-9, gt=0)
    seed: int = Field(default=0, ge=0, lt=2**64)
    samples: int = Field(default=100_000, ge=0)
    trials: int = Field(default=200, ge=0)
    max_n: int = Field(default=4, ge=1, le=255)
    alphabet_max: int = Field(default=3, ge=1, le=255)
    encoder_mode: EncoderMode = EncoderMode.DETERMINISTIC
    sweep: Optional[SweepParameter] = None
    output_format: OutputFormat = OutputFormat.JSON
    out: Optional[Path] = None
    jobs: int = Field(default=1, ge=1)
    proof_trace: bool = False
    dump_joint: Optional[Path] = None
    batch_out: Optional[Path] = None

    @model_validator(mode="after")
    def check_command_inputs(self) -> "RunConfig":
        needs_spec = {Command.COMPUTE, Command.VERIFY, Command.SIMULATE, Command.SWEEP}
        if self.command in needs_spec and self.spec_path is None:
            raise ValueError(f"{self.command} requires --spec")
        if self.command == Command.SWEEP and self.sweep is None:
            raise ValueError("sweep requires --param, --from, --to and --steps")
        if self.command == Command.FUZZ and self.trials < 1:
            raise ValueError("fuzz requires --trials >= 1")
        if self.command == Command.SIMULATE and self.samples < 1:
            raise ValueError("simulate requires --samples >= 1")
        return self
