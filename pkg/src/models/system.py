"""System-specification models: alphabets, kernels and the closed-loop spec."""
from ._compat import StrEnum
from typing import Annotated, Literal, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator


class Stream(StrEnum):
    """Symbol streams of the closed loop. M carries the message x_0."""
    M = "M"
    X = "X"
    Y = "Y"
    E = "E"


class KernelRole(StrEnum):
    """The three conditional laws of the loop."""
    ENCODER = "encoder"
    FORWARD = "forward_channel"
    FEEDBACK = "feedback_channel"


KERNEL_OUTPUT = {
    KernelRole.ENCODER: Stream.X,
    KernelRole.FORWARD: Stream.Y,
    KernelRole.FEEDBACK: Stream.E,
}


class Alphabets(BaseModel):
    """Symbol counts |M|, |X|, |Y|, |E|."""
    model_config = ConfigDict(frozen=True)

    m: int = Field(..., ge=1, description="Message alphabet size")
    x: int = Field(..., ge=1, description="Channel input alphabet size")
    y: int = Field(..., ge=1, description="Channel output alphabet size")
    e: int = Field(..., ge=1, description="Feedback output alphabet size")

    def size(self, stream: Stream) -> int:
        return {Stream.M: self.m, Stream.X: self.x, Stream.Y: self.y, Stream.E: self.e}[stream]


class Dims(BaseModel):
    """Alphabet sizes plus horizon, as requested from the random generator."""
    model_config = ConfigDict(frozen=True)

    alphabets: Alphabets
    horizon: int = Field(..., ge=1, description="Number of time steps n")

    @property
    def table_entries(self) -> int:
        """Dense joint size |M|·(|X||Y||E|)^n."""
        a = self.alphabets
        return a.m * (a.x * a.y * a.e) ** self.horizon


class StochasticKernel(BaseModel):
    """
    Full-table conditional law, one table per time step.

    ``steps[i-1]`` has shape (rows, |output|); row r is the distribution for the
    history whose mixed-radix index is r (oldest symbol most significant).
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    type: Literal["table"] = "table"
    steps: tuple[np.ndarray, ...]
    deterministic: Optional[bool] = Field(
        default=None,
        description="Every row is a point mass; None means detect on expand",
    )

    @field_validator("steps", mode="before")
    @classmethod
    def coerce_steps(cls, v):
        tables = []
        for step, table in enumerate(v, start=1):
            try:
                arr = np.array(table, dtype=np.float64)
            except ValueError as e:
                raise ValueError(f"step {step}: rows have unequal lengths") from e
            if arr.ndim != 2:
                raise ValueError(f"step {step}: table must be a list of rows, got shape {arr.shape}")
            arr.setflags(write=False)
            tables.append(arr)
        return tuple(tables)

    def is_point_mass(self) -> bool:
        return all(
            bool(np.all((t == 0.0) | (t == 1.0)) and np.all(t.sum(axis=1) == 1.0))
            for t in self.steps
        )


class BscKernel(BaseModel):
    """Binary symmetric crossover on the designated current input."""
    model_config = ConfigDict(frozen=True)

    type: Literal["bsc"] = "bsc"
    eps: float = Field(..., ge=0.0, le=1.0, description="Crossover probability")


class IdentityKernel(BaseModel):
    """Output copies the designated current input."""
    model_config = ConfigDict(frozen=True)

    type: Literal["identity"] = "identity"


class ConstantKernel(BaseModel):
    """Output is always ``value``."""
    model_config = ConfigDict(frozen=True)

    type: Literal["constant"] = "constant"
    value: int = Field(..., ge=0, description="Constant output symbol")


class MemorylessKernel(BaseModel):
    """Row depends only on the designated current input symbol."""
    model_config = ConfigDict(frozen=True)

    type: Literal["memoryless"] = "memoryless"
    rows: list[list[float]] = Field(..., min_length=1, description="One row per input symbol")

    @field_validator("rows")
    @classmethod
    def check_rectangular(cls, v: list[list[float]]) -> list[list[float]]:
        widths = {len(row) for row in v}
        if len(widths) != 1:
            raise ValueError(f"rows have unequal lengths {sorted(widths)}")
        return v


class RepetitionKernel(BaseModel):
    """Encoder shorthand x_i = x_0."""
    model_config = ConfigDict(frozen=True)

    type: Literal["repetition"] = "repetition"


Kernel = Annotated[
    Union[StochasticKernel, BscKernel, IdentityKernel, ConstantKernel, MemorylessKernel, RepetitionKernel],
    Field(discriminator="type"),
]

SHORTHAND_TYPES = (BscKernel, IdentityKernel, ConstantKernel, MemorylessKernel, RepetitionKernel)


class SystemSpec(BaseModel):
    """Full description of one closed-loop system."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    alphabets: Alphabets
    horizon: int = Field(..., ge=1, description="Number of time steps n")
    message_prior: np.ndarray
    encoder: Kernel
    forward_channel: Kernel
    feedback_channel: Kernel

    @field_validator("message_prior", mode="before")
    @classmethod
    def coerce_prior(cls, v):
        arr = np.array(v, dtype=np.float64)
        arr.setflags(write=False)
        return arr

    def kernel(self, role: KernelRole):
        return getattr(self, role.value)

    @property
    def dims(self) -> Dims:
        return Dims(alphabets=self.alphabets, horizon=self.horizon)

    @property
    def is_expanded(self) -> bool:
        return all(isinstance(self.kernel(role), StochasticKernel) for role in KernelRole)

    @property
    def deterministic_encoder(self) -> bool:
        """True when the (expanded) encoder is flagged or detected as deterministic."""
        encoder = self.encoder
        if isinstance(encoder, (RepetitionKernel, ConstantKernel, IdentityKernel)):
            return True
        if isinstance(encoder, StochasticKernel):
            if encoder.deterministic is not None:
                return encoder.deterministic
            return encoder.is_point_mass()
        if isinstance(encoder, BscKernel):
            return encoder.eps in (0.0, 1.0)
        return all(max(row) == 1.0 for row in encoder.rows)
