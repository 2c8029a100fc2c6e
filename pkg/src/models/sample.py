"""Sampled trajectory batches."""
import hashlib

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from .distribution import trajectory_coordinates
from .system import Alphabets


class SampleBatch(BaseModel):
    """
    i.i.d. trajectories drawn from one spec.

    ``trajectories`` has shape (count, 3n+1) with columns x0, x1, y1, e1, ...
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    count: int = Field(..., gt=0)
    horizon: int = Field(..., ge=1)
    alphabets: Alphabets
    trajectories: np.ndarray
    seed: int
    spec_digest: str

    def model_post_init(self, __context) -> None:
        if self.trajectories.shape != (self.count, 3 * self.horizon + 1):
            raise ValueError(f"trajectory array has shape {self.trajectories.shape}")
        limits = np.array([self.alphabets.size(c.stream) for c in trajectory_coordinates(self.horizon)])
        if self.trajectories.size and (np.any(self.trajectories < 0) or np.any(self.trajectories >= limits)):
            raise ValueError("trajectory symbols fall outside their alphabets")
        self.trajectories.setflags(write=False)

    @property
    def digest(self) -> str:
        """sha256 over the trajectory bytes; equal for equal (spec, count, seed)."""
        data = np.ascontiguousarray(self.trajectories, dtype=np.int64)
        return hashlib.sha256(data.tobytes()).hexdigest()
