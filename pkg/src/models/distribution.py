"""Trajectory coordinates, selectors and dense joint distributions."""
from ._compat import StrEnum
from typing import Iterable, NamedTuple, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator

from .system import Stream

MASS_TOLERANCE = 1e-9


class DistributionKind(StrEnum):
    EXACT = "exact"
    EMPIRICAL = "empirical"


class Coordinate(NamedTuple):
    """One symbol of a trajectory: a stream at a time index (M lives at time 0)."""
    stream: Stream
    time: int

    @property
    def position(self) -> int:
        """Index in the layout (x_0, x_1, y_1, e_1, ..., x_n, y_n, e_n)."""
        if self.stream == Stream.M:
            return 0
        offset = {Stream.X: 1, Stream.Y: 2, Stream.E: 3}[self.stream]
        return 3 * (self.time - 1) + offset

    @property
    def label(self) -> str:
        """CSV column name: x0 for the message, then x1, y1, e1, ..."""
        if self.stream == Stream.M:
            return "x0"
        return f"{self.stream.value.lower()}{self.time}"


def trajectory_coordinates(horizon: int) -> tuple[Coordinate, ...]:
    """The 3n+1 coordinates of a full trajectory, in layout order."""
    coords = [Coordinate(Stream.M, 0)]
    for t in range(1, horizon + 1):
        coords.extend(Coordinate(s, t) for s in (Stream.X, Stream.Y, Stream.E))
    return tuple(coords)


class Selector(BaseModel):
    """A set of coordinates, kept sorted in layout order."""
    model_config = ConfigDict(frozen=True)

    coordinates: tuple[Coordinate, ...] = Field(default_factory=tuple)

    @field_validator("coordinates", mode="after")
    @classmethod
    def normalize(cls, v: tuple[Coordinate, ...]) -> tuple[Coordinate, ...]:
        for c in v:
            if c.stream == Stream.M and c.time != 0:
                raise ValueError(f"message coordinate must have time 0, got {c.time}")
            if c.stream != Stream.M and c.time < 1:
                raise ValueError(f"{c.stream} coordinates start at time 1, got {c.time}")
        return tuple(sorted(set(v), key=lambda c: c.position))

    @classmethod
    def of(cls, coords: Iterable[Coordinate]) -> "Selector":
        return cls(coordinates=tuple(coords))

    @classmethod
    def stream(cls, stream: Stream, upto: int, start: int = 1) -> "Selector":
        """stream^upto, e.g. ``Selector.stream(Stream.X, i)`` for x^i. Empty when upto < start."""
        if stream == Stream.M:
            return cls.message()
        return cls(coordinates=tuple(Coordinate(stream, t) for t in range(start, upto + 1)))

    @classmethod
    def at(cls, stream: Stream, time: int) -> "Selector":
        return cls(coordinates=(Coordinate(stream, time),))

    @classmethod
    def message(cls) -> "Selector":
        return cls(coordinates=(Coordinate(Stream.M, 0),))

    def __or__(self, other: "Selector") -> "Selector":
        return Selector(coordinates=self.coordinates + other.coordinates)

    def __bool__(self) -> bool:
        return bool(self.coordinates)

    def __len__(self) -> int:
        return len(self.coordinates)

    def isdisjoint(self, other: "Selector") -> bool:
        return set(self.coordinates).isdisjoint(other.coordinates)

    def describe(self) -> str:
        return "{" + ",".join(c.label for c in self.coordinates) + "}"


class TrajectoryDistribution(BaseModel):
    """
    Dense joint distribution over an ordered list of coordinates.

    ``probabilities`` is flat, indexed mixed-radix over ``coordinates`` with the
    first coordinate most significant (C order of ``shape``). A full joint has
    the 3n+1 trajectory coordinates; marginals keep a subset in layout order.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    coordinates: tuple[Coordinate, ...]
    shape: tuple[int, ...]
    probabilities: np.ndarray
    horizon: int = Field(..., ge=1)
    kind: DistributionKind = DistributionKind.EXACT

    _marginals: dict = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context) -> None:
        if len(self.coordinates) != len(self.shape):
            raise ValueError("coordinates and shape differ in length")
        if int(np.prod(self.shape, dtype=np.int64)) != self.probabilities.size:
            raise ValueError("probability table size does not match shape")
        if self.probabilities.size and float(self.probabilities.min()) < 0.0:
            raise ValueError("probability table has negative entries")
        if abs(float(self.probabilities.sum()) - 1.0) > MASS_TOLERANCE:
            raise ValueError(f"probability table has mass {float(self.probabilities.sum())!r}, expected 1")
        self.probabilities.setflags(write=False)

    @property
    def is_full(self) -> bool:
        return self.coordinates == trajectory_coordinates(self.horizon)

    @property
    def table(self) -> np.ndarray:
        """The probabilities viewed with one axis per coordinate."""
        return self.probabilities.reshape(self.shape)

    @property
    def total_mass(self) -> float:
        return float(self.probabilities.sum())

    def axis_of(self, coordinate: Coordinate) -> Optional[int]:
        try:
            return self.coordinates.index(coordinate)
        except ValueError:
            return None

    def cached_marginal(self, key: tuple[Coordinate, ...]) -> Optional[np.ndarray]:
        return self._marginals.get(key)

    def store_marginal(self, key: tuple[Coordinate, ...], table: np.ndarray) -> None:
        table.setflags(write=False)
        self._marginals[key] = table
