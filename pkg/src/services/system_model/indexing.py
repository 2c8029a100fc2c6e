"""
Mixed-radix history indexing.

A kernel row at step i is addressed by the tuple of conditioning symbols listed
in trajectory order; the oldest symbol is most significant:

    index = sum_t symbol_t * prod_{t' > t} |A_t'|

    encoder  step i: (x_0, x_1, e_1, ..., x_{i-1}, e_{i-1})
    forward  step i: (x_1, y_1, ..., x_{i-1}, y_{i-1}, x_i)
    feedback step i: (y_1, e_1, ..., y_{i-1}, e_{i-1}, y_i)
"""
from typing import Sequence

import numpy as np

from src.models.distribution import Coordinate
from src.models.system import Alphabets, KernelRole, Stream

_HISTORY_STREAMS = {
    KernelRole.ENCODER: (Stream.X, Stream.E),
    KernelRole.FORWARD: (Stream.X, Stream.Y),
    KernelRole.FEEDBACK: (Stream.Y, Stream.E),
}

# the stream whose step-i symbol closes the history (None: encoder has no current input)
_CURRENT_INPUT = {
    KernelRole.ENCODER: None,
    KernelRole.FORWARD: Stream.X,
    KernelRole.FEEDBACK: Stream.Y,
}


def history_coordinates(role: KernelRole, step: int) -> tuple[Coordinate, ...]:
    """Conditioning coordinates of ``role`` at ``step`` in layout order."""
    coords: list[Coordinate] = []
    if role == KernelRole.ENCODER:
        coords.append(Coordinate(Stream.M, 0))
    for t in range(1, step):
        coords.extend(Coordinate(s, t) for s in _HISTORY_STREAMS[role])
    current = _CURRENT_INPUT[role]
    if current is not None:
        coords.append(Coordinate(current, step))
    return tuple(sorted(coords, key=lambda c: c.position))


def designated_input_axis(role: KernelRole, step: int) -> int:
    """Axis of the input that shorthand kernels read: x_0 for the encoder, else the current input."""
    if role == KernelRole.ENCODER:
        return 0
    return len(history_coordinates(role, step)) - 1


def history_radices(role: KernelRole, step: int, alphabets: Alphabets) -> tuple[int, ...]:
    return tuple(alphabets.size(c.stream) for c in history_coordinates(role, step))


def row_count(role: KernelRole, step: int, alphabets: Alphabets) -> int:
    return int(np.prod(history_radices(role, step, alphabets), dtype=np.int64))


def encode_history(symbols: Sequence[int], radices: Sequence[int]) -> int:
    """Mixed-radix index of a history tuple."""
    if len(symbols) != len(radices):
        raise ValueError("history length does not match radices")
    index = 0
    for symbol, radix in zip(symbols, radices):
        if not 0 <= symbol < radix:
            raise ValueError(f"symbol {symbol} outside alphabet of size {radix}")
        index = index * radix + int(symbol)
    return index


def decode_history(index: int, radices: Sequence[int]) -> tuple[int, ...]:
    """Inverse of :func:`encode_history`."""
    total = int(np.prod(radices, dtype=np.int64))
    if not 0 <= index < total:
        raise ValueError(f"index {index} outside table of {total} rows")
    symbols = []
    for radix in reversed(radices):
        index, symbol = divmod(index, radix)
        symbols.append(symbol)
    return tuple(reversed(symbols))
