"""System-model services package."""

from .indexing import (
    decode_history,
    encode_history,
    history_coordinates,
    history_radices,
    row_count,
)
from .kernels import expand_kernel
from .service import check_guard, expand, generate_random, spec_digest, validate
from .loader import load_spec, parse_spec_document, read_spec, spec_to_document, write_spec

__all__ = [
    "decode_history",
    "encode_history",
    "history_coordinates",
    "history_radices",
    "row_count",
    "expand_kernel",
    "check_guard",
    "expand",
    "generate_random",
    "spec_digest",
    "validate",
    "load_spec",
    "parse_spec_document",
    "read_spec",
    "spec_to_document",
    "write_spec",
]
