"""Exception types raised by the engine.

Input problems derive from ``ValueError`` and map to CLI exit status 2.
"""


class InfoFlowError(ValueError):
    """Base class for rejected input."""


class SpecStructureError(InfoFlowError):
    """A system spec has the wrong shape: row counts, step counts or alphabets."""


class SpecFileError(InfoFlowError):
    """A spec file could not be parsed or failed validation."""

    def __init__(self, path: str, detail: str):
        self.path = path
        self.detail = detail
        super().__init__(f"{path}: {detail}")

    def __reduce__(self):
        return type(self), (self.path, self.detail)


class GuardExceededError(InfoFlowError):
    """The dense trajectory table would exceed the enumeration guard."""

    def __init__(self, required_entries: int, guard: int):
        self.required_entries = required_entries
        self.guard = guard
        super().__init__(
            f"trajectory table needs {required_entries} entries, guard is {guard} "
            f"(shrink alphabets/horizon or raise IFLOW_GUARD)"
        )

    def __reduce__(self):
        return type(self), (self.required_entries, self.guard)


class SelectorError(InfoFlowError):
    """A selector is empty, overlaps another, or references a missing coordinate."""


class QueryError(InfoFlowError):
    """An information query does not fit the distribution it is evaluated on."""


class SweepParameterError(InfoFlowError):
    """The swept field is not a parametric shorthand or the range is invalid."""


class InternalConsistencyError(RuntimeError):
    """A computed information value is negative beyond numerical slack."""
