"""Identity verification and fuzzing package."""

from .definitions import IDENTITIES, IDENTITY_BY_ID
from .verifier import deviation_bits, proof_trace_lines, verify, verify_all
from .fuzz import fuzz, trial_plan

__all__ = [
    "IDENTITIES",
    "IDENTITY_BY_ID",
    "deviation_bits",
    "proof_trace_lines",
    "verify",
    "verify_all",
    "fuzz",
    "trial_plan",
]
