"""Information functionals package."""

from .functionals import generalized_di
from .catalog import (
    CATALOG_VERSION,
    MESSAGE_LABELS,
    catalog_queries,
    named_quantities,
    query_for,
)

__all__ = [
    "generalized_di",
    "CATALOG_VERSION",
    "MESSAGE_LABELS",
    "catalog_queries",
    "named_quantities",
    "query_for",
]
