"""
Named information quantities of a closed-loop system.

Labels are stable strings (catalog version 1) so reports can be diffed across
runs. ``-`` marks a unit delay (stream^{i-1} in term i, or ^{n-1} overall).
"""
import logging

from src.models.distribution import Selector, TrajectoryDistribution
from src.models.query import InfoForm, InfoQuery, StreamLag
from src.models.report import QuantityCatalog, QuantityValue
from src.models.system import Stream

from .functionals import generalized_di

logger = logging.getLogger(__name__)

CATALOG_VERSION = "1"

MI_M_E = "MI[M;E]"
DI_X_E = "DI[X->E]"
DI_Y_E = "DI[Y->E]"
DI_Y_E_GIVEN_M = "DI[Y->E | M]"
DI_X_Y = "DI[X->Y]"
DI_X_E_PREV = "DI[X->E; n-1]"
DDI_E_Y = "DDI[E->Y]"
MI_Y_M_GIVEN_E_PREV = "MI[Y;M | E-]"
DDI_E_X = "DDI[E->X]"
DDI_Y_X = "DDI[Y->X]"
CCDI_E_X_Y = "CCDI[E->X || Y-]"
CCDI_E_X_Y_STATEMENT = "CCDI[E->X || Y-; statement]"
MI_X_Y = "MI[X;Y]"
MI_M_Y = "MI[M;Y]"
MI_E_PREV_M_GIVEN_Y = "MI[E-;M | Y]"
MI_M_E_PREV = "MI[M;E-]"
H_E = "H[E]"
H_E_GIVEN_M = "H[E | M]"

# labels whose value is carried by the message; zero whenever the loop ignores x_0
MESSAGE_LABELS = (
    MI_M_E, DI_X_E, DI_X_Y, DI_X_E_PREV, MI_Y_M_GIVEN_E_PREV,
    MI_M_Y, MI_E_PREV_M_GIVEN_Y, MI_M_E_PREV,
)

CATALOG_NOTES = [
    "Delayed directed information DDI[A->B] = sum_{i=1..n} I(a^{i-1}; b_i | b^{i-1}) with a^0 empty.",
    "DI[Y->E | M] conditions every term on x_0; x_0 exists at time 0, so causal and full conditioning coincide.",
    "CCDI[E->X || Y-] follows the derivation sum_i I(e^{i-1}; x_i | x^{i-1}, y^{i-1}); "
    "the stated form I(e^n -> x^n || y^{n-1}) lets e_i enter term i and is reported as "
    "CCDI[E->X || Y-; statement].",
    "MI[M;E] equals I(e^n; x_0) by symmetry.",
]


def _mi(src: Stream, dst: Stream, lag: int = 0, static: Selector = None, k: int = None) -> InfoQuery:
    return InfoQuery(
        form=InfoForm.MUTUAL_INFORMATION,
        src=StreamLag(stream=src, lag=lag),
        dst=dst,
        static_condition=static or Selector(),
        horizon_override=k,
    )


def _di(src: Stream, dst: Stream, lag: int = 0, conds=(), static: Selector = None, k: int = None) -> InfoQuery:
    return InfoQuery(
        form=InfoForm.DIRECTED_INFORMATION,
        src=StreamLag(stream=src, lag=lag),
        dst=dst,
        causal_conditions=tuple(StreamLag(stream=s, lag=l) for s, l in conds),
        static_condition=static or Selector(),
        horizon_override=k,
    )


def catalog_queries(n: int) -> list[tuple[str, InfoQuery]]:
    """The labeled queries of the catalog for horizon ``n``, in report order."""
    message = Selector.message()
    return [
        (MI_M_E, _mi(Stream.M, Stream.E)),
        (DI_X_E, _di(Stream.X, Stream.E)),
        (DI_Y_E, _di(Stream.Y, Stream.E)),
        (DI_Y_E_GIVEN_M, _di(Stream.Y, Stream.E, static=message)),
        (DI_X_Y, _di(Stream.X, Stream.Y)),
        (DI_X_E_PREV, _di(Stream.X, Stream.E, k=n - 1)),
        (DDI_E_Y, _di(Stream.E, Stream.Y, lag=1)),
        (MI_Y_M_GIVEN_E_PREV, _mi(Stream.Y, Stream.M, static=Selector.stream(Stream.E, n - 1))),
        (DDI_E_X, _di(Stream.E, Stream.X, lag=1)),
        (DDI_Y_X, _di(Stream.Y, Stream.X, lag=1)),
        (CCDI_E_X_Y, _di(Stream.E, Stream.X, lag=1, conds=[(Stream.Y, 1)])),
        (CCDI_E_X_Y_STATEMENT, _di(Stream.E, Stream.X, lag=0, conds=[(Stream.Y, 1)])),
        (MI_X_Y, _mi(Stream.X, Stream.Y)),
        (MI_M_Y, _mi(Stream.M, Stream.Y)),
        (MI_E_PREV_M_GIVEN_Y, _mi(Stream.E, Stream.M, lag=1, static=Selector.stream(Stream.Y, n))),
        (MI_M_E_PREV, _mi(Stream.M, Stream.E, k=n - 1)),
        (H_E, InfoQuery(form=InfoForm.ENTROPY, dst=Stream.E)),
        (H_E_GIVEN_M, InfoQuery(form=InfoForm.ENTROPY, dst=Stream.E, static_condition=message)),
    ]


def query_for(label: str, n: int) -> InfoQuery:
    for name, query in catalog_queries(n):
        if name == label:
            return query
    raise KeyError(f"unknown catalog label {label!r}")


def named_quantities(dist: TrajectoryDistribution) -> QuantityCatalog:
    """Evaluate every catalog quantity on ``dist``."""
    quantities = []
    for label, query in catalog_queries(dist.horizon):
        value, terms = generalized_di(dist, query)
        quantities.append(QuantityValue(
            label=label,
            formula=query.formula(),
            value_bits=value,
            per_step_terms=terms,
        ))
    logger.debug(f"Computed {len(quantities)} catalog quantities (n={dist.horizon}, {dist.kind})")
    return QuantityCatalog(
        version=CATALOG_VERSION,
        horizon=dist.horizon,
        kind=dist.kind.value,
        quantities=quantities,
        notes=list(CATALOG_NOTES),
    )
