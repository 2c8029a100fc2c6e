"""
Tests for generalized directed information and the named-quantity catalog.
"""
import pytest

from src.core.errors import QueryError
from src.models.distribution import Selector
from src.models.query import InfoForm, InfoQuery, StreamLag
from src.models.run import EncoderMode
from src.models.system import Alphabets, Dims, Stream, SystemSpec
from src.services.info import MESSAGE_LABELS, generalized_di, named_quantities, query_for
from src.services.system_model import expand, generate_random
from src.services.trajectory import build_joint
from tests.conftest import nl_document


def di(src: Stream, dst: Stream, lag: int = 0, **kwargs) -> InfoQuery:
    return InfoQuery(form=InfoForm.DIRECTED_INFORMATION, src=StreamLag(stream=src, lag=lag), dst=dst, **kwargs)


class TestGeneralizedDi:
    """Tests for generalized_di."""

    def test_noiseless_loop_terms(self, nl_joint):
        value, terms = generalized_di(nl_joint, di(Stream.X, Stream.E))
        assert value == pytest.approx(1.0)
        assert terms == pytest.approx([1.0, 0.0])

    def test_constant_encoder(self, const_joint):
        value, _ = generalized_di(const_joint, di(Stream.X, Stream.E))
        assert value == 0.0

    def test_conditioned_on_message(self, bsc01_joint):
        value, terms = generalized_di(bsc01_joint, di(Stream.Y, Stream.E, static_condition=Selector.message()))
        assert value == pytest.approx(0.9379912, abs=1e-5)
        assert len(terms) == 2

    def test_horizon_override(self, nl_joint):
        value, terms = generalized_di(nl_joint, di(Stream.X, Stream.E, horizon_override=1))
        assert value == pytest.approx(1.0)
        assert len(terms) == 1

    def test_zero_horizon_is_empty(self, nl_joint):
        value, terms = generalized_di(nl_joint, di(Stream.X, Stream.E, horizon_override=0))
        assert value == 0.0
        assert terms == []

    def test_delayed_first_term_is_zero(self, bsc01_joint):
        _, terms = generalized_di(bsc01_joint, di(Stream.E, Stream.Y, lag=1))
        assert terms[0] == 0.0

    def test_override_beyond_horizon(self, nl_joint):
        with pytest.raises(QueryError):
            generalized_di(nl_joint, di(Stream.X, Stream.E, horizon_override=3))

    def test_static_condition_beyond_horizon(self, nl_joint):
        with pytest.raises(QueryError):
            generalized_di(nl_joint, di(Stream.X, Stream.Y, static_condition=Selector.at(Stream.E, 4)))

    def test_message_cannot_be_di_destination(self, nl_joint):
        with pytest.raises(QueryError):
            generalized_di(nl_joint, di(Stream.X, Stream.M))

    def test_mutual_information_chain_rule(self, bsc01_joint):
        query = InfoQuery(form=InfoForm.MUTUAL_INFORMATION, src=StreamLag(stream=Stream.M), dst=Stream.E)
        value, terms = generalized_di(bsc01_joint, query)
        assert value == pytest.approx(0.742086, abs=1e-5)
        assert sum(terms) == pytest.approx(value, abs=1e-12)

    def test_no_feedback_bsc_inputs(self):
        document = nl_document(
            encoder={"type": "memoryless", "rows": [[0.5, 0.5], [0.5, 0.5]]},
            forward_channel={"type": "bsc", "eps": 0.1},
        )
        joint = build_joint(expand(SystemSpec.model_validate(document)))
        value, _ = generalized_di(joint, di(Stream.X, Stream.Y))
        assert value == pytest.approx(1.0620088, abs=1e-6)

    @pytest.mark.parametrize("seed", range(10))
    def test_partial_sums_non_decreasing(self, seed):
        dims = Dims(alphabets=Alphabets(m=2, x=2, y=3, e=2), horizon=3)
        joint = build_joint(generate_random(seed, dims, EncoderMode.STOCHASTIC))
        partial = [generalized_di(joint, di(Stream.X, Stream.Y, horizon_override=k))[0] for k in range(4)]
        assert all(later >= earlier - 1e-9 for earlier, later in zip(partial, partial[1:]))

    def test_entropy_form(self, bsc01_joint):
        query = InfoQuery(form=InfoForm.ENTROPY, dst=Stream.Y)
        value, terms = generalized_di(bsc01_joint, query)
        assert value == pytest.approx(1.680078, abs=1e-5)
        assert terms[0] == pytest.approx(1.0)


class TestCatalog:
    """Tests for named_quantities."""

    def test_noiseless_loop(self, nl_joint):
        catalog = named_quantities(nl_joint)
        assert catalog.value("MI[M;E]") == pytest.approx(1.0)
        assert catalog.value("DI[X->E]") == pytest.approx(1.0)
        assert catalog.value("DI[Y->E]") == pytest.approx(1.0)
        assert catalog.value("DI[Y->E | M]") == pytest.approx(0.0, abs=1e-12)

    def test_bsc01_golden_values(self, bsc01_joint):
        catalog = named_quantities(bsc01_joint)
        assert catalog.value("MI[M;E]") == pytest.approx(0.742086, abs=1e-5)
        assert catalog.value("DI[Y->E]") == pytest.approx(1.680078, abs=1e-5)
        assert catalog.value("MI[M;E]") + catalog.value("DI[Y->E | M]") == pytest.approx(
            catalog.value("DI[Y->E]"), abs=1e-9
        )

    def test_constant_encoder_message_quantities(self, const_joint):
        catalog = named_quantities(const_joint)
        for label in MESSAGE_LABELS:
            assert catalog.value(label) == pytest.approx(0.0, abs=1e-12), label

    def test_catalog_metadata(self, bsc01_joint):
        catalog = named_quantities(bsc01_joint)
        assert catalog.version == "1"
        assert catalog.kind == "exact"
        assert any("statement" in note for note in catalog.notes)
        assert all(q.formula for q in catalog.quantities)

    def test_query_for_unknown_label(self):
        with pytest.raises(KeyError):
            query_for("DI[nothing]", 2)

    def test_labels_unique(self, nl_joint):
        labels = [q.label for q in named_quantities(nl_joint).quantities]
        assert len(labels) == len(set(labels))
