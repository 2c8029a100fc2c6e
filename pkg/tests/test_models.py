"""
Unit tests for Pydantic models.
"""
import numpy as np
import pytest
from pydantic import ValidationError

from src.models.distribution import Coordinate, Selector, TrajectoryDistribution, trajectory_coordinates
from src.models.query import InfoForm, InfoQuery, StreamLag
from src.models.run import Command, RunConfig, SweepParameter
from src.models.sample import SampleBatch
from src.models.system import (
    Alphabets,
    BscKernel,
    Dims,
    MemorylessKernel,
    RepetitionKernel,
    StochasticKernel,
    Stream,
    SystemSpec,
)
from tests.conftest import nl_document


class TestSystemSpec:
    """Tests for SystemSpec parsing."""

    def test_shorthand_kernels_parse(self):
        spec = SystemSpec.model_validate(nl_document(forward_channel={"type": "bsc", "eps": 0.1}))

        assert isinstance(spec.encoder, RepetitionKernel)
        assert isinstance(spec.forward_channel, BscKernel)
        assert spec.forward_channel.eps == 0.1
        assert spec.is_expanded is False

    def test_unknown_kernel_type_rejected(self):
        with pytest.raises(ValidationError):
            SystemSpec.model_validate(nl_document(encoder={"type": "magic"}))

    def test_bsc_eps_range(self):
        with pytest.raises(ValidationError):
            BscKernel(eps=1.5)

    def test_tables_are_read_only(self):
        kernel = StochasticKernel(steps=[[[0.5, 0.5]]])
        with pytest.raises(ValueError):
            kernel.steps[0][0, 0] = 1.0

    def test_step_table_must_be_two_dimensional(self):
        with pytest.raises(ValidationError, match="step 2"):
            StochasticKernel(steps=[[[1.0, 0.0]], [1.0, 0.0]])

    def test_ragged_step_table_rejected(self):
        with pytest.raises(ValidationError, match="unequal lengths"):
            StochasticKernel(steps=[[[1.0, 0.0], [1.0]]])

    def test_ragged_memoryless_rows_rejected(self):
        with pytest.raises(ValidationError, match="unequal lengths"):
            MemorylessKernel(rows=[[1.0], [0.5, 0.5]])

    def test_deterministic_encoder_detection(self):
        spec = SystemSpec.model_validate(nl_document())
        assert spec.deterministic_encoder is True

        noisy = SystemSpec.model_validate(nl_document(encoder={"type": "bsc", "eps": 0.2}))
        assert noisy.deterministic_encoder is False

    def test_table_entries(self):
        dims = Dims(alphabets=Alphabets(m=2, x=3, y=2, e=2), horizon=2)
        assert dims.table_entries == 2 * 12**2


class TestCoordinates:
    """Tests for trajectory coordinates and selectors."""

    def test_layout_positions(self):
        assert Coordinate(Stream.M, 0).position == 0
        assert Coordinate(Stream.X, 1).position == 1
        assert Coordinate(Stream.Y, 1).position == 2
        assert Coordinate(Stream.E, 2).position == 6

    def test_labels(self):
        labels = [c.label for c in trajectory_coordinates(2)]
        assert labels == ["x0", "x1", "y1", "e1", "x2", "y2", "e2"]

    def test_selector_sorted_and_deduplicated(self):
        s = Selector.of([Coordinate(Stream.E, 1), Coordinate(Stream.X, 1), Coordinate(Stream.E, 1)])
        assert s.coordinates == (Coordinate(Stream.X, 1), Coordinate(Stream.E, 1))

    def test_empty_stream_prefix(self):
        assert not Selector.stream(Stream.E, 0)
        assert len(Selector.stream(Stream.Y, 3)) == 3

    def test_message_time_must_be_zero(self):
        with pytest.raises(ValidationError):
            Selector.of([Coordinate(Stream.M, 1)])

    def test_union_and_disjointness(self):
        a = Selector.stream(Stream.X, 2)
        b = Selector.at(Stream.X, 2)
        assert not a.isdisjoint(b)
        assert a.isdisjoint(Selector.message())
        assert len(a | Selector.message()) == 3


class TestTrajectoryDistribution:
    """Tests for dense joint invariants."""

    @staticmethod
    def _build(probabilities):
        return TrajectoryDistribution(
            coordinates=trajectory_coordinates(1)[:2],
            shape=(2, 2),
            probabilities=np.array(probabilities, dtype=np.float64),
            horizon=1,
        )

    def test_valid_table_is_read_only(self):
        dist = self._build([0.25, 0.25, 0.25, 0.25])
        with pytest.raises(ValueError):
            dist.probabilities[0] = 1.0

    def test_negative_entry_rejected(self):
        with pytest.raises(ValueError, match="negative"):
            self._build([1.25, -0.25, 0.0, 0.0])

    def test_mass_must_be_one(self):
        with pytest.raises(ValueError, match="mass"):
            self._build([0.5, 0.5, 0.5, 0.5])

    def test_rounding_within_tolerance_accepted(self):
        dist = self._build([0.25, 0.25, 0.25, 0.25 + 1e-12])
        assert dist.total_mass == pytest.approx(1.0)


class TestSampleBatch:
    """Tests for sampled batch invariants."""

    @staticmethod
    def _build(rows):
        return SampleBatch(
            count=len(rows),
            horizon=1,
            alphabets=Alphabets(m=2, x=3, y=2, e=2),
            trajectories=np.array(rows, dtype=np.int64),
            seed=0,
            spec_digest="0" * 64,
        )

    def test_symbols_within_alphabets(self):
        batch = self._build([[1, 2, 1, 1], [0, 0, 0, 0]])
        assert batch.trajectories.shape == (2, 4)

    def test_symbol_beyond_column_alphabet_rejected(self):
        # column y1 has only two symbols although x1 has three
        with pytest.raises(ValueError, match="outside"):
            self._build([[0, 0, 2, 0]])

    def test_negative_symbol_rejected(self):
        with pytest.raises(ValueError, match="outside"):
            self._build([[-1, 0, 0, 0]])

    def test_wrong_width_rejected(self):
        with pytest.raises(ValueError):
            self._build([[0, 0, 0]])


class TestInfoQuery:
    """Tests for InfoQuery validation."""

    def test_mutual_information_needs_source(self):
        with pytest.raises(ValidationError):
            InfoQuery(form=InfoForm.MUTUAL_INFORMATION, dst=Stream.E)

    def test_streams_must_be_distinct(self):
        with pytest.raises(ValidationError):
            InfoQuery(
                form=InfoForm.DIRECTED_INFORMATION,
                src=StreamLag(stream=Stream.X),
                dst=Stream.Y,
                causal_conditions=(StreamLag(stream=Stream.X, lag=1),),
            )

    def test_lag_range(self):
        with pytest.raises(ValidationError):
            StreamLag(stream=Stream.X, lag=2)

    def test_formula_of_delayed_di(self):
        query = InfoQuery(form=InfoForm.DIRECTED_INFORMATION, src=StreamLag(stream=Stream.E, lag=1), dst=Stream.Y)
        assert query.formula() == "sum_{i=1..n} I(e^{i-1} ; y_i | y^{i-1})"


class TestRunConfig:
    """Tests for RunConfig command validation."""

    def test_compute_requires_spec(self):
        with pytest.raises(ValidationError):
            RunConfig(command=Command.COMPUTE)

    def test_fuzz_requires_trials(self):
        with pytest.raises(ValidationError):
            RunConfig(command=Command.FUZZ, trials=0)

    def test_tolerance_positive(self):
        with pytest.raises(ValidationError):
            RunConfig(command=Command.FUZZ, tolerance=0.0)

    def test_sweep_steps_at_least_two(self):
        with pytest.raises(ValidationError):
            SweepParameter(path="forward_channel.eps", start=0.0, stop=0.5, steps=1)

    def test_sweep_requires_parameter(self, tmp_path):
        with pytest.raises(ValidationError):
            RunConfig(command=Command.SWEEP, spec_path=tmp_path / "s.json")

    def test_valid_fuzz_config(self):
        config = RunConfig(command=Command.FUZZ, seed=42, trials=10)
        assert config.seed == 42
        assert np.isclose(config.tolerance, 1e-9)
