"""
Tests for the system-model service: expansion, validation, random generation, spec files.
"""
import json
from pathlib import Path

import numpy as np
import pytest

from src.core.errors import GuardExceededError, SpecFileError, SpecStructureError
from src.models.run import EncoderMode
from src.models.system import Alphabets, Dims, KernelRole, StochasticKernel, SystemSpec
from src.services.system_model import (
    expand,
    generate_random,
    load_spec,
    read_spec,
    spec_digest,
    spec_to_document,
    validate,
    write_spec,
)
from tests.conftest import bsc01_document, nl_document

SYSTEMS_DIR = Path(__file__).resolve().parents[1] / "systems"

BINARY_N2 = Dims(alphabets=Alphabets(m=2, x=2, y=2, e=2), horizon=2)


def _with_table(spec: SystemSpec, role: KernelRole, step: int, table: np.ndarray) -> SystemSpec:
    kernel = spec.kernel(role)
    steps = list(kernel.steps)
    steps[step - 1] = table
    return spec.model_copy(update={role.value: StochasticKernel(steps=steps, deterministic=kernel.deterministic)})


class TestExpand:
    """Tests for shorthand expansion."""

    def test_bsc_forward_channel(self, bsc01_spec):
        tables = bsc01_spec.forward_channel.steps
        assert tables[0].shape == (2, 2)
        assert tables[1].shape == (8, 2)
        # p(y_i = x_i) = 0.9 for every history; x_i is the last history symbol
        for table in tables:
            for row, probs in enumerate(table):
                assert probs[row % 2] == pytest.approx(0.9)

    def test_identity_feedback(self, nl_spec):
        table = nl_spec.feedback_channel.steps[1]
        assert table.shape == (8, 2)
        for row, probs in enumerate(table):
            assert probs[row % 2] == 1.0

    def test_repetition_encoder_reads_message(self, nl_spec):
        table = nl_spec.encoder.steps[1]
        # history (x0, x1, e1): x0 is the most significant symbol
        for row, probs in enumerate(table):
            assert probs[row // 4] == 1.0
        assert nl_spec.encoder.deterministic is True

    def test_expand_is_idempotent(self, bsc01_spec):
        again = expand(bsc01_spec)
        for role in KernelRole:
            for a, b in zip(again.kernel(role).steps, bsc01_spec.kernel(role).steps):
                assert np.array_equal(a, b)

    def test_bsc_requires_binary(self):
        spec = SystemSpec.model_validate(nl_document(
            alphabets={"m": 3, "x": 3, "y": 3, "e": 3},
            message_prior=[1 / 3] * 3,
            forward_channel={"type": "bsc", "eps": 0.1},
        ))
        with pytest.raises(SpecStructureError, match="binary"):
            expand(spec)

    def test_identity_requires_equal_alphabets(self):
        spec = SystemSpec.model_validate(nl_document(alphabets={"m": 2, "x": 2, "y": 3, "e": 2}))
        with pytest.raises(SpecStructureError):
            expand(spec)

    def test_memoryless_shape_checked(self):
        spec = SystemSpec.model_validate(nl_document(forward_channel={"type": "memoryless", "rows": [[1.0, 0.0]]}))
        with pytest.raises(SpecStructureError, match="memoryless"):
            expand(spec)


class TestValidate:
    """Tests for validate."""

    def test_noiseless_loop_passes(self, nl_spec):
        assert validate(nl_spec).ok

    def test_scaled_encoder_row_reported(self, nl_spec):
        table = np.array(nl_spec.encoder.steps[0])
        table[0] *= 1.5
        report = validate(_with_table(nl_spec, KernelRole.ENCODER, 1, table))

        assert not report.ok
        v = report.violations[0]
        assert (v.kernel, v.step, v.row) == ("encoder", 1, 0)

    def test_short_forward_channel_is_structural(self, nl_spec):
        one_step = StochasticKernel(steps=[nl_spec.forward_channel.steps[0]])
        broken = nl_spec.model_copy(update={"forward_channel": one_step})
        with pytest.raises(SpecStructureError):
            validate(broken)

    def test_repair_renormalizes_small_deviation(self, bsc01_spec):
        table = np.array(bsc01_spec.forward_channel.steps[0])
        table[1] *= 1 + 5e-10
        spec = _with_table(bsc01_spec, KernelRole.FORWARD, 1, table)

        assert not validate(spec).ok
        repaired = validate(spec, repair=True)
        assert repaired.ok
        assert repaired.repaired_rows == 1
        assert repaired.spec.forward_channel.steps[0][1].sum() == pytest.approx(1.0, abs=1e-15)

    def test_repair_leaves_large_deviation(self, nl_spec):
        table = np.array(nl_spec.encoder.steps[0])
        table[0] *= 1.5
        report = validate(_with_table(nl_spec, KernelRole.ENCODER, 1, table), repair=True)
        assert report.repaired_rows == 0
        assert report.violations[0].message.startswith("row sums to")

    def test_declared_deterministic_requires_point_masses(self, bsc01_spec):
        soft = StochasticKernel(steps=bsc01_spec.forward_channel.steps, deterministic=True)
        report = validate(bsc01_spec.model_copy(update={"encoder": soft}))
        assert any("point mass" in v.message for v in report.violations)

    def test_bad_prior_reported(self, nl_spec):
        report = validate(nl_spec.model_copy(update={"message_prior": np.array([0.7, 0.7])}))
        assert report.violations[0].kernel == "message_prior"


class TestGenerateRandom:
    """Tests for seeded random specs."""

    def test_generated_spec_is_valid(self):
        spec = generate_random(1, BINARY_N2, EncoderMode.DETERMINISTIC)
        assert validate(spec).ok
        assert spec.deterministic_encoder is True

    def test_same_seed_same_bytes(self):
        a = generate_random(1, BINARY_N2)
        b = generate_random(1, BINARY_N2)
        assert spec_digest(a) == spec_digest(b)

    def test_different_seeds_differ(self):
        assert spec_digest(generate_random(1, BINARY_N2)) != spec_digest(generate_random(2, BINARY_N2))

    def test_stochastic_mode(self):
        spec = generate_random(3, BINARY_N2, EncoderMode.STOCHASTIC)
        assert validate(spec).ok
        assert spec.deterministic_encoder is False
        assert np.all(spec.encoder.steps[0] > 0)

    def test_guard_enforced(self):
        big = Dims(alphabets=Alphabets(m=3, x=3, y=3, e=3), horizon=4)
        with pytest.raises(GuardExceededError) as excinfo:
            generate_random(1, big, guard=1000)
        assert excinfo.value.required_entries == 3 * 27**4

    def test_seed_must_be_unsigned_64_bit(self):
        with pytest.raises(ValueError):
            generate_random(-1, BINARY_N2)


class TestSpecFiles:
    """Tests for reading and writing spec files."""

    def test_load_expands_and_validates(self, spec_file):
        spec = load_spec(spec_file(bsc01_document()))
        assert spec.is_expanded
        assert spec.horizon == 2

    def test_read_keeps_shorthands(self, spec_file):
        spec = read_spec(spec_file(bsc01_document()))
        assert spec.forward_channel.type == "bsc"

    def test_missing_file(self, tmp_path):
        with pytest.raises(SpecFileError, match="not found"):
            load_spec(tmp_path / "absent.json")

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(SpecFileError, match="invalid JSON"):
            load_spec(path)

    def test_field_error_names_field(self, spec_file):
        document = nl_document()
        document["alphabets"]["x"] = 0
        with pytest.raises(SpecFileError, match="alphabets.x"):
            load_spec(spec_file(document))

    def test_row_error_names_kernel_step_row(self, spec_file, nl_spec):
        document = spec_to_document(nl_spec)
        document["feedback_channel"]["steps"][1][3] = [0.5, 0.2]
        with pytest.raises(SpecFileError) as excinfo:
            load_spec(spec_file(document))
        assert "kernel feedback_channel step 2 row 3" in str(excinfo.value)

    def test_write_then_load(self, tmp_path, bsc01_spec):
        path = write_spec(bsc01_spec, tmp_path / "bsc01.json")
        loaded = load_spec(path)
        assert spec_digest(loaded) == spec_digest(bsc01_spec)
        assert json.loads(path.read_text())["horizon"] == 2


class TestShippedSystems:
    """The reference systems under systems/ load and match the fixtures."""

    @pytest.mark.parametrize("name", ["nl", "bsc01", "const"])
    def test_loads(self, name):
        spec = load_spec(SYSTEMS_DIR / f"{name}.json")
        assert spec.horizon == 2
        assert all(isinstance(spec.kernel(role), StochasticKernel) for role in KernelRole)

    def test_bsc01_matches_fixture(self, bsc01_spec):
        assert spec_digest(load_spec(SYSTEMS_DIR / "bsc01.json")) == spec_digest(bsc01_spec)
