"""
Tests for parameter sweeps.
"""
import csv
import io

import pytest

from src.core.errors import SweepParameterError
from src.models.report import IdentityId
from src.models.run import SweepParameter
from src.services.info import MESSAGE_LABELS
from src.models.system import KernelRole, SystemSpec
from src.services.sweep import sweep, variant, write_sweep_csv
from tests.conftest import bsc01_document

EPS_SWEEP = SweepParameter(path="forward_channel.eps", start=0.0, stop=0.5, steps=51)


@pytest.fixture(scope="module")
def eps_sweep():
    return sweep(SystemSpec.model_validate(bsc01_document()), EPS_SWEEP)


class TestSweep:
    """Tests for the bsc crossover sweep."""

    def test_grid(self, eps_sweep):
        values = [row.value for row in eps_sweep.rows]
        assert len(values) == 51
        assert values[0] == 0.0
        assert values[-1] == 0.5
        assert values[10] == pytest.approx(0.1)

    def test_noiseless_endpoint(self, eps_sweep):
        first = eps_sweep.rows[0].quantities
        assert first["MI[M;E]"] == pytest.approx(1.0, abs=1e-12)
        assert first["DI[X->E]"] == pytest.approx(1.0, abs=1e-12)
        assert first["DI[Y->E]"] == pytest.approx(1.0, abs=1e-12)

    def test_useless_channel_endpoint(self, eps_sweep):
        last = eps_sweep.rows[-1].quantities
        for label in MESSAGE_LABELS:
            assert abs(last[label]) <= 1e-9, label

    def test_bsc01_point_matches_golden_values(self, eps_sweep):
        row = eps_sweep.rows[10].quantities
        assert row["MI[M;E]"] == pytest.approx(0.742086, abs=1e-5)
        assert row["DI[Y->E]"] == pytest.approx(1.680078, abs=1e-5)

    def test_theorem1_along_sweep(self, eps_sweep):
        assert all(abs(row.residuals[IdentityId.THEOREM1]) <= 1e-9 for row in eps_sweep.rows)
        assert eps_sweep.all_hold

    def test_message_information_non_increasing(self, eps_sweep):
        values = [row.quantities["MI[M;E]"] for row in eps_sweep.rows]
        assert all(later <= earlier + 1e-9 for earlier, later in zip(values, values[1:]))


class TestSweepErrors:
    """Invalid sweep requests."""

    def test_full_table_not_sweepable(self, bsc01_spec):
        with pytest.raises(SweepParameterError, match="full table"):
            sweep(bsc01_spec, EPS_SWEEP)

    def test_bsc_range(self, bsc01_shorthand):
        with pytest.raises(SweepParameterError, match="within"):
            sweep(bsc01_shorthand, SweepParameter(path="forward_channel.eps", start=0.0, stop=0.6, steps=3))

    def test_unknown_kernel(self, bsc01_shorthand):
        with pytest.raises(SweepParameterError, match="unknown kernel"):
            sweep(bsc01_shorthand, SweepParameter(path="plant.eps", start=0.0, stop=0.5, steps=3))

    def test_non_numeric_field(self, bsc01_shorthand):
        with pytest.raises(SweepParameterError, match="not a numeric parameter"):
            sweep(bsc01_shorthand, SweepParameter(path="feedback_channel.eps", start=0.0, stop=0.5, steps=3))

    def test_variant_validates_value(self, bsc01_shorthand):
        with pytest.raises(SweepParameterError):
            variant(bsc01_shorthand, KernelRole.FORWARD, "eps", 1.5)


class TestSweepCsv:
    """Tests for the CSV hand-off."""

    def test_one_row_per_point(self, eps_sweep):
        buffer = io.StringIO()
        write_sweep_csv(eps_sweep, buffer)
        rows = list(csv.reader(io.StringIO(buffer.getvalue())))

        assert rows[0][0] == "forward_channel.eps"
        assert "MI[M;E]" in rows[0]
        assert "residual[theorem1]" in rows[0]
        assert len(rows) == 52
        assert float(rows[1][0]) == 0.0

    def test_repeatable_bytes(self, eps_sweep, bsc01_shorthand):
        again = sweep(bsc01_shorthand, SweepParameter(path="forward_channel.eps", start=0.0, stop=0.5, steps=51))
        a, b = io.StringIO(), io.StringIO()
        write_sweep_csv(eps_sweep, a)
        write_sweep_csv(again, b)
        assert a.getvalue() == b.getvalue()
