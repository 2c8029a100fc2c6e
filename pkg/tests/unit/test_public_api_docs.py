"""
Tests that the main service entry points document their arguments.
"""
import pytest

from src.services.identities.fuzz import fuzz
from src.services.identities.verifier import verify_all
from src.services.info.functionals import generalized_di
from src.services.monte_carlo.sampler import sample
from src.services.sweep.service import sweep
from src.services.system_model.loader import load_spec
from src.services.system_model.service import generate_random
from src.services.trajectory.engine import build_joint, cmi, marginal

ENTRY_POINTS = [build_joint, marginal, cmi, generalized_di, verify_all, fuzz, sample, sweep, load_spec, generate_random]


class TestDocstrings:
    """Entry points describe every argument and the return value."""

    @pytest.mark.parametrize("func", ENTRY_POINTS, ids=lambda f: f.__name__)
    def test_args_and_returns_sections(self, func):
        doc = func.__doc__ or ""
        assert "Args:" in doc
        assert "Returns:" in doc

    @pytest.mark.parametrize("func", ENTRY_POINTS, ids=lambda f: f.__name__)
    def test_every_parameter_listed(self, func):
        args_section = func.__doc__.split("Args:", 1)[1].split("Returns:", 1)[0]
        for name in func.__code__.co_varnames[:func.__code__.co_argcount]:
            assert f"{name}:" in args_section
