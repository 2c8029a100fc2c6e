"""
Pytest configuration and fixtures.
"""
import json

import pytest

from src.core import get_settings
from src.models.system import Alphabets, SystemSpec
from src.services.system_model import expand
from src.services.trajectory import build_joint

BINARY = {"m": 2, "x": 2, "y": 2, "e": 2}


def nl_document(**overrides) -> dict:
    """Noiseless loop: uniform binary message, repetition encoder, identity channels, n=2."""
    document = {
        "alphabets": dict(BINARY),
        "horizon": 2,
        "message_prior": [0.5, 0.5],
        "encoder": {"type": "repetition"},
        "forward_channel": {"type": "identity"},
        "feedback_channel": {"type": "identity"},
    }
    document.update(overrides)
    return document


def bsc01_document() -> dict:
    return nl_document(forward_channel={"type": "bsc", "eps": 0.1})


def const_document() -> dict:
    return nl_document(encoder={"type": "constant", "value": 0})


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Provide a clean environment and fresh cached settings for every test."""
    for var in ("IFLOW_GUARD", "IFLOW_TOLERANCE", "IFLOW_DEBUG", "IFLOW_JOBS", "IFLOW_SAMPLE_BLOCK_SIZE"):
        monkeypatch.delenv(var, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def nl_spec() -> SystemSpec:
    return expand(SystemSpec.model_validate(nl_document()))


@pytest.fixture
def const_spec() -> SystemSpec:
    return expand(SystemSpec.model_validate(const_document()))


@pytest.fixture
def bsc01_spec() -> SystemSpec:
    return expand(SystemSpec.model_validate(bsc01_document()))


@pytest.fixture
def bsc01_shorthand() -> SystemSpec:
    """BSC01 as written, before expansion."""
    return SystemSpec.model_validate(bsc01_document())


@pytest.fixture
def nl_joint(nl_spec):
    return build_joint(nl_spec)


@pytest.fixture
def bsc01_joint(bsc01_spec):
    return build_joint(bsc01_spec)


@pytest.fixture
def const_joint(const_spec):
    return build_joint(const_spec)


@pytest.fixture
def binary_alphabets() -> Alphabets:
    return Alphabets(**BINARY)


@pytest.fixture
def spec_file(tmp_path):
    """Write a spec document to a temporary JSON file and return its path."""
    def _write(document: dict, name: str = "spec.json"):
        path = tmp_path / name
        path.write_text(json.dumps(document), encoding="utf-8")
        return path
    return _write
