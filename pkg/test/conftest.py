"""
Shared fixtures for the test suite
"""
import pytest

from app.engine import HingeEngine
from app.services.sampler_service import SamplerService


@pytest.fixture
def engine():
    return HingeEngine()


@pytest.fixture
def sampler():
    return SamplerService(seed=1234)
