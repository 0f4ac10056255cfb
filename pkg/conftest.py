"""
Shared fixtures for the test suites.
"""

import pytest
from src.concepts import Intervals, ProductClass, Singletons, UnionClass
from src.dependencies import get_experiment_service
from src.learners import SublearnerFactory
from src.services.experiment_service import ExperimentService


@pytest.fixture(autouse=True)
def _isolated_env(monkeypatch):
    """Keep developer environment variables out of settings-driven code paths."""
    for name in ("MODLEARN_SEED", "MODLEARN_ENVIRONMENT", "MODLEARN_LOGGING__LEVEL", "MODLEARN_DEBUG"):
        monkeypatch.delenv(name, raising=False)
    get_experiment_service.cache_clear()
    yield
    get_experiment_service.cache_clear()


@pytest.fixture
def intervals16():
    return Intervals(16)


@pytest.fixture
def rectangles16(intervals16):
    return ProductClass([intervals16, intervals16])


@pytest.fixture
def singletons_squared():
    return ProductClass([Singletons(2), Singletons(2)])


@pytest.fixture
def union_of_intervals(intervals16):
    return UnionClass([intervals16, intervals16])


@pytest.fixture
def factory():
    return SublearnerFactory()


@pytest.fixture
def service(factory):
    return ExperimentService(factory=factory, budget=1_000_000)
