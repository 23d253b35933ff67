"""Shared fixtures and a deterministic hypothesis profile."""

import pytest
from hypothesis import HealthCheck, settings

from spherecomplex import build_genus_zero_complex, catalog

settings.register_profile(
    "suite",
    max_examples=50,
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def c4():
    return build_genus_zero_complex(4)


@pytest.fixture(scope="session")
def c5():
    return build_genus_zero_complex(5)


@pytest.fixture(scope="session")
def c6():
    return build_genus_zero_complex(6)


@pytest.fixture(scope="session")
def petersen():
    return catalog("petersen")
