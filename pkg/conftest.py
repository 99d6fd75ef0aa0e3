import os

import pytest
from hypothesis import HealthCheck, settings as hypothesis_settings

# Quiet progress lines and keep counting in-process while testing
os.environ.setdefault("DLCHI_VERBOSE", "false")
os.environ.setdefault("DLCHI_THREADS", "1")

hypothesis_settings.register_profile(
    "dlchi",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
hypothesis_settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "dlchi"))


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="run the n = 4 point counts and full n <= 8 grids")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running point counts and exhaustive grids")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def fresh_settings():
    from core.settings import get_settings

    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
