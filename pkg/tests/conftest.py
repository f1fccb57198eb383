"""Pytest configuration and fixtures."""

import os
import sys

import pytest

# Add the parent directory to the path so tests can import weierstrass modules
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from weierstrass.curve import WeierstrassCurve  # noqa: E402
from weierstrass.fields import extension_field, prime_field, rational_field  # noqa: E402


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="run the largest exhaustive scans")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive scan, run with --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def restore_environment():
    """WeierstrassConfig writes .env values into os.environ; undo that after each test."""
    saved = {k: v for k, v in os.environ.items() if k.startswith("WEIERSTRASS_")}
    yield
    for key in [k for k in os.environ if k.startswith("WEIERSTRASS_")]:
        del os.environ[key]
    os.environ.update(saved)


@pytest.fixture
def gf2():
    return prime_field(2)


@pytest.fixture
def gf5():
    return prime_field(5)


@pytest.fixture
def gf4():
    return extension_field(2, 2, (1, 1, 1))


@pytest.fixture
def qq():
    return rational_field()


@pytest.fixture
def curve_gf5(gf5):
    """Y^2 = X^3 + X + 1 over GF(5): nine points, cyclic."""
    return WeierstrassCurve.of(gf5, [0, 0, 0, 1, 1])


@pytest.fixture
def curve_gf2(gf2):
    """Y^2 + Y = X^3 over GF(2): three points."""
    return WeierstrassCurve.of(gf2, [0, 0, 1, 0, 0])


@pytest.fixture
def curve_qq(qq):
    """Y^2 + Y = X^3 - X over the rationals, discriminant 37."""
    return WeierstrassCurve.of(qq, [0, 0, 1, -1, 0])
