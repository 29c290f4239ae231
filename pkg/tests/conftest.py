import pytest

from curvecones import canring, curve as cv

PRIME = 1000003


@pytest.fixture(scope="session")
def ctx4():
    curve = cv.generate_curve(4, PRIME, 1)
    return canring.build_context(curve)


@pytest.fixture(scope="session")
def ctx5():
    curve = cv.generate_curve(5, PRIME, 7)
    return canring.build_context(curve)
