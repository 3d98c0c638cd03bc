import random

import pytest

from sl2star.ncalg import x_algebra


@pytest.fixture(scope="session")
def xsys():
    """Shared default one-parameter algebra (order 8, A = 4)."""
    return x_algebra(8)


@pytest.fixture
def rng():
    return random.Random(20240811)
