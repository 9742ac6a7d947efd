import numpy as np
import pytest

from grid.domain import GridDomain
from tests.helpers import H_FINE


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


@pytest.fixture(scope="session")
def fine_disk():
    return GridDomain.disk(1.0, H_FINE)


@pytest.fixture(scope="session")
def fine_annulus():
    return GridDomain.annulus(0.5, 1.5, H_FINE)


@pytest.fixture(scope="session")
def coarse_square():
    return GridDomain.square(2.0, 1 / 16)
