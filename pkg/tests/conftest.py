import numpy as np
import pytest

from parroll.arma import example_filter
from parroll.ship import example_ship
from parroll.spectra import example_sea


@pytest.fixture(scope="session")
def sea():
    return example_sea()


@pytest.fixture(scope="session")
def filt():
    return example_filter()


@pytest.fixture(scope="session")
def ship():
    return example_ship()


@pytest.fixture()
def rng():
    return np.random.Generator(np.random.PCG64(987654321))
