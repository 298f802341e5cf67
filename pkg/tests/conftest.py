import numpy as np
import pytest

from strategies import random_angles


@pytest.fixture
def rng():
    return np.random.default_rng(20260415)


@pytest.fixture
def angle_samples(rng):
    return [random_angles(rng) for _ in range(100)]
