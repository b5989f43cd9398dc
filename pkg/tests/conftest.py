import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def disk_points(rng, m, rmax=0.9):
    return rmax * np.sqrt(rng.random(m)) * np.exp(2j * np.pi * rng.random(m))
