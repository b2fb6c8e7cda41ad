import pytest
from hypothesis import settings

from grasscluster.space.confspace import random_configuration

# Exact arithmetic on larger Grassmannians is slow; no per-example deadline
settings.register_profile("grasscluster", deadline=None, max_examples=40)
settings.load_profile("grasscluster")

# (a, n) pairs the identity suite runs on
SMALL_GRASSMANNIANS = [(2, 4), (2, 5), (3, 6), (3, 7), (4, 8)]


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive or many-sample checks; deselect with -m 'not slow'")


@pytest.fixture(params=SMALL_GRASSMANNIANS, ids=lambda p: f"Gr({p[0]},{p[1]})")
def grassmannian(request):
    return request.param


@pytest.fixture
def configuration(grassmannian):
    a, n = grassmannian
    return random_configuration(a, n, seed=7)


@pytest.fixture
def positive_configuration():
    return random_configuration(3, 7, seed=11, positive=True)
