import pytest
from hypothesis import HealthCheck, settings

from fglog import builtin_algebra

settings.register_profile(
    "ci",
    max_examples=40,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


@pytest.fixture(scope="session")
def qt1():
    """Q[t], t primitive of degree 1, degree bound 8."""
    return builtin_algebra("qt1")


@pytest.fixture(scope="session")
def qt2():
    """Q[t], t primitive of degree 2, degree bound 8."""
    return builtin_algebra("qt2")


@pytest.fixture(scope="session")
def qtu():
    """Q[t, u], t degree 1 and u degree 3, both primitive, bound 8."""
    return builtin_algebra("qtu")


@pytest.fixture(scope="session")
def trivial():
    """Q itself: no generators."""
    return builtin_algebra("trivial")
