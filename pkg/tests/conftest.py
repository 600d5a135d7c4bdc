import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from zgroupoid.space import make_circle_space

settings.register_profile("default", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def s2():
    return make_circle_space(2)


@pytest.fixture
def s3():
    return make_circle_space(3)


@pytest.fixture
def s4():
    return make_circle_space(4)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
