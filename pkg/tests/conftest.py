import numpy as np
import pytest

from minkrot import NormSpace


@pytest.fixture(params=[2, 3], ids=["m2", "m3"])
def space(request):
    return NormSpace(request.param)


@pytest.fixture
def s2():
    return NormSpace(2)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
