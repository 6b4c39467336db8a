import numpy as np
import pytest
from hypothesis import settings

from peerreview import DynamicPolicy, Population

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

_ACCEPTANCE_LINES = []


@pytest.fixture
def pop_a():
    """alpha=0.5, theta=(8, 4); with z_bar=1, sigma=1 this is the running example."""
    return Population(0.5, 8.0, 4.0)


@pytest.fixture
def pop_c():
    return Population(0.5, 4.0, 2.0)


@pytest.fixture
def policy_b():
    return DynamicPolicy(1.0, 0.3)


@pytest.fixture
def rng():
    return np.random.default_rng(20240705)


@pytest.fixture
def report():
    """Record one pass/fail line per acceptance criterion."""
    def _report(tag, passed, detail):
        line = f"[{'PASS' if passed else 'FAIL'}] {tag}: {detail}"
        _ACCEPTANCE_LINES.append(line)
        print(line)
        return passed
    return _report


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
