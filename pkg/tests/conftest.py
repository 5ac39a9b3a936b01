import numpy as np
import pytest

from rvnorm.distributions import (Bernoulli, Exponential, Gamma, Laplace, Normal, Pareto,
                                  Poisson, Rademacher, Uniform)
from rvnorm.suites import random_complex, random_hermitian, random_unitary  # noqa: F401

# laws with every integer moment needed up to degree 8 (Pareto needs alpha > 8)
EVEN_FAMILIES = [
    Exponential(),
    Gamma(2.5, 0.7),
    Normal(0.5, 1.3),
    Poisson(1.7),
    Bernoulli(0.3),
    Rademacher(),
    Uniform(-0.5, 2.0),
    Laplace(0.4, 0.8),
    Pareto(30.0, 1.0),
]


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def rel_close(a, b, tol):
    return abs(a - b) <= tol * max(1.0, abs(b))


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
