import sys
from fractions import Fraction
from pathlib import Path

import pytest

# src/ on the path, the same way the service scripts import their modules
src_path = Path(__file__).parent.parent / 'src'
if str(src_path) not in sys.path:
    sys.path.insert(0, str(src_path))

from rv_models import (  # noqa: E402
    Bernoulli,
    Binomial,
    Constant,
    Exponential,
    Gamma,
    Geometric,
    Normal,
    Poisson,
    Uniform,
)

GRID = (
    Constant(1),
    Bernoulli(Fraction(1, 2)),
    Binomial(3, Fraction(1, 3)),
    Poisson(1),
    Geometric(Fraction(1, 3)),
    Exponential(2),
    Gamma(2, 3),
    Normal(1, 2),
    Uniform(0, 1),
)
LAMBDAS = (Fraction(0), Fraction(1, 2))


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: full-grid runs of the command line')


@pytest.fixture(params=GRID, ids=lambda rv: str(rv))
def grid_rv(request):
    return request.param


@pytest.fixture(params=LAMBDAS, ids=lambda lam: f'lambda={lam}')
def grid_lambda(request):
    return request.param
