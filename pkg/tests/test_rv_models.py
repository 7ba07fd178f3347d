from fractions import Fraction
from math import factorial

import pytest
from sympy import bell

from combinatorics import degen_falling_factorial
from errors import NotAvailableError, PreconditionError, UsageError
from rv_models import (
    Bernoulli,
    Binomial,
    Constant,
    Exponential,
    Gamma,
    Geometric,
    Normal,
    Poisson,
    Uniform,
    degen_mgf_closed_form,
    degen_mgf_series,
    format_rv,
    mean,
    mgf_series,
    moment,
    parse_rv,
    pmf_moment,
    require_nonzero_mean,
    variance,
)


@pytest.mark.parametrize('text', [
    'constant:c=1',
    'bernoulli:p=1/2',
    'binomial:m=3,p=1/3',
    'poisson:alpha=1',
    'geometric:p=1/3',
    'exponential:alpha=2',
    'gamma:alpha=2,beta=3',
    'normal:mu=1,sigma2=2',
    'uniform:a=0,b=1',
])
def test_parse_format_round_trip(text):
    assert format_rv(parse_rv(text)) == text


def test_parse_normalizes():
    assert parse_rv(' Geometric : p = 2/6 ') == Geometric(Fraction(1, 3))
    assert parse_rv('bernoulli:p=0.5') == Bernoulli(Fraction(1, 2))


@pytest.mark.parametrize('text', [
    'lognormal:mu=1',
    'geometric:p=2',
    'geometric:q=1/2',
    'normal:mu=1',
    'normal:mu=1,mu=2,sigma2=1',
    'binomial:m=3/2,p=1/2',
    'uniform:a=1,b=1',
    'exponential:alpha=-1',
    'poisson:alpha=one',
])
def test_parse_rejects(text):
    with pytest.raises(UsageError):
        parse_rv(text)


def test_means():
    assert mean(Constant(3)) == 3
    assert mean(Binomial(3, Fraction(1, 3))) == 1
    assert mean(Geometric(Fraction(1, 3))) == 3
    assert mean(Exponential(2)) == Fraction(1, 2)
    assert mean(Gamma(2, 3)) == Fraction(2, 3)
    assert mean(Uniform(0, 1)) == Fraction(1, 2)


def test_moments_by_family():
    assert [moment(Bernoulli(Fraction(1, 3)), n) for n in range(4)] == [1, Fraction(1, 3), Fraction(1, 3), Fraction(1, 3)]
    assert mgf_series(Poisson(1), 6).coeffs == tuple(int(bell(n)) for n in range(7))
    assert mgf_series(Exponential(2), 4).coeffs == tuple(Fraction(factorial(n), 2 ** n) for n in range(5))
    assert mgf_series(Normal(0, 1), 6).coeffs == (1, 0, 1, 0, 3, 0, 15)
    assert mgf_series(Uniform(0, 1), 5).coeffs == tuple(Fraction(1, n + 1) for n in range(6))
    assert moment(Gamma(2, 3), 2) == Fraction(2, 3)
    assert moment(Geometric(Fraction(1, 2)), 2) == 6


def test_variance():
    assert variance(Bernoulli(Fraction(1, 4))) == Fraction(3, 16)
    assert variance(Normal(1, 2)) == 2
    assert variance(Poisson(Fraction(5, 2))) == Fraction(5, 2)
    assert variance(Uniform(0, 1)) == Fraction(1, 12)


def test_degenerate_moments_of_constant():
    lam = Fraction(1, 2)
    series = degen_mgf_series(Constant(3), lam, 5)
    assert series.coeffs == tuple(degen_falling_factorial(3, n, lam) for n in range(6))


def test_degenerate_series_reduces_at_zero(grid_rv):
    assert degen_mgf_series(grid_rv, 0, 6) == mgf_series(grid_rv, 6)


def test_degenerate_closed_form_matches_composition(grid_rv, grid_lambda):
    assert degen_mgf_closed_form(grid_rv, grid_lambda, 6) == degen_mgf_series(grid_rv, grid_lambda, 6)


def test_pmf_moment():
    rv = Binomial(3, Fraction(1, 3))
    for n in range(7):
        assert pmf_moment(rv, n) == moment(rv, n)
    assert pmf_moment(Bernoulli(Fraction(2, 3)), 4) == Fraction(2, 3)
    with pytest.raises(NotAvailableError):
        pmf_moment(Poisson(1), 2)


def test_require_nonzero_mean():
    require_nonzero_mean(Uniform(0, 1))
    with pytest.raises(PreconditionError):
        require_nonzero_mean(Uniform(-1, 1))
    with pytest.raises(PreconditionError):
        require_nonzero_mean(Normal(0, 1))
