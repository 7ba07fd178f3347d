"""Catalog of random variables with exact rational parameters.

Every variable knows its mean and its moment generating series
E[e^{Yt}] truncated at a given order; the degenerate series E[e_lam^Y(t)]
is obtained uniformly by composing with log e_lam(t).
"""
from dataclasses import dataclass, fields
from fractions import Fraction
from math import comb, factorial
from typing import ClassVar, Union

from combinatorics.stirling import degen_exp_series, log_degen_exp_series
from errors import NotAvailableError, PreconditionError, UsageError
from series.egf import (
    EgfSeries,
    series_compose,
    series_div_t,
    series_exp,
    series_mul,
    series_pow_binomial,
    series_power,
    series_recip,
)
from series.rational import RationalLike, format_rational, to_rational
from log.logger import get_logger

logger = get_logger(__name__)


def _invalid(message: str) -> UsageError:
    logger.error(message)
    return UsageError(message)


@dataclass(frozen=True)
class RandomVariable:
    family: ClassVar[str] = ''

    def __post_init__(self) -> None:
        for f in fields(self):
            object.__setattr__(self, f.name, to_rational(getattr(self, f.name)))
        self.validate()

    def validate(self) -> None:
        pass

    def params(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def __str__(self) -> str:
        return format_rv(self)

    def mean(self) -> Fraction:
        raise NotImplementedError

    def mgf_series(self, order: int) -> EgfSeries:
        raise NotImplementedError

    def degen_mgf_closed_form(self, lam: Fraction, order: int) -> EgfSeries:
        raise NotImplementedError


@dataclass(frozen=True)
class Constant(RandomVariable):
    c: Fraction = Fraction(1)
    family: ClassVar[str] = 'constant'

    def mean(self) -> Fraction:
        return self.c

    def mgf_series(self, order: int) -> EgfSeries:
        return EgfSeries.exp_linear(self.c, order)

    def degen_mgf_closed_form(self, lam: Fraction, order: int) -> EgfSeries:
        return degen_exp_series(self.c, lam, order)


@dataclass(frozen=True)
class Bernoulli(RandomVariable):
    p: Fraction = Fraction(1, 2)
    family: ClassVar[str] = 'bernoulli'

    def validate(self) -> None:
        if not 0 < self.p <= 1:
            raise _invalid(f'bernoulli needs 0 < p <= 1, got p={self.p}')

    def mean(self) -> Fraction:
        return self.p

    def mgf_series(self, order: int) -> EgfSeries:
        return (EgfSeries.exp_linear(1, order).shift_constant(-1)).scale(self.p).shift_constant(1)

    def degen_mgf_closed_form(self, lam: Fraction, order: int) -> EgfSeries:
        return degen_exp_series(1, lam, order).shift_constant(-1).scale(self.p).shift_constant(1)


@dataclass(frozen=True)
class Binomial(RandomVariable):
    m: int = 1
    p: Fraction = Fraction(1, 2)
    family: ClassVar[str] = 'binomial'

    def __post_init__(self) -> None:
        m = to_rational(self.m)
        if m.denominator != 1 or m < 1:
            raise _invalid(f'binomial needs a positive integer m, got m={self.m}')
        object.__setattr__(self, 'm', int(m))
        object.__setattr__(self, 'p', to_rational(self.p))
        self.validate()

    def validate(self) -> None:
        if not 0 < self.p <= 1:
            raise _invalid(f'binomial needs 0 < p <= 1, got p={self.p}')

    def mean(self) -> Fraction:
        return self.m * self.p

    def mgf_series(self, order: int) -> EgfSeries:
        return series_power(Bernoulli(self.p).mgf_series(order), self.m)

    def degen_mgf_closed_form(self, lam: Fraction, order: int) -> EgfSeries:
        return series_power(Bernoulli(self.p).degen_mgf_closed_form(lam, order), self.m)


@dataclass(frozen=True)
class Poisson(RandomVariable):
    alpha: Fraction = Fraction(1)
    family: ClassVar[str] = 'poisson'

    def validate(self) -> None:
        if self.alpha <= 0:
            raise _invalid(f'poisson needs alpha > 0, got alpha={self.alpha}')

    def mean(self) -> Fraction:
        return self.alpha

    def mgf_series(self, order: int) -> EgfSeries:
        return series_exp(EgfSeries.exp_linear(1, order).shift_constant(-1).scale(self.alpha))

    def degen_mgf_closed_form(self, lam: Fraction, order: int) -> EgfSeries:
        return series_exp(degen_exp_series(1, lam, order).shift_constant(-1).scale(self.alpha))


@dataclass(frozen=True)
class Geometric(RandomVariable):
    """Number of trials up to and including the first success."""
    p: Fraction = Fraction(1, 2)
    family: ClassVar[str] = 'geometric'

    def validate(self) -> None:
        if not 0 < self.p < 1:
            raise _invalid(f'geometric needs 0 < p < 1, got p={self.p}')

    def mean(self) -> Fraction:
        return 1 / self.p

    def _from_exp(self, exp_series: EgfSeries) -> EgfSeries:
        denominator = exp_series.scale(self.p - 1).shift_constant(1)
        return series_mul(exp_series.scale(self.p), series_recip(denominator))

    def mgf_series(self, order: int) -> EgfSeries:
        return self._from_exp(EgfSeries.exp_linear(1, order))

    def degen_mgf_closed_form(self, lam: Fraction, order: int) -> EgfSeries:
        return self._from_exp(degen_exp_series(1, lam, order))


@dataclass(frozen=True)
class Exponential(RandomVariable):
    """Rate alpha, mean 1/alpha."""
    alpha: Fraction = Fraction(1)
    family: ClassVar[str] = 'exponential'

    def validate(self) -> None:
        if self.alpha <= 0:
            raise _invalid(f'exponential needs alpha > 0, got alpha={self.alpha}')

    def mean(self) -> Fraction:
        return 1 / self.alpha

    def mgf_series(self, order: int) -> EgfSeries:
        return EgfSeries(tuple(Fraction(factorial(n)) / self.alpha ** n for n in range(order + 1)))

    def degen_mgf_closed_form(self, lam: Fraction, order: int) -> EgfSeries:
        log_exp = log_degen_exp_series(lam, order)
        return series_recip(log_exp.scale(-1 / self.alpha).shift_constant(1))


@dataclass(frozen=True)
class Gamma(RandomVariable):
    """Shape alpha, rate beta."""
    alpha: Fraction = Fraction(1)
    beta: Fraction = Fraction(1)
    family: ClassVar[str] = 'gamma'

    def validate(self) -> None:
        if self.alpha <= 0 or self.beta <= 0:
            raise _invalid(f'gamma needs alpha, beta > 0, got alpha={self.alpha}, beta={self.beta}')

    def mean(self) -> Fraction:
        return self.alpha / self.beta

    def mgf_series(self, order: int) -> EgfSeries:
        # (beta / (beta - t))^alpha = (1 - t/beta)^(-alpha)
        return series_pow_binomial(EgfSeries.identity(order).scale(-1 / self.beta), -self.alpha)

    def degen_mgf_closed_form(self, lam: Fraction, order: int) -> EgfSeries:
        return series_pow_binomial(log_degen_exp_series(lam, order).scale(-1 / self.beta), -self.alpha)


@dataclass(frozen=True)
class Normal(RandomVariable):
    mu: Fraction = Fraction(0)
    sigma2: Fraction = Fraction(1)
    family: ClassVar[str] = 'normal'

    def validate(self) -> None:
        if self.sigma2 <= 0:
            raise _invalid(f'normal needs sigma2 > 0, got sigma2={self.sigma2}')

    def mean(self) -> Fraction:
        return self.mu

    def _exponent(self, inner: EgfSeries) -> EgfSeries:
        return inner.scale(self.mu) + series_mul(inner, inner).scale(self.sigma2 / 2)

    def mgf_series(self, order: int) -> EgfSeries:
        return series_exp(self._exponent(EgfSeries.identity(order)))

    def degen_mgf_closed_form(self, lam: Fraction, order: int) -> EgfSeries:
        return series_exp(self._exponent(log_degen_exp_series(lam, order)))


@dataclass(frozen=True)
class Uniform(RandomVariable):
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(1)
    family: ClassVar[str] = 'uniform'

    def validate(self) -> None:
        if not self.a < self.b:
            raise _invalid(f'uniform needs a < b, got a={self.a}, b={self.b}')

    def mean(self) -> Fraction:
        return (self.a + self.b) / 2

    def mgf_series(self, order: int) -> EgfSeries:
        # the removable singularity at t = 0 cancels exactly after dividing by t
        numerator = EgfSeries.exp_linear(self.b, order + 1) - EgfSeries.exp_linear(self.a, order + 1)
        return series_div_t(numerator).scale(1 / (self.b - self.a))

    def degen_mgf_closed_form(self, lam: Fraction, order: int) -> EgfSeries:
        numerator = degen_exp_series(self.b, lam, order + 1) - degen_exp_series(self.a, lam, order + 1)
        denominator = series_div_t(log_degen_exp_series(lam, order + 1)).scale(self.b - self.a)
        return series_mul(series_div_t(numerator), series_recip(denominator))


RVSpec = Union[Constant, Bernoulli, Binomial, Poisson, Geometric, Exponential, Gamma, Normal, Uniform]

FAMILIES = {
    cls.family: cls
    for cls in (Constant, Bernoulli, Binomial, Poisson, Geometric, Exponential, Gamma, Normal, Uniform)
}


def mean(rv: RVSpec) -> Fraction:
    return rv.mean()


def mgf_series(rv: RVSpec, order: int) -> EgfSeries:
    """E[e^{Yt}] to the given order; coeffs[n] = E[Y^n]."""
    return rv.mgf_series(order)


def degen_mgf_series(rv: RVSpec, lam: RationalLike, order: int) -> EgfSeries:
    """E[e_lam^Y(t)] = M_Y(log e_lam(t)); coeffs[n] = E[(Y)_{n,lam}]."""
    return series_compose(rv.mgf_series(order), log_degen_exp_series(lam, order))


def degen_mgf_closed_form(rv: RVSpec, lam: RationalLike, order: int) -> EgfSeries:
    """The family's own formula for E[e_lam^Y(t)], independent of the composition path."""
    return rv.degen_mgf_closed_form(to_rational(lam), order)


def moment(rv: RVSpec, n: int) -> Fraction:
    if n < 0:
        raise UsageError(f'moment order must be non-negative, got {n}')
    return rv.mgf_series(n)[n]


def variance(rv: RVSpec) -> Fraction:
    return moment(rv, 2) - rv.mean() ** 2


def pmf_moment(rv: RVSpec, n: int) -> Fraction:
    """sum_y y^n P(Y = y) for the finitely supported families."""
    if isinstance(rv, Constant):
        return rv.c ** n
    if isinstance(rv, Bernoulli):
        return pmf_moment(Binomial(1, rv.p), n)
    if isinstance(rv, Binomial):
        return sum(
            (Fraction(y) ** n * comb(rv.m, y) * rv.p ** y * (1 - rv.p) ** (rv.m - y) for y in range(rv.m + 1)),
            Fraction(0),
        )
    raise NotAvailableError(f'no finite probability mass sum for {rv.family}')


def require_nonzero_mean(rv: RVSpec, what: str = 'first-kind numbers') -> None:
    if rv.mean() == 0:
        raise PreconditionError(
            f'{what} need E[Y] != 0 (e_Y must be a delta series), got E[Y] = 0 for {format_rv(rv)}'
        )


def format_rv(rv: RVSpec) -> str:
    params = ','.join(f'{name}={format_rational(value)}' for name, value in rv.params().items())
    return f'{rv.family}:{params}'


def parse_rv(text: str) -> RVSpec:
    """Parse the canonical form, e.g. 'geometric:p=1/3' or 'normal:mu=1,sigma2=2'."""
    family, _, params_text = text.strip().partition(':')
    try:
        cls = FAMILIES[family.strip().lower()]
    except KeyError:
        raise _invalid(f'Unknown random variable family: {family!r} (known: {", ".join(FAMILIES)})') from None
    names = [f.name for f in fields(cls)]
    params = {}
    for item in filter(None, (part.strip() for part in params_text.split(','))):
        name, sep, value = item.partition('=')
        name = name.strip()
        if not sep or name not in names:
            raise _invalid(f'bad parameter {item!r} for {cls.family}; expected {", ".join(names)}')
        if name in params:
            raise _invalid(f'parameter {name!r} given twice for {cls.family}')
        params[name] = to_rational(value)
    missing = [name for name in names if name not in params]
    if missing:
        raise _invalid(f'{cls.family} is missing parameter(s): {", ".join(missing)}')
    return cls(**params)
