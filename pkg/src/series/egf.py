"""Truncated power series in the exponential-generating-function convention.

`coeffs[n]` holds n! times the coefficient of t^n, so products are binomial
convolutions and k-th powers divided by k! read off Stirling-type numbers.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from errors import DeltaSeriesError, DomainError, NonUnitError, UsageError
from series.rational import RationalLike, to_rational
from log.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class EgfSeries:
    coeffs: tuple

    def __post_init__(self) -> None:
        coeffs = tuple(to_rational(c) for c in self.coeffs)
        if not coeffs:
            raise UsageError('a series needs at least the constant coefficient')
        object.__setattr__(self, 'coeffs', coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    # constructors
    @classmethod
    def zero(cls, order: int) -> 'EgfSeries':
        return cls((Fraction(0),) * (order + 1))

    @classmethod
    def constant(cls, c: RationalLike, order: int) -> 'EgfSeries':
        return cls((to_rational(c),) + (Fraction(0),) * order)

    @classmethod
    def one(cls, order: int) -> 'EgfSeries':
        return cls.constant(1, order)

    @classmethod
    def identity(cls, order: int) -> 'EgfSeries':
        """The series t."""
        coeffs = [Fraction(0)] * (order + 1)
        if order >= 1:
            coeffs[1] = Fraction(1)
        return cls(tuple(coeffs))

    @classmethod
    def exp_linear(cls, c: RationalLike, order: int) -> 'EgfSeries':
        """e^{ct}: coefficients c^n."""
        c = to_rational(c)
        return cls(tuple(c ** n for n in range(order + 1)))

    def truncate(self, order: int) -> 'EgfSeries':
        if order > self.order:
            raise UsageError(f'cannot extend a series of order {self.order} to {order}')
        return EgfSeries(self.coeffs[:order + 1])

    # linear structure
    def __add__(self, other: 'EgfSeries') -> 'EgfSeries':
        _check_orders(self, other)
        return EgfSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: 'EgfSeries') -> 'EgfSeries':
        _check_orders(self, other)
        return EgfSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> 'EgfSeries':
        return EgfSeries(tuple(-a for a in self.coeffs))

    def __mul__(self, other: 'EgfSeries') -> 'EgfSeries':
        return series_mul(self, other)

    def scale(self, c: RationalLike) -> 'EgfSeries':
        c = to_rational(c)
        return EgfSeries(tuple(c * a for a in self.coeffs))

    def shift_constant(self, c: RationalLike) -> 'EgfSeries':
        """self + c."""
        return EgfSeries((self.coeffs[0] + to_rational(c),) + self.coeffs[1:])

    def is_delta(self) -> bool:
        return self.order >= 1 and self.coeffs[0] == 0 and self.coeffs[1] != 0


def _check_orders(a: EgfSeries, b: EgfSeries) -> None:
    if a.order != b.order:
        raise UsageError(f'series orders differ: {a.order} != {b.order}')


def _require_zero_constant(a: EgfSeries, operation: str) -> None:
    if a.coeffs[0] != 0:
        raise DomainError(
            f'{operation} needs a zero constant term, got {a.coeffs[0]}; '
            f'the exact result would need a transcendental scalar'
        )


def _convolve(a: Sequence[Fraction], b: Sequence[Fraction], order: int) -> tuple:
    return tuple(
        sum((comb(n, i) * a[i] * b[n - i] for i in range(n + 1)), Fraction(0))
        for n in range(order + 1)
    )


def series_mul(a: EgfSeries, b: EgfSeries) -> EgfSeries:
    """EGF Cauchy product: c_n = sum_i C(n,i) a_i b_{n-i}."""
    _check_orders(a, b)
    return EgfSeries(_convolve(a.coeffs, b.coeffs, a.order))


def series_power(a: EgfSeries, k: int) -> EgfSeries:
    if k < 0:
        raise UsageError(f'integer power must be non-negative, got {k}')
    result = EgfSeries.one(a.order)
    base = a
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def series_recip(a: EgfSeries) -> EgfSeries:
    a0 = a.coeffs[0]
    if a0 == 0:
        raise NonUnitError('reciprocal of a series with zero constant term')
    b = [Fraction(0)] * (a.order + 1)
    b[0] = 1 / a0
    for n in range(1, a.order + 1):
        acc = sum((comb(n, i) * a.coeffs[i] * b[n - i] for i in range(1, n + 1)), Fraction(0))
        b[n] = -acc / a0
    return EgfSeries(tuple(b))


def series_exp(a: EgfSeries) -> EgfSeries:
    # g' = a' g, with EGF derivative being a left shift of coefficients
    _require_zero_constant(a, 'exp')
    g = [Fraction(0)] * (a.order + 1)
    g[0] = Fraction(1)
    for n in range(a.order):
        g[n + 1] = sum((comb(n, i) * a.coeffs[i + 1] * g[n - i] for i in range(n + 1)), Fraction(0))
    return EgfSeries(tuple(g))


def series_log1p(a: EgfSeries) -> EgfSeries:
    # (1 + a) h' = a'
    _require_zero_constant(a, 'log1p')
    h = [Fraction(0)] * (a.order + 1)
    for n in range(a.order):
        acc = sum((comb(n, i) * a.coeffs[i] * h[n + 1 - i] for i in range(1, n + 1)), Fraction(0))
        h[n + 1] = a.coeffs[n + 1] - acc
    return EgfSeries(tuple(h))


def generalized_binomial(e: RationalLike, j: int) -> Fraction:
    """(e)_j / j! for rational e."""
    e = to_rational(e)
    value = Fraction(1)
    for i in range(j):
        value *= (e - i)
    return value / factorial(j)


def series_pow_binomial(a: EgfSeries, e: RationalLike) -> EgfSeries:
    """(1 + a)^e = sum_j binom(e, j) a^j for a with zero constant term."""
    _require_zero_constant(a, 'binomial power')
    e = to_rational(e)
    result = [Fraction(0)] * (a.order + 1)
    power = EgfSeries.one(a.order)
    for j in range(a.order + 1):
        coefficient = generalized_binomial(e, j)
        if coefficient:
            # a^j vanishes below t^j
            for n in range(j, a.order + 1):
                result[n] += coefficient * power.coeffs[n]
        power = series_mul(power, a)
    return EgfSeries(tuple(result))


def series_compose(f: EgfSeries, g: EgfSeries) -> EgfSeries:
    """f(g(t)) = sum_k f_k g^k / k!; g must have a zero constant term."""
    _check_orders(f, g)
    if g.coeffs[0] != 0:
        raise DomainError(f'inner series of a composition needs a zero constant term, got {g.coeffs[0]}')
    order = f.order
    result = [Fraction(0)] * (order + 1)
    power = EgfSeries.one(order)  # g^k / k!
    for k in range(order + 1):
        if k:
            power = series_mul(power, g).scale(Fraction(1, k))
        if f.coeffs[k]:
            for n in range(k, order + 1):
                result[n] += f.coeffs[k] * power.coeffs[n]
    return EgfSeries(tuple(result))


def series_comp_inverse(f: EgfSeries) -> EgfSeries:
    """g with f(g(t)) = g(f(t)) = t, by forward substitution in the triangle of powers of f."""
    if not f.is_delta():
        raise DeltaSeriesError(
            'compositional inverse needs a delta series (zero constant term, nonzero linear term), '
            f'got coefficients {[str(c) for c in f.coeffs[:2]]}'
        )
    order = f.order
    # columns[k][n] = n! [t^n] f^k / k!; g is column 1 of the inverse of this triangle
    columns = []
    power = EgfSeries.one(order)
    for k in range(order + 1):
        if k:
            power = series_mul(power, f).scale(Fraction(1, k))
        columns.append(power.coeffs)
    g = [Fraction(0)] * (order + 1)
    for n in range(1, order + 1):
        rest = sum((columns[k][n] * g[k] for k in range(1, n)), Fraction(0))
        g[n] = (int(n == 1) - rest) / columns[n][n]
    logger.debug(f'compositional inverse solved to order {order}')
    return EgfSeries(tuple(g))


def series_div_t(a: EgfSeries) -> EgfSeries:
    """a(t) / t for a with zero constant term; the order drops by one."""
    _require_zero_constant(a, 'division by t')
    if a.order < 1:
        raise UsageError('division by t needs a series of order at least 1')
    return EgfSeries(tuple(a.coeffs[n + 1] / (n + 1) for n in range(a.order)))
