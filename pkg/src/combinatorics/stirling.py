"""Classical and degenerate Stirling numbers and falling factorials.

lambda = 0 is accepted everywhere and gives the non-degenerate limit.
"""
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from combinatorics.triangle import Triangle
from errors import UsageError
from series.egf import EgfSeries, series_log1p, series_pow_binomial
from series.rational import RationalLike, to_rational


def _check_index(*values: int) -> None:
    for value in values:
        if value < 0:
            raise UsageError(f'indices must be non-negative, got {value}')


def falling_factorial(x: RationalLike, n: int) -> Fraction:
    """(x)_n = x(x-1)...(x-n+1); (x)_0 = 1."""
    return degen_falling_factorial(x, n, 1)


def degen_falling_factorial(x: RationalLike, n: int, lam: RationalLike) -> Fraction:
    """(x)_{n,lam} = x(x-lam)...(x-(n-1)lam)."""
    _check_index(n)
    x, lam = to_rational(x), to_rational(lam)
    value = Fraction(1)
    for i in range(n):
        value *= x - i * lam
    return value


@lru_cache(maxsize=None)
def falling_factorial_coefficients(n: int) -> tuple:
    """Power-basis coefficients of (x)_n, lowest degree first."""
    _check_index(n)
    coeffs = [1]
    for i in range(n):
        # multiply by (x - i)
        shifted = [0] + coeffs
        for j, c in enumerate(coeffs):
            shifted[j] -= i * c
        coeffs = shifted
    return tuple(coeffs)


@lru_cache(maxsize=None)
def stirling1(n: int, k: int) -> Fraction:
    """Signed Stirling number of the first kind: (x)_n = sum_k S1(n,k) x^k."""
    _check_index(n, k)
    if k > n:
        return Fraction(0)
    return Fraction(falling_factorial_coefficients(n)[k])


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> Fraction:
    """Stirling number of the second kind by the alternating power sum."""
    _check_index(n, k)
    if k > n:
        return Fraction(0)
    total = sum(comb(k, j) * (-1) ** (k - j) * j ** n for j in range(k + 1))
    return Fraction(total, factorial(k))


def degen_stirling2(n: int, k: int, lam: RationalLike) -> Fraction:
    _check_index(n, k)
    if k > n:
        return Fraction(0)
    total = sum(
        (comb(k, j) * (-1) ** (k - j) * degen_falling_factorial(j, n, lam) for j in range(k + 1)),
        Fraction(0),
    )
    return total / factorial(k)


def degen_stirling1(n: int, k: int, lam: RationalLike) -> Fraction:
    """n! [t^n] (log_lam(1+t))^k / k!."""
    _check_index(n, k)
    if k > n:
        return Fraction(0)
    return degen_stirling1_triangle(to_rational(lam), n)[n, k]


def degen_exp_series(x: RationalLike, lam: RationalLike, order: int) -> EgfSeries:
    """e_lam^x(t) = (1 + lam t)^{x/lam}; coefficients (x)_{n,lam}."""
    return EgfSeries(tuple(degen_falling_factorial(x, n, lam) for n in range(order + 1)))


def degen_log_series(lam: RationalLike, order: int) -> EgfSeries:
    """log_lam(1+t) = ((1+t)^lam - 1) / lam; log(1+t) at lam = 0."""
    lam = to_rational(lam)
    t = EgfSeries.identity(order)
    if lam == 0:
        return series_log1p(t)
    return series_pow_binomial(t, lam).shift_constant(-1).scale(1 / lam)


def log_degen_exp_series(lam: RationalLike, order: int) -> EgfSeries:
    """log e_lam(t) = (1/lam) log(1 + lam t); t at lam = 0."""
    lam = to_rational(lam)
    coeffs = [Fraction(0)] * (order + 1)
    for n in range(1, order + 1):
        coeffs[n] = (-1) ** (n - 1) * factorial(n - 1) * lam ** (n - 1)
    return EgfSeries(tuple(coeffs))


@lru_cache(maxsize=None)
def stirling1_triangle(order: int) -> Triangle:
    return Triangle.from_function(order, stirling1)


@lru_cache(maxsize=None)
def stirling2_triangle(order: int) -> Triangle:
    return Triangle.from_function(order, stirling2)


@lru_cache(maxsize=256)
def degen_stirling1_triangle(lam: Fraction, order: int) -> Triangle:
    return Triangle.from_series_powers(degen_log_series(lam, order))


@lru_cache(maxsize=256)
def degen_stirling2_triangle(lam: Fraction, order: int) -> Triangle:
    return Triangle.from_series_powers(degen_exp_series(1, lam, order).shift_constant(-1))
