"""Frobenius-Euler numbers H_n^{(r)}(u) and their degenerate version h_{n,lam}^{(r)}(u)."""
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from combinatorics.stirling import degen_exp_series
from errors import DomainError
from series.egf import EgfSeries, series_power, series_recip
from series.rational import RationalLike, to_rational


@lru_cache(maxsize=512)
def _frobenius_euler_series(r: int, u: Fraction, order: int, lam: Fraction) -> EgfSeries:
    if u == 1:
        raise DomainError('Frobenius-Euler numbers need u != 1')
    exp_series = degen_exp_series(1, lam, order)
    base = series_recip(exp_series.shift_constant(-u)).scale(1 - u)
    return series_power(base, r)


def frobenius_euler_series(r: int, u: RationalLike, order: int, lam: Optional[RationalLike] = None) -> EgfSeries:
    """EGF of ((1-u) / (e_lam(t) - u))^r; e^t when lam is None or 0."""
    lam = Fraction(0) if lam is None else to_rational(lam)
    return _frobenius_euler_series(r, to_rational(u), order, lam)


def frobenius_euler(n: int, r: int, u: RationalLike) -> Fraction:
    return frobenius_euler_series(r, u, n)[n]


def degen_frobenius_euler(n: int, r: int, u: RationalLike, lam: RationalLike) -> Fraction:
    return frobenius_euler_series(r, u, n, lam)[n]
