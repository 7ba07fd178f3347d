"""Probabilistic Stirling triangles read off powers of one generating series."""
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from combinatorics.triangle import Triangle
from errors import UsageError
from prob_stirling.generating import cgf_series, e_bar_series, e_series
from rv_models.models import RVSpec, format_rv
from series.rational import RationalLike, to_rational
from log.logger import get_logger

logger = get_logger(__name__)


def _lam(lam: Optional[RationalLike]) -> Optional[Fraction]:
    return None if lam is None else to_rational(lam)


@lru_cache(maxsize=256)
def _second_kind(rv: RVSpec, order: int, lam: Optional[Fraction]) -> Triangle:
    logger.debug(f'building second-kind triangle for {format_rv(rv)}, lambda={lam}, order={order}')
    return Triangle.from_series_powers(e_series(rv, order, lam))


@lru_cache(maxsize=256)
def _first_kind(rv: RVSpec, order: int, lam: Optional[Fraction]) -> Triangle:
    logger.debug(f'building first-kind triangle for {format_rv(rv)}, lambda={lam}, order={order}')
    return Triangle.from_series_powers(e_bar_series(rv, order, lam))


def s2y_triangle(rv: RVSpec, order: int) -> Triangle:
    return _second_kind(rv, order, None)


def s1y_triangle(rv: RVSpec, order: int) -> Triangle:
    """Needs E[Y] != 0."""
    return _first_kind(rv, order, None)


def s2y_degen_triangle(rv: RVSpec, lam: RationalLike, order: int) -> Triangle:
    return _second_kind(rv, order, to_rational(lam))


def s1y_degen_triangle(rv: RVSpec, lam: RationalLike, order: int) -> Triangle:
    return _first_kind(rv, order, to_rational(lam))


def second_kind_triangle(rv: RVSpec, order: int, lam: Optional[RationalLike] = None) -> Triangle:
    return _second_kind(rv, order, _lam(lam))


def first_kind_triangle(rv: RVSpec, order: int, lam: Optional[RationalLike] = None) -> Triangle:
    return _first_kind(rv, order, _lam(lam))


def adell_benyi_triangle(rv: RVSpec, order: int) -> Triangle:
    """s_Y(n, k) = (-1)^{n-k} n! [t^n] (log E[e^{Yt}])^k / k!."""
    powers = Triangle.from_series_powers(cgf_series(rv, order))
    return Triangle.from_function(order, lambda n, k: (-1) ** (n - k) * powers[n, k])


def adell_benyi_s(rv: RVSpec, n: int, k: int) -> Fraction:
    if k > n:
        return Fraction(0)
    return adell_benyi_triangle(rv, n)[n, k]


def transform_lower(triangle: Triangle, values: Sequence[RationalLike]) -> list[Fraction]:
    """a_n = sum_{k<=n} T(n, k) b_k."""
    b = _vector(triangle, values)
    return [sum((triangle[n, k] * b[k] for k in range(n + 1)), Fraction(0)) for n in range(len(b))]


def transform_upper(triangle: Triangle, values: Sequence[RationalLike]) -> list[Fraction]:
    """a_n = sum_{k>=n} T(k, n) b_k, up to the triangle size."""
    b = _vector(triangle, values)
    top = len(b) - 1
    return [sum((triangle[k, n] * b[k] for k in range(n, top + 1)), Fraction(0)) for n in range(top + 1)]


def _vector(triangle: Triangle, values: Sequence[RationalLike]) -> list[Fraction]:
    if len(values) != triangle.max_n + 1:
        raise UsageError(f'vector of length {len(values)} does not match a triangle of size {triangle.max_n + 1}')
    return [to_rational(v) for v in values]
