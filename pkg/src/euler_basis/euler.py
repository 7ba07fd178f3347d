"""Probabilistic (degenerate) Euler polynomials and expansion of polynomials in them.

E_n^Y(x) comes from 2 / (M(t) + 1) * M(t)^x with M the moment series;
M^x = exp(x log M) is expanded through powers of log M, so only series
products are needed.
"""
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Iterable, Optional, Sequence

from combinatorics.stirling import stirling2
from euler_basis.poly import Poly, forward_difference, poly_sum
from errors import UsageError
from prob_stirling.generating import moment_series
from prob_stirling.triangles import first_kind_triangle, second_kind_triangle
from reports import ReportBuilder, VerificationReport
from rv_models.models import RVSpec, format_rv, require_nonzero_mean
from series.egf import EgfSeries, series_log1p, series_mul, series_recip
from series.rational import RationalLike, to_rational
from log.logger import get_logger

logger = get_logger(__name__)


def _lam(lam: Optional[RationalLike]) -> Optional[Fraction]:
    return None if lam is None else to_rational(lam)


@lru_cache(maxsize=128)
def _euler_polynomials(rv: RVSpec, order: int, lam: Optional[Fraction]) -> tuple:
    moments = moment_series(rv, order, lam)
    weight = series_recip(moments.shift_constant(1)).scale(2)
    cgf = series_log1p(moments.shift_constant(-1))
    table = [[Fraction(0)] * (n + 1) for n in range(order + 1)]
    power = EgfSeries.one(order)  # cgf^k / k!
    for k in range(order + 1):
        if k:
            power = series_mul(power, cgf).scale(Fraction(1, k))
        column = series_mul(weight, power)
        for n in range(k, order + 1):
            table[n][k] = column.coeffs[n]
    logger.debug(f'Euler polynomials of {format_rv(rv)} up to degree {order}, lambda={lam}')
    return tuple(Poly(tuple(row)) for row in table)


def euler_polynomials(rv: RVSpec, order: int, lam: Optional[RationalLike] = None) -> list[Poly]:
    return list(_euler_polynomials(rv, order, _lam(lam)))


def euler_poly(rv: RVSpec, n: int, lam: Optional[RationalLike] = None) -> Poly:
    if n < 0:
        raise UsageError(f'degree must be non-negative, got {n}')
    return _euler_polynomials(rv, n, _lam(lam))[n]


def _difference_values(q: Poly, j: int) -> Fraction:
    difference = forward_difference(q, j)
    return (difference(1) + difference(0)) / factorial(j)


def _point_values(q: Poly, j: int) -> Fraction:
    total = sum(
        ((-1) ** (j - i) * comb(j, i) * (q(i + 1) + q(i)) for i in range(j + 1)),
        Fraction(0),
    )
    return total / factorial(j)


def _derivative_values(q: Poly, j: int) -> Fraction:
    return sum(
        (stirling2(l, j) * (q.derivative(l)(1) + q.derivative(l)(0)) / factorial(l) for l in range(j, q.degree + 1)),
        Fraction(0),
    )


METHODS: dict[str, Callable[[Poly, int], Fraction]] = {
    'difference': _difference_values,
    'points': _point_values,
    'derivatives': _derivative_values,
}


def expand_in_euler_basis(rv: RVSpec, q: Poly, lam: Optional[RationalLike] = None,
                          method: str = 'difference') -> list[Fraction]:
    """a_0..a_n with q = sum_r a_r E_r^Y, a_r = 1/2 sum_j S1^Y(j,r) v_j(q)."""
    try:
        values_of = METHODS[method]
    except KeyError:
        raise UsageError(f'unknown expansion method {method!r} (known: {", ".join(METHODS)})') from None
    require_nonzero_mean(rv, 'expansion in the Euler basis')
    n = q.degree
    first_kind = first_kind_triangle(rv, n, _lam(lam))
    values = [values_of(q, j) for j in range(n + 1)]
    return [
        sum((first_kind[j, r] * values[j] for j in range(r, n + 1)), Fraction(0)) / 2
        for r in range(n + 1)
    ]


def reconstruct(rv: RVSpec, coeffs: Sequence[RationalLike], lam: Optional[RationalLike] = None) -> Poly:
    """sum_r a_r E_r^Y(x)."""
    basis = euler_polynomials(rv, max(len(coeffs) - 1, 0), lam)
    return poly_sum(basis[r].scale(a) for r, a in enumerate(coeffs))


def verify_euler_addition(rv: RVSpec, n: int, lam: Optional[RationalLike] = None) -> VerificationReport:
    """E_n(x+1) + E_n(x) = 2 sum_k S2^Y(n,k) (x)_k, coefficient by coefficient."""
    lam = _lam(lam)
    builder = ReportBuilder(f'euler addition {format_rv(rv)} n={n}' + ('' if lam is None else f' lambda={lam}'))
    euler = euler_poly(rv, n, lam)
    lhs = euler.shift(1) + euler
    second_kind = second_kind_triangle(rv, n, lam)
    rhs = poly_sum(Poly.falling_factorial(k).scale(2 * second_kind[n, k]) for k in range(n + 1))
    for i in range(max(lhs.degree, rhs.degree) + 1):
        expected = rhs.coeffs[i] if i <= rhs.degree else Fraction(0)
        actual = lhs.coeffs[i] if i <= lhs.degree else Fraction(0)
        builder.check('E_n(x+1) + E_n(x) = 2 sum_k S2(n,k) (x)_k', expected, actual, n=n, power=i)
    return builder.build()


def verify_euler_roundtrip(rv: RVSpec, polys: Iterable[Poly], lam: Optional[RationalLike] = None) -> VerificationReport:
    """All expansion methods agree and re-multiplying gives q back."""
    lam = _lam(lam)
    builder = ReportBuilder(f'euler round trip {format_rv(rv)}' + ('' if lam is None else f' lambda={lam}'))
    for sample, q in enumerate(polys):
        expansions = {method: expand_in_euler_basis(rv, q, lam, method) for method in METHODS}
        reference = expansions['difference']
        for method in ('points', 'derivatives'):
            builder.check(f'{method} expansion = difference expansion', reference, expansions[method],
                          sample=sample, degree=q.degree)
        builder.check('reconstruction', list(q.coeffs), list(reconstruct(rv, reference, lam).coeffs),
                      sample=sample, degree=q.degree)
    return builder.build()
