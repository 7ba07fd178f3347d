"""Moment-side computations: sums of i.i.d. copies and cumulants."""
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Optional

from combinatorics.stirling import stirling1
from errors import UsageError
from prob_stirling.triangles import second_kind_triangle
from rv_models.models import RVSpec, mgf_series
from series.rational import RationalLike, to_rational


@dataclass(frozen=True)
class PartialSumMoments:
    """table[j][n] = E[S_j^n] where S_j = Y_1 + ... + Y_j."""
    table: tuple

    @property
    def max_j(self) -> int:
        return len(self.table) - 1

    @property
    def max_n(self) -> int:
        return len(self.table[0]) - 1

    def __getitem__(self, index: tuple) -> Fraction:
        j, n = index
        return self.table[j][n]


@dataclass(frozen=True)
class CumulantSequence:
    """kappa_1 .. kappa_N, indexed from 1."""
    values: tuple

    @property
    def order(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> Fraction:
        if not 1 <= n <= len(self.values):
            raise IndexError(f'cumulant index {n} outside 1..{len(self.values)}')
        return self.values[n - 1]


def partial_sum_moments(rv: RVSpec, max_j: int, max_n: int) -> PartialSumMoments:
    if max_j < 0 or max_n < 0:
        raise UsageError(f'partial sum table needs non-negative bounds, got J={max_j}, N={max_n}')
    moments = mgf_series(rv, max_n).coeffs
    rows = [tuple(Fraction(1 if n == 0 else 0) for n in range(max_n + 1))]
    for _ in range(max_j):
        previous = rows[-1]
        # independence: E[(S + Y)^n] = sum_i C(n,i) E[S^i] E[Y^{n-i}]
        rows.append(tuple(
            sum((comb(n, i) * previous[i] * moments[n - i] for i in range(n + 1)), Fraction(0))
            for n in range(max_n + 1)
        ))
    return PartialSumMoments(tuple(rows))


def s2y_via_moments(rv: RVSpec, n: int, k: int) -> Fraction:
    table = partial_sum_moments(rv, k, n)
    total = sum((comb(k, j) * (-1) ** (k - j) * table[j, n] for j in range(k + 1)), Fraction(0))
    return total / factorial(k)


def s2y_degen_via_moments(rv: RVSpec, lam: RationalLike, n: int, k: int) -> Fraction:
    lam = to_rational(lam)
    table = partial_sum_moments(rv, k, n)

    def degenerate_moment(j: int) -> Fraction:
        # E[(S_j)_{n,lam}] = sum_i S1(n,i) lam^{n-i} E[S_j^i]
        return sum((stirling1(n, i) * lam ** (n - i) * table[j, i] for i in range(n + 1)), Fraction(0))

    total = sum((comb(k, j) * (-1) ** (k - j) * degenerate_moment(j) for j in range(k + 1)), Fraction(0))
    return total / factorial(k)


def cumulants(rv: RVSpec, order: int, lam: Optional[RationalLike] = None) -> CumulantSequence:
    """kappa_n = sum_j (-1)^{j-1} (j-1)! S2^Y(n, j); degenerate cumulants when lam is given."""
    if order < 1:
        raise UsageError(f'cumulants need order >= 1, got {order}')
    triangle = second_kind_triangle(rv, order, lam)
    return CumulantSequence(tuple(
        sum(((-1) ** (j - 1) * factorial(j - 1) * triangle[n, j] for j in range(1, n + 1)), Fraction(0))
        for n in range(1, order + 1)
    ))
