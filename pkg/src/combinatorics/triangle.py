from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from errors import UsageError
from series.egf import EgfSeries, series_mul
from series.rational import RationalLike, to_rational


@dataclass(frozen=True)
class Triangle:
    """Lower-triangular table T(n, k), 0 <= k <= n <= max_n; zero elsewhere."""
    rows: tuple

    def __post_init__(self) -> None:
        rows = tuple(tuple(to_rational(v) for v in row) for row in self.rows)
        for n, row in enumerate(rows):
            if len(row) != n + 1:
                raise UsageError(f'row {n} of a triangle needs {n + 1} entries, got {len(row)}')
        object.__setattr__(self, 'rows', rows)

    @property
    def max_n(self) -> int:
        return len(self.rows) - 1

    def __getitem__(self, index: tuple) -> Fraction:
        n, k = index
        if n < 0 or k < 0 or k > n:
            return Fraction(0)
        if n > self.max_n:
            raise IndexError(f'row {n} is beyond max_n={self.max_n}')
        return self.rows[n][k]

    def entries(self) -> Iterator[tuple]:
        for n, row in enumerate(self.rows):
            for k, value in enumerate(row):
                yield n, k, value

    def diagonal(self) -> list[Fraction]:
        return [row[n] for n, row in enumerate(self.rows)]

    def with_entry(self, n: int, k: int, value: RationalLike) -> 'Triangle':
        rows = [list(row) for row in self.rows]
        rows[n][k] = to_rational(value)
        return Triangle(tuple(tuple(row) for row in rows))

    def matmul(self, other: 'Triangle') -> 'Triangle':
        """(A B)(n, l) = sum_{k=l..n} A(n,k) B(k,l)."""
        if self.max_n != other.max_n:
            raise UsageError(f'triangle sizes differ: {self.max_n} != {other.max_n}')
        return Triangle.from_function(
            self.max_n,
            lambda n, l: sum((self[n, k] * other[k, l] for k in range(l, n + 1)), Fraction(0)),
        )

    @classmethod
    def from_function(cls, max_n: int, fn: Callable[[int, int], RationalLike]) -> 'Triangle':
        return cls(tuple(tuple(fn(n, k) for k in range(n + 1)) for n in range(max_n + 1)))

    @classmethod
    def from_series_powers(cls, series: EgfSeries) -> 'Triangle':
        """T(n, k) = n! [t^n] series^k / k!; the series must have a zero constant term."""
        order = series.order
        columns = []
        power = EgfSeries.one(order)
        for k in range(order + 1):
            if k:
                power = series_mul(power, series).scale(Fraction(1, k))
            columns.append(power.coeffs)
        return cls(tuple(tuple(columns[k][n] for k in range(n + 1)) for n in range(order + 1)))

    @classmethod
    def identity(cls, max_n: int) -> 'Triangle':
        return cls.from_function(max_n, lambda n, k: 1 if n == k else 0)
