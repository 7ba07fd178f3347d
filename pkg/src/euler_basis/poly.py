"""Dense polynomials in x with exact rational coefficients (power basis)."""
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable

from combinatorics.stirling import falling_factorial_coefficients, stirling2
from errors import UsageError
from series.rational import RationalLike, format_rational, to_rational


@dataclass(frozen=True)
class Poly:
    """coeffs[i] multiplies x^i; trailing zeros are trimmed, zero is (0,)."""
    coeffs: tuple

    def __post_init__(self) -> None:
        coeffs = [to_rational(c) for c in self.coeffs]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, 'coeffs', tuple(coeffs) or (Fraction(0),))

    @classmethod
    def constant(cls, c: RationalLike) -> 'Poly':
        return cls((c,))

    @classmethod
    def x(cls) -> 'Poly':
        return cls((0, 1))

    @classmethod
    def falling_factorial(cls, n: int) -> 'Poly':
        """(x)_n."""
        return cls(falling_factorial_coefficients(n))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return self.coeffs == (Fraction(0),)

    def __call__(self, x: RationalLike) -> Fraction:
        x = to_rational(x)
        value = Fraction(0)
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def __add__(self, other: 'Poly') -> 'Poly':
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (size - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (size - len(other.coeffs))
        return Poly(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> 'Poly':
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: 'Poly') -> 'Poly':
        return self + (-other)

    def __mul__(self, other: 'Poly') -> 'Poly':
        product = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    product[i + j] += a * b
        return Poly(tuple(product))

    def scale(self, c: RationalLike) -> 'Poly':
        c = to_rational(c)
        return Poly(tuple(c * a for a in self.coeffs))

    def shift(self, c: RationalLike) -> 'Poly':
        """q(x + c), by Horner's scheme in the polynomial ring."""
        step = Poly((c, 1))
        result = Poly.constant(0)
        for a in reversed(self.coeffs):
            result = result * step + Poly.constant(a)
        return result

    def derivative(self, m: int = 1) -> 'Poly':
        if m < 0:
            raise UsageError(f'derivative order must be non-negative, got {m}')
        if m > self.degree:
            return Poly.constant(0)
        # d^m/dx^m x^i = (i)_m x^{i-m}
        return Poly(tuple(
            self.coeffs[i] * (factorial(i) // factorial(i - m)) for i in range(m, len(self.coeffs))
        ))


def forward_difference(q: Poly, r: int) -> Poly:
    """Delta^r q(x) = sum_i C(r,i) (-1)^{r-i} q(x+i)."""
    if r < 0:
        raise UsageError(f'difference order must be non-negative, got {r}')
    result = Poly.constant(0)
    for i in range(r + 1):
        result = result + q.shift(i).scale(comb(r, i) * (-1) ** (r - i))
    return result


def forward_difference_via_derivatives(q: Poly, r: int) -> Poly:
    """Delta^r q(x) = r! sum_{j>=r} S2(j,r) q^{(j)}(x) / j!."""
    if r < 0:
        raise UsageError(f'difference order must be non-negative, got {r}')
    result = Poly.constant(0)
    for j in range(r, q.degree + 1):
        result = result + q.derivative(j).scale(factorial(r) * stirling2(j, r) / factorial(j))
    return result


def parse_poly(text: str) -> Poly:
    """'0,0,1' is x^2: comma-separated rationals, lowest degree first."""
    parts = [part.strip() for part in text.split(',')]
    if not text.strip() or any(not part for part in parts):
        raise UsageError(f'bad polynomial {text!r}: expected comma-separated rationals like 0,0,1')
    return Poly(tuple(to_rational(part) for part in parts))


def format_poly(q: Poly) -> str:
    return ','.join(format_rational(c) for c in q.coeffs)


def poly_sum(terms: Iterable[Poly]) -> Poly:
    total = Poly.constant(0)
    for term in terms:
        total = total + term
    return total
