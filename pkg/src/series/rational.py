"""Exact rational scalars: parsing and formatting of `fractions.Fraction`."""
from fractions import Fraction
from typing import Union

from errors import UsageError

Rational = Fraction
RationalLike = Union[int, Fraction, str]


def to_rational(value: RationalLike) -> Fraction:
    """Coerce int, Fraction or a text like '1/3', '-2', '0.5' to an exact Fraction.

    Floats are refused: they carry binary rounding that would leak into
    every coefficient downstream.
    """
    if isinstance(value, bool):
        raise UsageError(f'not a rational number: {value!r}')
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise UsageError(f'not a rational number: {value!r}') from None
    raise UsageError(f'expected an exact rational, got {type(value).__name__}: {value!r}')


def format_rational(value: Fraction) -> str:
    """'num/den' in lowest terms, or just 'num' for integers."""
    return str(Fraction(value))
