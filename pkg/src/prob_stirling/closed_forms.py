"""Per-family closed forms of the probabilistic Stirling numbers.

Each family contributes finite sums that are independent of the series
engine. Several of them are a scalar multiple of an alternating sum which
vanishes for 0 <= n < k; those raw sums live in VANISHING_SUMS and are
shared with the vanishing-identity checks.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Optional

from combinatorics.frobenius import frobenius_euler_series
from combinatorics.stirling import (
    degen_falling_factorial,
    degen_stirling1,
    degen_stirling2,
    falling_factorial,
    stirling1,
    stirling2,
)
from errors import NotAvailableError, PreconditionError, UsageError
from rv_models.models import (
    Bernoulli,
    Binomial,
    Constant,
    Exponential,
    Gamma,
    Geometric,
    Normal,
    Poisson,
    RVSpec,
    Uniform,
    format_rv,
)
from series.egf import (
    EgfSeries,
    series_log1p,
    series_mul,
    series_pow_binomial,
    series_recip,
)
from series.rational import RationalLike, to_rational

DEFAULT_SERIES_TERMS = 40
ZERO = Fraction(0)


class Kind(str, Enum):
    S2Y = 'S2Y'
    S1Y = 'S1Y'
    S2YL = 'S2YL'
    S1YL = 'S1YL'

    @property
    def degenerate(self) -> bool:
        return self in (Kind.S2YL, Kind.S1YL)

    @property
    def first_kind(self) -> bool:
        return self in (Kind.S1Y, Kind.S1YL)


@dataclass(frozen=True)
class ClosedFormResult:
    value: Fraction
    formula: str
    # set for series that are cut after `terms` summands
    terms: Optional[int] = None

    @property
    def truncated(self) -> bool:
        return self.terms is not None


def _total(values) -> Fraction:
    return sum(values, ZERO)


def _geometric_u(rv: Geometric) -> Fraction:
    return 1 / (1 - rv.p)


def _frobenius(n: int, r: int, u: Fraction, lam: Optional[Fraction]) -> Fraction:
    return frobenius_euler_series(r, u, n, lam)[n]


def _require_mu(rv: Normal) -> None:
    if rv.mu == 0:
        raise PreconditionError(f'first-kind closed forms of the normal variable need mu != 0, got {format_rv(rv)}')


def _half_falling(j: int, power: int) -> Fraction:
    return falling_factorial(Fraction(j, 2), power)


@lru_cache(maxsize=None)
def _half_falling_difference(j: int, m: int) -> Fraction:
    """sum_l (-1)^{j+l} C(j,l) (l/2)_m, the j-th difference of a degree-m polynomial."""
    return _total((-1) ** (j + l) * comb(j, l) * _half_falling(l, m) for l in range(j + 1))


# alternating sums that vanish for 0 <= n < k

def geometric_frobenius_sum(rv: Geometric, n: int, k: int, lam: Optional[Fraction] = None) -> Fraction:
    u = _geometric_u(rv)
    return _total(comb(k, j) * (-1) ** j * _frobenius(n, j, u, lam) for j in range(k + 1))


def gamma_rising_sum(rv: Gamma, n: int, k: int, lam: Optional[Fraction] = None) -> Fraction:
    return _total(comb(k, j) * (-1) ** (k - j) * falling_factorial(rv.alpha * j + n - 1, n) for j in range(k + 1))


def gamma_first_kind_sum(rv: Gamma, n: int, k: int, lam: Optional[Fraction] = None) -> Fraction:
    return _total(
        comb(k, j) * (-1) ** j * degen_falling_factorial(j + (n - 1) * rv.alpha, n, rv.alpha)
        for j in range(k + 1)
    )


def gamma_degenerate_sum(rv: Gamma, n: int, k: int, lam: Fraction) -> Fraction:
    return _total(
        (-1) ** (k - j) * comb(k, j) * falling_factorial(rv.alpha * j + l - 1, l)
        / rv.beta ** l * lam ** (n - l) * stirling1(n, l)
        for l in range(n + 1)
        for j in range(k + 1)
    )


def normal_first_kind_sum(rv: Normal, n: int, k: int, lam: Optional[Fraction] = None) -> Fraction:
    _require_mu(rv)
    ratio = rv.sigma2 / rv.mu ** 2
    return _total(
        (-1) ** j * comb(k, j) * _half_falling(j, l) * 2 ** l * ratio ** l * stirling1(n, l)
        for j in range(k + 1)
        for l in range(n + 1)
    )


def normal_degenerate_first_kind_sum(rv: Normal, n: int, k: int, lam: Fraction,
                                     terms: int = DEFAULT_SERIES_TERMS) -> Fraction:
    """The series over j >= k cut after `terms` summands, with lam^{-k} folded in.

    Summands with j > n are j-th differences of polynomials of degree <= n
    in l and vanish, so any terms > n - k gives the full value.
    """
    _require_mu(rv)
    ratio = rv.sigma2 / rv.mu ** 2
    scale = rv.mu / rv.sigma2
    total = ZERO
    for m in range(n + 1):
        s1 = stirling1(n, m)
        if not s1:
            continue
        for j in range(k, k + terms):
            s2 = stirling2(j, k)
            inner = _half_falling_difference(j, m)
            if inner:
                total += inner * lam ** (j - k) * scale ** j / factorial(j) * 2 ** m * ratio ** m * s2 * s1
    return total


def uniform_sum(rv: Uniform, n: int, k: int, lam: Optional[Fraction] = None) -> Fraction:
    return _total(
        Fraction(comb(n, l) * comb(k, j), comb(l + j, j)) * (-1) ** (k - j)
        * (rv.a * j) ** (n - l) * (rv.b - rv.a) ** l * stirling2(l + j, j)
        for j in range(k + 1)
        for l in range(n + 1)
    )


def uniform_degenerate_sum(rv: Uniform, n: int, k: int, lam: Fraction) -> Fraction:
    return _total(
        Fraction(comb(m, l) * comb(k, j), comb(l + j, j)) * (-1) ** (k - j)
        * (rv.a * j) ** (m - l) * (rv.b - rv.a) ** l * lam ** (n - m) * stirling2(l + j, j) * stirling1(n, m)
        for m in range(n + 1)
        for j in range(k + 1)
        for l in range(m + 1)
    )


def _require_origin(rv: Uniform) -> None:
    if rv.a != 0:
        raise NotAvailableError(f'the origin form applies to uniform variables with a = 0, got {format_rv(rv)}')


def uniform_origin_sum(rv: Uniform, n: int, k: int, lam: Optional[Fraction] = None) -> Fraction:
    _require_origin(rv)
    return _total(
        Fraction(comb(k, j), comb(n + j, j)) * (-1) ** (k - j) * stirling2(n + j, j) for j in range(k + 1)
    )


def uniform_origin_degenerate_sum(rv: Uniform, n: int, k: int, lam: Fraction) -> Fraction:
    _require_origin(rv)
    return _total(
        Fraction(comb(k, j), comb(m + j, j)) * (-1) ** (k - j) * rv.b ** m * lam ** (n - m)
        * stirling2(m + j, j) * stirling1(n, m)
        for m in range(n + 1)
        for j in range(k + 1)
    )


@dataclass(frozen=True)
class VanishingSum:
    identity: str
    family: type
    degenerate: bool
    fn: Callable
    applies: Callable[[RVSpec], bool] = lambda rv: True


VANISHING_SUMS = (
    VanishingSum('geometric-frobenius', Geometric, False, geometric_frobenius_sum),
    VanishingSum('geometric-frobenius-degenerate', Geometric, True, geometric_frobenius_sum),
    VanishingSum('gamma-rising', Gamma, False, gamma_rising_sum),
    VanishingSum('gamma-first-kind', Gamma, False, gamma_first_kind_sum),
    VanishingSum('gamma-degenerate', Gamma, True, gamma_degenerate_sum),
    VanishingSum('normal-first-kind', Normal, False, normal_first_kind_sum),
    VanishingSum('uniform', Uniform, False, uniform_sum),
    VanishingSum('uniform-degenerate', Uniform, True, uniform_degenerate_sum),
    VanishingSum('uniform-origin', Uniform, False, uniform_origin_sum, lambda rv: rv.a == 0),
    VanishingSum('uniform-origin-degenerate', Uniform, True, uniform_origin_degenerate_sum, lambda rv: rv.a == 0),
)


# closed forms, one function per (family, kind); all assume n >= k

def _constant(rv: Constant, kind: Kind, n: int, k: int, lam: Fraction, terms: int) -> Fraction:
    if kind is Kind.S2Y:
        return rv.c ** n * stirling2(n, k)
    if kind is Kind.S1Y:
        return stirling1(n, k) / rv.c ** k
    return degen_stirling2(n, k, lam) if kind is Kind.S2YL else degen_stirling1(n, k, lam)


def _bernoulli(rv: Bernoulli, kind: Kind, n: int, k: int, lam: Fraction, terms: int) -> Fraction:
    p = rv.p
    return {
        Kind.S2Y: lambda: p ** k * stirling2(n, k),
        Kind.S1Y: lambda: stirling1(n, k) / p ** n,
        Kind.S2YL: lambda: p ** k * degen_stirling2(n, k, lam),
        Kind.S1YL: lambda: degen_stirling1(n, k, lam) / p ** n,
    }[kind]()


def _binomial(rv: Binomial, kind: Kind, n: int, k: int, lam: Fraction, terms: int) -> Fraction:
    m, p = rv.m, rv.p
    if kind in (Kind.S2Y, Kind.S2YL):
        last = stirling2 if kind is Kind.S2Y else (lambda a, b: degen_stirling2(a, b, lam))
        return _total(
            Fraction(m) ** j * p ** i * stirling2(j, k) * stirling1(i, j) * last(n, i)
            for j in range(k, n + 1)
            for i in range(j, n + 1)
        )
    first = stirling1 if kind is Kind.S1Y else (lambda a, b: degen_stirling1(a, b, lam))
    return _total(
        first(j, k) * stirling2(i, j) * stirling1(n, i) / (p ** j * Fraction(m) ** i)
        for j in range(k, n + 1)
        for i in range(j, n + 1)
    )


def _poisson(rv: Poisson, kind: Kind, n: int, k: int, lam: Fraction, terms: int) -> Fraction:
    alpha = rv.alpha
    if kind is Kind.S2Y:
        return _total(alpha ** j * stirling2(j, k) * stirling2(n, j) for j in range(k, n + 1))
    if kind is Kind.S1Y:
        return _total(stirling1(j, k) * stirling1(n, j) / alpha ** j for j in range(k, n + 1))
    if kind is Kind.S2YL:
        return _total(alpha ** j * stirling2(j, k) * degen_stirling2(n, j, lam) for j in range(k, n + 1))
    return _total(degen_stirling1(j, k, lam) * stirling1(n, j) / alpha ** j for j in range(k, n + 1))


def _geometric(rv: Geometric, kind: Kind, n: int, k: int, lam: Fraction, terms: int) -> Fraction:
    p = rv.p
    if kind in (Kind.S2Y, Kind.S2YL):
        raw = geometric_frobenius_sum(rv, n, k, lam if kind is Kind.S2YL else None)
        return raw / (factorial(k) * (p - 1) ** k)
    first = stirling1 if kind is Kind.S1Y else (lambda a, b: degen_stirling1(a, b, lam))
    return _total(
        comb(n, j) * falling_factorial(n - 1, n - j) * p ** j * (p - 1) ** (n - j) * first(j, k)
        for j in range(k, n + 1)
    )


def _exponential(rv: Exponential, kind: Kind, n: int, k: int, lam: Fraction, terms: int) -> Fraction:
    alpha = rv.alpha
    if kind is Kind.S2Y:
        return comb(n, k) * falling_factorial(n - 1, n - k) / alpha ** n
    if kind is Kind.S1Y:
        return (-1) ** (n - k) * comb(n, k) * falling_factorial(n - 1, n - k) * alpha ** k
    if kind is Kind.S2YL:
        return _total(
            comb(j, k) * falling_factorial(j - 1, j - k) / alpha ** j * lam ** (n - j) * stirling1(n, j)
            for j in range(k, n + 1)
        )
    return _total(
        comb(n, j) * (-1) ** (n - j) * falling_factorial(n - 1, n - j) * alpha ** j * lam ** (j - k) * stirling2(j, k)
        for j in range(k, n + 1)
    )


def _gamma(rv: Gamma, kind: Kind, n: int, k: int, lam: Fraction, terms: int) -> Fraction:
    alpha, beta = rv.alpha, rv.beta
    if kind is Kind.S2Y:
        return gamma_rising_sum(rv, n, k) / (factorial(k) * beta ** n)
    if kind is Kind.S1Y:
        return beta ** k * (-1 / alpha) ** n * gamma_first_kind_sum(rv, n, k) / factorial(k)
    if kind is Kind.S2YL:
        return gamma_degenerate_sum(rv, n, k, lam) / factorial(k)
    return _total(
        stirling2(l, k) * comb(l, j) / factorial(l) * (-1) ** (n - j) * lam ** (l - k) * beta ** l
        / alpha ** n * degen_falling_factorial(j + (n - 1) * alpha, n, alpha)
        for l in range(k, n + 1)
        for j in range(l + 1)
    )


def _normal_second_kind_term(rv: Normal, m: int, j: int) -> Fraction:
    # (m!/j!) C(j, m-j) mu^{2j-m} (sigma2/2)^{m-j}; zero unless m - j <= j
    if m - j > j:
        return ZERO
    return Fraction(factorial(m), factorial(j)) * comb(j, m - j) * rv.mu ** (2 * j - m) * (rv.sigma2 / 2) ** (m - j)


def _normal(rv: Normal, kind: Kind, n: int, k: int, lam: Fraction, terms: int) -> Fraction:
    if kind is Kind.S2Y:
        return _total(_normal_second_kind_term(rv, n, j) * stirling2(j, k) for j in range(k, n + 1))
    if kind is Kind.S1Y:
        return (-rv.mu / rv.sigma2) ** k * normal_first_kind_sum(rv, n, k) / factorial(k)
    if kind is Kind.S2YL:
        return _total(
            _normal_second_kind_term(rv, m, j) * lam ** (n - m) * stirling2(j, k) * stirling1(n, m)
            for m in range(k, n + 1)
            for j in range(k, m + 1)
        )
    return normal_degenerate_first_kind_sum(rv, n, k, lam, terms)


def _uniform(rv: Uniform, kind: Kind, n: int, k: int, lam: Fraction, terms: int) -> Fraction:
    if kind is Kind.S2Y:
        return uniform_sum(rv, n, k) / factorial(k)
    return uniform_degenerate_sum(rv, n, k, lam) / factorial(k)


def _uniform_origin(rv: Uniform, kind: Kind, n: int, k: int, lam: Fraction, terms: int) -> Fraction:
    if kind is Kind.S2Y:
        return rv.b ** n * uniform_origin_sum(rv, n, k) / factorial(k)
    return uniform_origin_degenerate_sum(rv, n, k, lam) / factorial(k)


CLOSED_FORMS = {
    Constant: (('constant', _constant),),
    Bernoulli: (('bernoulli', _bernoulli),),
    Binomial: (('binomial', _binomial),),
    Poisson: (('poisson', _poisson),),
    Geometric: (('geometric-frobenius', _geometric),),
    Exponential: (('exponential', _exponential),),
    Gamma: (('gamma', _gamma),),
    Normal: (('normal', _normal),),
    Uniform: (('uniform', _uniform), ('uniform-origin', _uniform_origin)),
}


def _check_available(rv: RVSpec, kind: Kind) -> None:
    if isinstance(rv, Uniform) and kind.first_kind:
        raise NotAvailableError(
            'no closed form is known for first-kind numbers of the uniform variable; '
            'use the generic inverse-series triangle'
        )
    if isinstance(rv, Constant) and kind.degenerate and rv.c != 1:
        raise NotAvailableError(f'degenerate closed forms of a constant variable exist for c = 1 only, got c={rv.c}')


def closed_form_variants(rv: RVSpec) -> tuple:
    """Formula labels that apply to this variable, the preferred one first."""
    variants = CLOSED_FORMS[type(rv)]
    if isinstance(rv, Uniform) and rv.a != 0:
        variants = variants[:1]
    return tuple(label for label, _ in variants)


def closed_form(rv: RVSpec, kind: Kind, n: int, k: int, lam: Optional[RationalLike] = None,
                terms: int = DEFAULT_SERIES_TERMS, formula: Optional[str] = None) -> ClosedFormResult:
    kind = Kind(kind)
    if n < 0 or k < 0:
        raise UsageError(f'indices must be non-negative, got n={n}, k={k}')
    if kind.degenerate and lam is None:
        raise UsageError(f'{kind.value} needs lambda')
    lam = None if lam is None else to_rational(lam)
    if kind.first_kind and rv.mean() == 0:
        raise PreconditionError(f'first-kind numbers need E[Y] != 0, got E[Y] = 0 for {format_rv(rv)}')
    labels = closed_form_variants(rv)
    label = formula or labels[0]
    if label not in labels:
        raise NotAvailableError(f'formula {label!r} does not apply to {format_rv(rv)}')
    fn = dict(CLOSED_FORMS[type(rv)])[label]
    _check_available(rv, kind)
    truncated = isinstance(rv, Normal) and kind is Kind.S1YL
    if k > n:
        return ClosedFormResult(ZERO, label, terms if truncated else None)
    value = fn(rv, kind, n, k, lam, terms)
    return ClosedFormResult(Fraction(value), label, terms if truncated else None)


def geometric_orthogonality(p: RationalLike, n: int, l: int, lam: Optional[RationalLike] = None) -> tuple:
    """Both explicit Frobenius-Euler orthogonality sums of the geometric variable; each is delta(n, l)."""
    p = to_rational(p)
    rv = Geometric(p)
    lam = None if lam is None else to_rational(lam)
    u = _geometric_u(rv)
    ratio = p / (p - 1)
    first_kind = stirling1 if lam is None else (lambda a, b: degen_stirling1(a, b, lam))
    first = _total(
        (-1) ** j * Fraction(comb(k, j) * comb(k, m), factorial(k)) * falling_factorial(k - 1, k - m)
        * ratio ** m * _frobenius(n, j, u, lam) * first_kind(m, l)
        for k in range(l, n + 1)
        for j in range(k + 1)
        for m in range(l, k + 1)
    )
    second = _total(
        (-1) ** m * Fraction(comb(n, j) * comb(l, m), factorial(l)) * falling_factorial(n - 1, n - j)
        * ratio ** j * (p - 1) ** (n - l) * first_kind(j, k) * _frobenius(k, m, u, lam)
        for k in range(l, n + 1)
        for j in range(k, n + 1)
        for m in range(l + 1)
    )
    return first, second


def inverse_closed_form(rv: RVSpec, order: int) -> tuple:
    """(e_bar_Y, f_Y) from each family's own formulas."""
    t = EgfSeries.identity(order)
    log1p_t = series_log1p(t)
    exp_minus_one = EgfSeries.exp_linear(1, order).shift_constant(-1)
    if isinstance(rv, Uniform):
        raise NotAvailableError('no closed form is known for the inverse series of the uniform variable')
    if rv.mean() == 0:
        raise PreconditionError(f'inverse series need E[Y] != 0, got E[Y] = 0 for {format_rv(rv)}')
    if isinstance(rv, Constant):
        return log1p_t.scale(1 / rv.c), t.scale(1 / rv.c)
    if isinstance(rv, Bernoulli):
        return series_log1p(t.scale(1 / rv.p)), series_log1p(exp_minus_one.scale(1 / rv.p))
    if isinstance(rv, Binomial):
        root = series_pow_binomial(t, Fraction(1, rv.m)).shift_constant(-1)
        scaled_exp = EgfSeries.exp_linear(Fraction(1, rv.m), order).shift_constant(-1)
        return series_log1p(root.scale(1 / rv.p)), series_log1p(scaled_exp.scale(1 / rv.p))
    if isinstance(rv, Poisson):
        return series_log1p(log1p_t.scale(1 / rv.alpha)), series_log1p(t.scale(1 / rv.alpha))
    if isinstance(rv, Geometric):
        e_bar = log1p_t - series_log1p(t.scale(1 - rv.p))
        return e_bar, t - series_log1p(exp_minus_one.scale(1 - rv.p))
    if isinstance(rv, Exponential):
        e_bar = series_mul(t.scale(rv.alpha), series_recip(t.shift_constant(1)))
        f = EgfSeries.exp_linear(-1, order).shift_constant(-1).scale(-rv.alpha)
        return e_bar, f
    if isinstance(rv, Gamma):
        e_bar = series_pow_binomial(t, -1 / rv.alpha).shift_constant(-1).scale(-rv.beta)
        f = EgfSeries.exp_linear(-1 / rv.alpha, order).shift_constant(-1).scale(-rv.beta)
        return e_bar, f
    if isinstance(rv, Normal):
        ratio = rv.sigma2 / rv.mu ** 2
        scale = rv.mu / rv.sigma2
        e_bar = series_pow_binomial(log1p_t.scale(2 * ratio), Fraction(1, 2)).shift_constant(-1).scale(scale)
        f = series_pow_binomial(t.scale(2 * ratio), Fraction(1, 2)).shift_constant(-1).scale(scale)
        return e_bar, f
    raise NotAvailableError(f'no inverse closed form for {format_rv(rv)}')
