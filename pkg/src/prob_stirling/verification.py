"""Exact checks of orthogonality, closed forms, vanishing identities and independent oracles."""
from fractions import Fraction
from math import comb
from typing import Optional

from combinatorics.triangle import Triangle
from errors import NotAvailableError
from prob_stirling.closed_forms import (
    DEFAULT_SERIES_TERMS,
    VANISHING_SUMS,
    Kind,
    closed_form,
    closed_form_variants,
    geometric_orthogonality,
    inverse_closed_form,
    normal_degenerate_first_kind_sum,
)
from prob_stirling.generating import cgf_series, e_bar_series, e_series, fy_degen_series, fy_series
from prob_stirling.moments import cumulants, s2y_degen_via_moments, s2y_via_moments
from prob_stirling.triangles import first_kind_triangle, second_kind_triangle
from reports import ReportBuilder, VerificationReport
from rv_models.models import (
    Bernoulli,
    Binomial,
    Constant,
    Geometric,
    Normal,
    Poisson,
    RVSpec,
    degen_mgf_closed_form,
    degen_mgf_series,
    format_rv,
    mgf_series,
    moment,
    pmf_moment,
    require_nonzero_mean,
    variance,
)
from series.egf import EgfSeries, series_compose
from series.rational import RationalLike, to_rational
from log.logger import get_logger

logger = get_logger(__name__)


def _title(suite: str, rv: RVSpec, lam: Optional[Fraction]) -> str:
    return f'{suite} {format_rv(rv)}' + ('' if lam is None else f' lambda={lam}')


def check_orthogonality(second: Triangle, first: Triangle, builder: ReportBuilder, label: str) -> None:
    """Both products of the two triangles must be the identity."""
    for identity, product in (
        (f'{label}: sum_k S2(n,k) S1(k,l)', second.matmul(first)),
        (f'{label}: sum_k S1(n,k) S2(k,l)', first.matmul(second)),
    ):
        for n, l, value in product.entries():
            builder.check(identity, Fraction(1 if n == l else 0), value, n=n, l=l)


def verify_orthogonality(rv: RVSpec, lam: Optional[RationalLike] = None, order: int = 10) -> VerificationReport:
    """Non-degenerate orthogonality always; the degenerate pair too when lam is given."""
    require_nonzero_mean(rv)
    lam = None if lam is None else to_rational(lam)
    builder = ReportBuilder(_title('orthogonality', rv, lam))
    check_orthogonality(second_kind_triangle(rv, order), first_kind_triangle(rv, order), builder, 'probabilistic')
    if lam is not None:
        check_orthogonality(
            second_kind_triangle(rv, order, lam), first_kind_triangle(rv, order, lam), builder, 'degenerate'
        )
    report = builder.build()
    logger.debug(f'{report.name}: passed={report.passed}, checked={report.checked}')
    return report


def vanishing_identities(rv: RVSpec, lam: Optional[RationalLike] = None) -> list:
    sums = [
        s for s in VANISHING_SUMS
        if isinstance(rv, s.family) and s.applies(rv) and (not s.degenerate or lam is not None)
    ]
    if not sums:
        raise NotAvailableError(f'no vanishing identity is known for {format_rv(rv)}')
    return sums


def verify_vanishing(rv: RVSpec, lam: Optional[RationalLike] = None, max_k: int = 5) -> VerificationReport:
    """Each alternating sum must be exactly zero for 0 <= n < k <= max_k."""
    lam = None if lam is None else to_rational(lam)
    builder = ReportBuilder(_title('vanishing', rv, lam))
    for vanishing in vanishing_identities(rv, lam):
        for k in range(1, max_k + 1):
            for n in range(k):
                value = vanishing.fn(rv, n, k, lam if vanishing.degenerate else None)
                builder.check(vanishing.identity, Fraction(0), value, n=n, k=k)
    return builder.build()


def normal_degenerate_vanishing(rv: Normal, lam: RationalLike, n: int, k: int,
                                terms: int = DEFAULT_SERIES_TERMS) -> float:
    """Absolute value of the truncated degenerate first-kind sum for n < k, as a float residual."""
    return abs(float(normal_degenerate_first_kind_sum(rv, n, k, to_rational(lam), terms)))


def verify_closed_forms(rv: RVSpec, lam: Optional[RationalLike] = None, order: int = 8,
                        terms: int = DEFAULT_SERIES_TERMS, tolerance: float = 1e-9) -> VerificationReport:
    """Every applicable closed form against the generic series triangle, all n, k <= order."""
    lam = None if lam is None else to_rational(lam)
    builder = ReportBuilder(_title('closed-forms', rv, lam))
    kinds = [Kind.S2Y, Kind.S1Y] + ([Kind.S2YL, Kind.S1YL] if lam is not None else [])
    for kind in kinds:
        if kind.first_kind and rv.mean() == 0:
            builder.note(f'{kind.value} skipped: E[Y] = 0')
            continue
        kind_lam = lam if kind.degenerate else None
        generic = (first_kind_triangle if kind.first_kind else second_kind_triangle)(rv, order, kind_lam)
        for label in closed_form_variants(rv):
            try:
                closed_form(rv, kind, 0, 0, kind_lam, terms, label)
            except NotAvailableError as exc:
                builder.note(f'{label} {kind.value}: {exc}')
                continue
            for n in range(order + 1):
                for k in range(n + 1):
                    result = closed_form(rv, kind, n, k, kind_lam, terms, label)
                    builder.check(
                        f'{label} {kind.value} closed form = series coefficient', generic[n, k], result.value,
                        tolerance=tolerance if result.truncated else None, n=n, k=k,
                    )
    if isinstance(rv, Geometric):
        for n in range(min(order, 4) + 1):
            for l in range(n + 1):
                for first_sum in geometric_orthogonality(rv.p, n, l, lam):
                    builder.check('geometric Frobenius-Euler orthogonality', Fraction(int(n == l)), first_sum, n=n, l=l)
    return builder.build()


def verify_oracles(rv: RVSpec, lam: Optional[RationalLike] = None, order: int = 8) -> VerificationReport:
    """Cross-checks of the series engine against independent computations."""
    lam = None if lam is None else to_rational(lam)
    builder = ReportBuilder(_title('oracle', rv, lam))

    second = second_kind_triangle(rv, order)
    for n in range(order + 1):
        for k in range(n + 1):
            builder.check('S2 via moments of partial sums', second[n, k], s2y_via_moments(rv, n, k), n=n, k=k)
    if lam is not None:
        degenerate = second_kind_triangle(rv, order, lam)
        for n in range(order + 1):
            for k in range(n + 1):
                builder.check('degenerate S2 via moments of partial sums', degenerate[n, k],
                              s2y_degen_via_moments(rv, lam, n, k), n=n, k=k)
        builder.check('degenerate mgf closed form = composition',
                      list(degen_mgf_series(rv, lam, order).coeffs),
                      list(degen_mgf_closed_form(rv, lam, order).coeffs))

    if order >= 1:
        kappa = cumulants(rv, order)
        cgf = cgf_series(rv, order)
        for n in range(1, order + 1):
            builder.check('cumulant = coefficient of log E[e^{Yt}]', cgf[n], kappa[n], n=n)
        builder.check('first cumulant = mean', rv.mean(), kappa[1])
        if order >= 2:
            builder.check('second cumulant = variance', variance(rv), kappa[2])
        if order >= 3:
            mu = rv.mean()
            central = sum((comb(3, i) * moment(rv, i) * (-mu) ** (3 - i) for i in range(4)), Fraction(0))
            builder.check('third cumulant = third central moment', central, kappa[3])
        if isinstance(rv, Poisson):
            for n in range(1, order + 1):
                builder.check('poisson cumulants are all alpha', rv.alpha, kappa[n], n=n)

    if isinstance(rv, (Constant, Bernoulli, Binomial)):
        moments = mgf_series(rv, order)
        for n in range(order + 1):
            builder.check('moment = finite mass sum', pmf_moment(rv, n), moments[n], n=n)

    if rv.mean() != 0:
        t = EgfSeries.identity(order)
        for kind_lam in (None,) if lam is None else (None, lam):
            e_bar = e_bar_series(rv, order, kind_lam)
            f = fy_series(rv, order) if kind_lam is None else fy_degen_series(rv, kind_lam, order)
            builder.check('e_Y(e_bar_Y(t)) = t', list(t.coeffs),
                          list(series_compose(e_series(rv, order, kind_lam), e_bar).coeffs), lam=kind_lam)
            builder.check('f_bar_Y(f_Y(t)) = t', list(t.coeffs),
                          list(series_compose(cgf_series(rv, order, kind_lam), f).coeffs), lam=kind_lam)
        try:
            e_bar_closed, f_closed = inverse_closed_form(rv, order)
        except NotAvailableError as exc:
            builder.note(str(exc))
        else:
            builder.check('inverse series closed form', list(e_bar_series(rv, order).coeffs), list(e_bar_closed.coeffs))
            builder.check('inverse cumulant series closed form', list(fy_series(rv, order).coeffs), list(f_closed.coeffs))
    return builder.build()
