"""The generating series behind the probabilistic Stirling numbers.

e_Y = E[e^{Yt}] - 1 and its degenerate version, their compositional
inverses, the cumulant generating series and its inverse.
"""
from typing import Optional

from rv_models.models import RVSpec, degen_mgf_series, mgf_series, require_nonzero_mean
from series.egf import EgfSeries, series_comp_inverse, series_log1p
from series.rational import RationalLike


def moment_series(rv: RVSpec, order: int, lam: Optional[RationalLike] = None) -> EgfSeries:
    """E[e^{Yt}] when lam is None, else E[e_lam^Y(t)]."""
    if lam is None:
        return mgf_series(rv, order)
    return degen_mgf_series(rv, lam, order)


def e_series(rv: RVSpec, order: int, lam: Optional[RationalLike] = None) -> EgfSeries:
    return moment_series(rv, order, lam).shift_constant(-1)


def _inverse(series: EgfSeries, order: int) -> EgfSeries:
    # the inverse needs at least the linear term, so order 0 is solved at order 1
    return series_comp_inverse(series).truncate(order)


def e_bar_series(rv: RVSpec, order: int, lam: Optional[RationalLike] = None) -> EgfSeries:
    require_nonzero_mean(rv)
    return _inverse(e_series(rv, max(order, 1), lam), order)


def cgf_series(rv: RVSpec, order: int, lam: Optional[RationalLike] = None) -> EgfSeries:
    """log E[e^{Yt}] (or log E[e_lam^Y(t)])."""
    return series_log1p(e_series(rv, order, lam))


def fy_series(rv: RVSpec, order: int) -> EgfSeries:
    require_nonzero_mean(rv, 'the inverse of the cumulant generating series')
    return _inverse(cgf_series(rv, max(order, 1)), order)


def fy_degen_series(rv: RVSpec, lam: RationalLike, order: int) -> EgfSeries:
    require_nonzero_mean(rv, 'the inverse of the cumulant generating series')
    return _inverse(cgf_series(rv, max(order, 1), lam), order)
