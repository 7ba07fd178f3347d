from series.rational import Rational, format_rational, to_rational
from series.egf import (
    EgfSeries,
    generalized_binomial,
    series_comp_inverse,
    series_compose,
    series_div_t,
    series_exp,
    series_log1p,
    series_mul,
    series_pow_binomial,
    series_power,
    series_recip,
)
