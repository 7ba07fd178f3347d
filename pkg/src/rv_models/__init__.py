from rv_models.models import (
    FAMILIES,
    Bernoulli,
    Binomial,
    Constant,
    Exponential,
    Gamma,
    Geometric,
    Normal,
    Poisson,
    RandomVariable,
    RVSpec,
    Uniform,
    degen_mgf_closed_form,
    degen_mgf_series,
    format_rv,
    mean,
    mgf_series,
    moment,
    parse_rv,
    pmf_moment,
    require_nonzero_mean,
    variance,
)
