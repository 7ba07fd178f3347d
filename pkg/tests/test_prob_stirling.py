from fractions import Fraction

import pytest

from combinatorics import Triangle, stirling1, stirling1_triangle, stirling2, stirling2_triangle
from errors import NotAvailableError, PreconditionError, UsageError
from prob_stirling import (
    Kind,
    adell_benyi_s,
    closed_form,
    cumulants,
    e_bar_series,
    e_series,
    first_kind_triangle,
    fy_series,
    geometric_orthogonality,
    normal_degenerate_vanishing,
    partial_sum_moments,
    s1y_degen_triangle,
    s1y_triangle,
    s2y_degen_triangle,
    s2y_triangle,
    s2y_degen_via_moments,
    s2y_via_moments,
    second_kind_triangle,
    transform_lower,
    transform_upper,
    vanishing_identities,
    verify_closed_forms,
    verify_oracles,
    verify_orthogonality,
    verify_vanishing,
)
from rv_models import (
    Bernoulli,
    Constant,
    Exponential,
    Gamma,
    Geometric,
    Normal,
    Poisson,
    Uniform,
)
from prob_stirling.verification import check_orthogonality
from reports import ReportBuilder
from series import EgfSeries, series_compose


def test_constant_one_gives_classical_numbers():
    assert s2y_triangle(Constant(1), 6) == stirling2_triangle(6)
    assert s1y_triangle(Constant(1), 6) == stirling1_triangle(6)


def test_spot_values():
    assert s2y_triangle(Bernoulli(Fraction(1, 2)), 3)[3, 2] == Fraction(3, 4)
    assert s1y_triangle(Exponential(1), 3)[3, 2] == -6
    assert closed_form(Bernoulli(Fraction(1, 2)), Kind.S2Y, 3, 2).value == Fraction(3, 4)
    assert closed_form(Exponential(1), Kind.S1Y, 3, 2).value == -6


def test_degenerate_triangles_reduce_at_zero(grid_rv):
    assert s2y_degen_triangle(grid_rv, 0, 6) == s2y_triangle(grid_rv, 6)
    assert s1y_degen_triangle(grid_rv, 0, 6) == s1y_triangle(grid_rv, 6)


def test_orthogonality(grid_rv, grid_lambda):
    report = verify_orthogonality(grid_rv, grid_lambda, 6)
    assert report.passed, report.failure
    assert report.checked == 4 * 28


def test_orthogonality_needs_nonzero_mean():
    with pytest.raises(PreconditionError):
        verify_orthogonality(Uniform(-1, 1))
    with pytest.raises(PreconditionError):
        s1y_triangle(Normal(0, 1), 4)


def test_closed_forms_match_series(grid_rv, grid_lambda):
    report = verify_closed_forms(grid_rv, grid_lambda, 6)
    assert report.passed, report.failure


def test_closed_form_errors():
    with pytest.raises(UsageError):
        closed_form(Poisson(1), Kind.S2YL, 3, 1)
    with pytest.raises(PreconditionError):
        closed_form(Normal(0, 1), Kind.S1Y, 3, 1)
    with pytest.raises(NotAvailableError):
        closed_form(Uniform(0, 1), Kind.S1Y, 3, 1)
    with pytest.raises(NotAvailableError):
        closed_form(Constant(2), Kind.S2YL, 3, 1, lam=Fraction(1, 2))
    with pytest.raises(NotAvailableError):
        closed_form(Uniform(1, 2), Kind.S2Y, 3, 1, formula='uniform-origin')
    assert closed_form(Poisson(1), Kind.S2Y, 2, 5).value == 0


def test_constant_closed_forms():
    rv = Constant(2)
    assert closed_form(rv, Kind.S2Y, 4, 2).value == 16 * stirling2(4, 2)
    assert closed_form(rv, Kind.S1Y, 4, 2).value == Fraction(stirling1(4, 2), 4)


def test_normal_truncated_series_within_tolerance():
    rv, lam = Normal(1, 1), Fraction(1, 2)
    generic = first_kind_triangle(rv, 4, lam)
    for n in range(5):
        for k in range(n + 1):
            result = closed_form(rv, Kind.S1YL, n, k, lam, terms=40)
            assert result.truncated
            assert abs(float(result.value - generic[n, k])) <= 1e-9
    for k in range(1, 4):
        for n in range(k):
            assert normal_degenerate_vanishing(rv, lam, n, k, 40) <= 1e-9


@pytest.mark.parametrize('rv', [Geometric(Fraction(1, 3)), Gamma(2, 3), Normal(1, 2), Uniform(0, 1), Uniform(-1, 2)],
                         ids=str)
def test_vanishing_identities(rv, grid_lambda):
    report = verify_vanishing(rv, grid_lambda, 5)
    assert report.passed, report.failure
    report = verify_vanishing(rv, None, 5)
    assert report.passed, report.failure


def test_vanishing_identity_selection():
    names = [s.identity for s in vanishing_identities(Uniform(0, 1), Fraction(1, 2))]
    assert names == ['uniform', 'uniform-degenerate', 'uniform-origin', 'uniform-origin-degenerate']
    names = [s.identity for s in vanishing_identities(Uniform(-1, 2))]
    assert names == ['uniform']
    with pytest.raises(NotAvailableError):
        vanishing_identities(Poisson(1))


@pytest.mark.parametrize('lam', [None, Fraction(1, 2)])
def test_geometric_orthogonality(lam):
    for n in range(4):
        for l in range(n + 1):
            assert geometric_orthogonality(Fraction(1, 3), n, l, lam) == (int(n == l), int(n == l))


def test_moment_oracle(grid_rv):
    second = s2y_triangle(grid_rv, 6)
    degenerate = s2y_degen_triangle(grid_rv, Fraction(1, 2), 6)
    for n in range(7):
        for k in range(n + 1):
            assert s2y_via_moments(grid_rv, n, k) == second[n, k]
            assert s2y_degen_via_moments(grid_rv, Fraction(1, 2), n, k) == degenerate[n, k]


def test_partial_sum_moments():
    table = partial_sum_moments(Bernoulli(Fraction(1, 2)), 3, 2)
    # S_3 ~ Binomial(3, 1/2): E[S] = 3/2, E[S^2] = 3/4 + 9/4
    assert table[3, 1] == Fraction(3, 2)
    assert table[3, 2] == 3
    assert table[0, 0] == 1 and table[0, 2] == 0


def test_cumulants():
    kappa = cumulants(Poisson(1), 10)
    assert [kappa[n] for n in range(1, 11)] == [1] * 10
    kappa = cumulants(Normal(1, 2), 6)
    assert [kappa[n] for n in range(1, 7)] == [1, 2, 0, 0, 0, 0]
    with pytest.raises(IndexError):
        kappa[0]
    with pytest.raises(UsageError):
        cumulants(Poisson(1), 0)


def test_oracles(grid_rv, grid_lambda):
    report = verify_oracles(grid_rv, grid_lambda, 6)
    assert report.passed, report.failure


def test_oracles_at_order_zero(grid_rv, grid_lambda):
    report = verify_oracles(grid_rv, grid_lambda, 0)
    assert report.passed, report.failure
    if grid_rv.mean() != 0:
        assert e_bar_series(grid_rv, 0, grid_lambda) == EgfSeries.zero(0)
        assert fy_series(grid_rv, 0) == EgfSeries.zero(0)
        assert s1y_triangle(grid_rv, 0) == Triangle.identity(0)


def test_compositional_inverses(grid_rv, grid_lambda):
    t = EgfSeries.identity(8)
    assert series_compose(e_series(grid_rv, 8, grid_lambda), e_bar_series(grid_rv, 8, grid_lambda)) == t
    assert series_compose(e_bar_series(grid_rv, 8), e_series(grid_rv, 8)) == t


def test_exponential_inverse():
    # e_bar_Y = alpha t / (1 + t) for the exponential variable
    e_bar = e_bar_series(Exponential(1), 5)
    assert e_bar.coeffs == (0, 1, -2, 6, -24, 120)
    assert fy_series(Exponential(1), 3) == EgfSeries((0, 1, -1, 1))


def test_adell_benyi():
    assert adell_benyi_s(Constant(1), 3, 3) == 1
    assert adell_benyi_s(Constant(1), 3, 2) == 0
    assert adell_benyi_s(Poisson(1), 3, 2) == -3
    assert adell_benyi_s(Poisson(1), 2, 4) == 0
    # the sign convention differs from the first-kind numbers
    assert adell_benyi_s(Poisson(1), 2, 1) == -1
    assert s1y_triangle(Poisson(1), 2)[2, 1] == -2


def test_transforms_invert(grid_rv):
    b = [Fraction(n * n - 3, n + 1) for n in range(7)]
    second, first = second_kind_triangle(grid_rv, 6), first_kind_triangle(grid_rv, 6)
    assert transform_lower(first, transform_lower(second, b)) == b
    assert transform_upper(second, transform_upper(first, b)) == b
    with pytest.raises(UsageError):
        transform_lower(second, b[:-1])


def test_degenerate_transforms_invert(grid_rv):
    lam = Fraction(1, 2)
    b = [Fraction(2 * n - 5, n * n + 1) for n in range(7)]
    second, first = s2y_degen_triangle(grid_rv, lam, 6), s1y_degen_triangle(grid_rv, lam, 6)
    assert transform_lower(first, transform_lower(second, b)) == b
    assert transform_lower(second, transform_lower(first, b)) == b
    assert transform_upper(second, transform_upper(first, b)) == b
    assert transform_upper(first, transform_upper(second, b)) == b


def test_perturbed_triangle_breaks_orthogonality():
    rv = Geometric(Fraction(1, 3))
    second, first = s2y_triangle(rv, 6), s1y_triangle(rv, 6)
    builder = ReportBuilder('perturbed')
    check_orthogonality(second.with_entry(4, 2, second[4, 2] + 1), first, builder, 'probabilistic')
    report = builder.build()
    assert report.passed is False
    assert report.failure.indices['n'] == 4


def test_kind_properties():
    assert Kind('S1YL').degenerate and Kind('S1YL').first_kind
    assert not Kind.S2Y.degenerate and not Kind.S2Y.first_kind
    assert isinstance(Triangle.identity(2), Triangle)
