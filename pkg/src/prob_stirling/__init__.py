from prob_stirling.generating import (
    cgf_series,
    e_bar_series,
    e_series,
    fy_degen_series,
    fy_series,
    moment_series,
)
from prob_stirling.triangles import (
    adell_benyi_s,
    adell_benyi_triangle,
    first_kind_triangle,
    s1y_degen_triangle,
    s1y_triangle,
    s2y_degen_triangle,
    s2y_triangle,
    second_kind_triangle,
    transform_lower,
    transform_upper,
)
from prob_stirling.moments import (
    CumulantSequence,
    PartialSumMoments,
    cumulants,
    partial_sum_moments,
    s2y_degen_via_moments,
    s2y_via_moments,
)
from prob_stirling.closed_forms import (
    ClosedFormResult,
    Kind,
    closed_form,
    closed_form_variants,
    geometric_orthogonality,
    inverse_closed_form,
)
from prob_stirling.verification import (
    check_orthogonality,
    normal_degenerate_vanishing,
    vanishing_identities,
    verify_closed_forms,
    verify_oracles,
    verify_orthogonality,
    verify_vanishing,
)
