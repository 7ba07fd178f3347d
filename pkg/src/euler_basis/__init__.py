from euler_basis.poly import (
    Poly,
    format_poly,
    forward_difference,
    forward_difference_via_derivatives,
    parse_poly,
    poly_sum,
)
from euler_basis.euler import (
    METHODS,
    euler_poly,
    euler_polynomials,
    expand_in_euler_basis,
    reconstruct,
    verify_euler_addition,
    verify_euler_roundtrip,
)
