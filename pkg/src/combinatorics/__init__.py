from combinatorics.triangle import Triangle
from combinatorics.stirling import (
    degen_exp_series,
    degen_falling_factorial,
    degen_log_series,
    degen_stirling1,
    degen_stirling1_triangle,
    degen_stirling2,
    degen_stirling2_triangle,
    falling_factorial,
    falling_factorial_coefficients,
    log_degen_exp_series,
    stirling1,
    stirling1_triangle,
    stirling2,
    stirling2_triangle,
)
from combinatorics.frobenius import degen_frobenius_euler, frobenius_euler, frobenius_euler_series
