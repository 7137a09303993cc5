"""Numerical verification toolkit for the elementary prime number theorem:
arithmetic functions, Chebyshev tables, divisor-sum identities,
explicit-constant asymptotics, and the Selberg symmetry machinery.
"""

from .arith import (
    Factorization,
    divisors,
    factorize,
    is_prime,
    mangoldt,
    moebius,
    multiplicity,
    radical,
)
from .asymptotics import (
    EULER_GAMMA,
    BigOClaim,
    BigOReport,
    InequalityCheck,
    SampleGrid,
    check_claim,
    elementary_inequalities,
    estimate_constant,
    euler_gamma_estimate,
    floor_galois_check,
    identity_catalog,
    natfloor,
    natfloor_shift_check,
)
from .identities import (
    TabulatedFunction,
    divisor_pair_sum_lhs,
    divisor_pair_sum_rhs,
    divisor_sum,
    divisor_sum_reflected,
    moebius_divisor_sum,
    moebius_divisor_sums,
    moebius_invert,
    partial_summation_lhs,
    partial_summation_rhs,
    triangle_sum_lhs,
    triangle_sum_rhs,
)
from .selberg import (
    R_SLACK_CONSTANT,
    SELBERG_SUP_CONSTANT,
    IterationTrace,
    PntRow,
    iterate_bound,
    pnt_ratio_table,
    r_inequality_check,
    selberg_check,
    selberg_lhs,
)
from .tables import (
    ChebyshevTables,
    MemoryBudgetError,
    WindowScan,
    build_tables,
    chebyshev_B,
    chebyshev_window_scan,
    pi,
    psi,
    r_error,
    theta,
)

__version__ = "0.1.0"
