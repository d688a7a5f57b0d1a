"""Bohnenblust-Hille inequality toolkit: exact norms, coefficient sums and extremal families."""

from ._bhlab import (
    BudgetError,
    Form,
    Polynomial,
    ascent_norm,
    bh_exponent,
    block_sum,
    brute_force_norm,
    constant_table,
    diagonal_polynomial,
    disjointify,
    exact_norm,
    generate,
    interpolation_bound,
    ksz_random,
    ksz_scaling,
    lift_polynomial,
    lp_sum,
    poly_norm,
    poly_restricted_sum,
    r_family,
    a_family,
    random_sparse,
    ratio_report,
    restricted_sum,
    s_family,
    search,
    theorem_upper_bound,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
