"""Dirichlet convolution sums over the hyperbola xy <= T."""

from ._charsum import (
    BelowRangeError,
    Character,
    VerificationFailure,
    burgess_rhs,
    characters,
    convolution_sum,
    corollary1_bound,
    cover_check,
    decomposition_sum,
    divisor_sum,
    euler_phi,
    family,
    interval_sum,
    max_interval_sum,
    minimum_depth,
    omega1_sum,
    primitive_indices,
    run_cli,
    strip_count,
    sweep,
    theorem1_bound,
    theorem2_bound,
)

__all__ = [
    "BelowRangeError",
    "Character",
    "VerificationFailure",
    "burgess_rhs",
    "characters",
    "convolution_sum",
    "corollary1_bound",
    "cover_check",
    "decomposition_sum",
    "divisor_sum",
    "euler_phi",
    "family",
    "interval_sum",
    "max_interval_sum",
    "minimum_depth",
    "omega1_sum",
    "primitive_indices",
    "run_cli",
    "strip_count",
    "sweep",
    "theorem1_bound",
    "theorem2_bound",
]
