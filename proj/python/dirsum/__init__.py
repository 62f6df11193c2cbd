"""Norms, decompositions and summation methods in higher-order weighted Dirichlet spaces.

Points on the unit circle are given as angles in radians throughout.
"""

from ._dirsum import (
    DuplicatePoints,
    Error,
    InvalidArgument,
    InvalidSupport,
    InvariantViolation,
    Measure,
    NonConvergent,
    OutsideDisk,
    ParseError,
    RangeError,
    ScanTooSmall,
    SingularSystem,
    TaylorPoly,
    VariantMismatch,
    WeightArray,
    binom,
    comparison_check,
    converge_dirac,
    converge_weighted,
    counterexample_fn,
    counterexample_report,
    difference_quotient,
    evaluate,
    local_norm,
    modified_taylor,
    mu_norm_sq,
    multi_decompose,
    partial_sum,
    quadrature_norm,
    recursion_build,
    sigma_norm,
    single_point_correction,
    tail_sum,
    validate,
    vandermonde_correct,
)

__version__ = "0.1.0"
