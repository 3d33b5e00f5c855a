"""Bounds and exact sizes for binary codes with per-subblock weight constraints.

Two code families are covered: constant-subblock-composition codes (every
length-L subblock has weight exactly w_s) and subblock energy-constrained
codes (every subblock has weight at least w_s).  The package computes exact
optimal sizes for small instances, finite-length bounds from counting
arguments, asymptotic rate bounds, and the gaps between the constrained and
unconstrained rate regions.
"""

from .asymptotic import (
    GAP_PAIRS,
    RateValue,
    alpha_gv_cwc,
    alpha_gv_unconstrained,
    alpha_sp_cwc,
    composition_rate,
    delta_star,
    finite_length_rate_offset,
    gamma_gv,
    gamma_sp,
    gap_cwc_cscc_lb,
    gap_cwc_cscc_sweep,
    gap_hwc_secc_lb,
    gap_hwc_secc_sweep,
    gap_secc_cscc_lb,
    gap_secc_cscc_sweep,
    gap_zero_boundary,
    rate_penalty_r,
    sigma_gv,
    sigma_sp,
    tail_rate,
    threshold_boundary_fn,
    threshold_root,
)
from .combinatorics import binary_entropy, binomial, binomial_tail_sum, log2_count
from .errors import (
    BudgetExceededError,
    InternalConsistencyError,
    ParameterError,
    ResourceCapError,
    SubblockCodesError,
)
from .exact_oracle import OracleResult, exact_size, proven_bracket, solve, verify_code
from .finite_bounds import (
    BoundResult,
    best_bounds,
    candidate_bounds,
    cscc_gv_lower,
    cscc_sp_upper,
    secc_gv_lower,
    secc_sp_upper,
)
from .spaces import (
    CodeParams,
    cscc_ball_size,
    cscc_space_size,
    enumerate_space,
    secc_avg_ball_size,
    secc_ball_size_at,
    secc_min_ball_size,
    secc_space_size,
    space_size,
    word_to_str,
)

__version__ = "0.1.0"

__all__ = [
    "BoundResult",
    "BudgetExceededError",
    "CodeParams",
    "GAP_PAIRS",
    "InternalConsistencyError",
    "OracleResult",
    "ParameterError",
    "RateValue",
    "ResourceCapError",
    "SubblockCodesError",
    "alpha_gv_cwc",
    "alpha_gv_unconstrained",
    "alpha_sp_cwc",
    "best_bounds",
    "binary_entropy",
    "binomial",
    "binomial_tail_sum",
    "candidate_bounds",
    "composition_rate",
    "cscc_ball_size",
    "cscc_gv_lower",
    "cscc_sp_upper",
    "cscc_space_size",
    "delta_star",
    "enumerate_space",
    "exact_size",
    "finite_length_rate_offset",
    "gamma_gv",
    "gamma_sp",
    "gap_cwc_cscc_lb",
    "gap_cwc_cscc_sweep",
    "gap_hwc_secc_lb",
    "gap_hwc_secc_sweep",
    "gap_secc_cscc_lb",
    "gap_secc_cscc_sweep",
    "gap_zero_boundary",
    "log2_count",
    "proven_bracket",
    "rate_penalty_r",
    "secc_avg_ball_size",
    "secc_ball_size_at",
    "secc_gv_lower",
    "secc_min_ball_size",
    "secc_sp_upper",
    "secc_space_size",
    "sigma_gv",
    "sigma_sp",
    "solve",
    "space_size",
    "tail_rate",
    "threshold_boundary_fn",
    "threshold_root",
    "verify_code",
    "word_to_str",
]
