"""Asymptotic rate bounds, rate-gap estimates, and positivity thresholds.

Rates are in bits per channel use, in the regime where the number of
subblocks grows without bound while the subblock length ``L`` and the weight
parameter ``w_s`` stay fixed.  Throughout, ``delta`` is the relative minimum
distance and ``omega = w_s / L`` the relative weight.

Naming scheme for the three code families compared here:

* ``cwc``  -- constant-weight codes (weight fixed per codeword),
* ``cscc`` -- constant-subblock-composition codes (weight fixed per subblock),
* ``hwc``  -- heavy-weight codes (weight at least a threshold per codeword),
* ``secc`` -- subblock energy-constrained codes (weight at least a threshold
  per subblock).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .combinatorics import binary_entropy, binomial, binomial_tail_sum, log2_count
from .errors import InternalConsistencyError, ParameterError
from .finite_bounds import LOWER, UPPER

__all__ = [
    "GAP_PAIRS",
    "OK",
    "PROVEN_ZERO",
    "UNDEFINED",
    "RateValue",
    "alpha_gv_cwc",
    "alpha_gv_unconstrained",
    "alpha_sp_cwc",
    "delta_star",
    "finite_length_rate_offset",
    "gamma_gv",
    "gamma_gv_terms",
    "gamma_sp",
    "gamma_sp_simplified",
    "gap_cwc_cscc_lb",
    "gap_cwc_cscc_sweep",
    "gap_cwc_cscc_zero_limit",
    "gap_hwc_secc_lb",
    "gap_hwc_secc_sweep",
    "gap_hwc_secc_zero_limit",
    "gap_secc_cscc_lb",
    "gap_secc_cscc_sweep",
    "gap_secc_cscc_zero_limit",
    "gap_zero_boundary",
    "rate_penalty_r",
    "sigma_gv",
    "sigma_sp",
    "threshold_boundary_fn",
    "threshold_root",
]

# Flags attached to sweep results.
OK = "ok"
PROVEN_ZERO = "proven-zero"
UNDEFINED = "undefined"

# The three rate-gap comparisons with a positivity threshold.
GAP_PAIRS = ("cwc-cscc", "hwc-secc", "secc-cscc")


@dataclass(frozen=True)
class RateValue:
    """An asymptotic rate bound, clamped to the feasible interval [0, 1].

    Clamping is exact in both directions: a lower bound below zero carries no
    information beyond rate >= 0, and a packing-style upper bound below zero
    certifies that no positive-rate family exists, i.e. the rate is zero.
    """

    bits_per_use: float
    direction: str

    def __post_init__(self) -> None:
        if self.direction not in (LOWER, UPPER):
            raise ParameterError(f"unknown rate direction {self.direction!r}")
        if not 0.0 <= self.bits_per_use <= 1.0 or math.isnan(self.bits_per_use):
            raise InternalConsistencyError(
                f"rate {self.bits_per_use!r} escaped the [0, 1] clamp"
            )


def _clamp01(x: float) -> float:
    return min(1.0, max(0.0, x))


def _check_delta(delta: float, *, positive: bool = False) -> None:
    if math.isnan(delta) or delta < 0.0 or delta > 1.0:
        raise ParameterError(f"relative distance {delta!r} outside [0, 1]")
    if positive and delta == 0.0:
        raise ParameterError("relative distance must be positive here")


def _check_subblock(L: int, w_s: int, *, proper: bool) -> None:
    # proper means 0 < w_s < L, required whenever both symbol values must
    # actually occur inside a subblock.
    if not isinstance(L, int) or not isinstance(w_s, int):
        raise ParameterError("subblock length and weight must be integers")
    if L < 1:
        raise ParameterError(f"subblock length {L} must be at least 1")
    lo = 1 if proper else 0
    hi = L - 1 if proper else L
    if not lo <= w_s <= hi:
        raise ParameterError(f"subblock weight {w_s} outside [{lo}, {hi}] for L={L}")


def delta_star(omega: float) -> float:
    """Critical relative distance 2*omega*(1-omega).

    Constant-weight rates at relative weight omega (and everything dominated
    by them) are zero at and beyond this point.
    """
    if math.isnan(omega) or not 0.0 <= omega <= 1.0:
        raise ParameterError(f"relative weight {omega!r} outside [0, 1]")
    return 2.0 * omega * (1.0 - omega)


# ---------------------------------------------------------------------------
# Unconstrained and constant-weight rates


def alpha_gv_unconstrained(delta: float) -> RateValue:
    """Achievability bound 1 - h(delta) for unconstrained binary codes.

    Beyond delta = 1/2 the true rate is zero, so the bound returned there
    is the exact value 0.
    """
    _check_delta(delta)
    if delta >= 0.5:
        return RateValue(0.0, LOWER)
    return RateValue(_clamp01(1.0 - binary_entropy(delta)), LOWER)


def alpha_gv_cwc(delta: float, omega: float) -> RateValue:
    """Achievability bound for constant-weight codes at relative weight omega.

    h(w) - w*h(delta/2w) - (1-w)*h(delta/2(1-w)); returns the exact value 0
    for delta >= 2*omega*(1-omega), where the constant-weight rate vanishes.
    """
    _check_delta(delta)
    if not 0.0 < omega < 1.0:
        raise ParameterError(f"relative weight {omega!r} must lie strictly in (0, 1)")
    if delta >= delta_star(omega):
        return RateValue(0.0, LOWER)
    val = (
        binary_entropy(omega)
        - omega * binary_entropy(delta / (2.0 * omega))
        - (1.0 - omega) * binary_entropy(delta / (2.0 * (1.0 - omega)))
    )
    return RateValue(_clamp01(val), LOWER)


def alpha_sp_cwc(delta: float, omega: float) -> RateValue:
    """Packing upper bound for constant-weight codes at relative weight omega.

    Same shape as the achievability bound with half the distance budget per
    entropy term.  Only defined while both entropy arguments stay below 1,
    i.e. for delta < 4*min(omega, 1-omega).
    """
    _check_delta(delta)
    if not 0.0 < omega < 1.0:
        raise ParameterError(f"relative weight {omega!r} must lie strictly in (0, 1)")
    if delta >= 4.0 * min(omega, 1.0 - omega):
        raise ParameterError(
            f"packing bound undefined at delta={delta!r} for omega={omega!r}"
        )
    val = (
        binary_entropy(omega)
        - omega * binary_entropy(delta / (4.0 * omega))
        - (1.0 - omega) * binary_entropy(delta / (4.0 * (1.0 - omega)))
    )
    return RateValue(_clamp01(val), UPPER)


# ---------------------------------------------------------------------------
# Constant-subblock-composition rates


def _check_composition_domain(L: int, delta: float, w_s: int) -> None:
    _check_subblock(L, w_s, proper=True)
    _check_delta(delta, positive=True)
    ds = delta_star(w_s / L)
    if delta >= ds:
        raise ParameterError(
            f"relative distance {delta!r} not below the rate-zero point {ds!r}"
        )


def _interpolated_ball_exponent(L: int, w_s: int, u: float) -> float:
    # Log of the dominant per-subblock flip-count term, with the fractional
    # part of u split between floor(u) and ceil(u) flips.
    lo = math.floor(u)
    hi = math.ceil(u)
    weight_hi = 1.0 + u - hi
    weight_lo = hi - u
    total = 0.0
    for side in (w_s, L - w_s):
        c_lo = binomial(side, lo)
        c_hi = binomial(side, hi)
        if c_lo <= 0 or c_hi <= 0:
            raise InternalConsistencyError(
                f"flip count {u!r} escaped its domain for L={L}, w_s={w_s}"
            )
        total += weight_lo * log2_count(c_lo) + weight_hi * log2_count(c_hi)
    return total / L


def gamma_gv_terms(L: int, delta: float, w_s: int) -> tuple[float, float]:
    """Both candidates for the tuple-count exponent in the achievability bound.

    Returns (cap_term, composition_term): the first counts per-subblock flip
    values by their range, the second counts weak compositions of the total
    flip budget.  The bound subtracts the smaller of the two.
    """
    _check_composition_domain(L, delta, w_s)
    cap_term = log2_count(min(w_s, L - w_s) + 1) / L
    half = delta * L / 2.0
    composition_term = (1.0 / L + delta / 2.0) * binary_entropy(1.0 / (1.0 + half))
    return cap_term, composition_term


def gamma_gv(L: int, delta: float, w_s: int) -> RateValue:
    """Achievability bound for constant-subblock-composition codes.

    Defined for 0 < delta < 2*(w_s/L)*(1 - w_s/L); raises otherwise.  Use the
    sweep helpers for grid evaluation across the full distance range.
    """
    _check_composition_domain(L, delta, w_s)
    if L == 2:
        return RateValue(_clamp01(0.5 * (1.0 - binary_entropy(delta))), LOWER)
    u = delta * L / 2.0
    val = (
        log2_count(binomial(L, w_s)) / L
        - _interpolated_ball_exponent(L, w_s, u)
        - min(gamma_gv_terms(L, delta, w_s))
    )
    return RateValue(_clamp01(val), LOWER)


def gamma_sp(L: int, delta: float, w_s: int) -> RateValue:
    """Packing upper bound for constant-subblock-composition codes.

    Defined for 0 < delta < 2*(w_s/L)*(1 - w_s/L).  On the sub-range
    delta < 4/L the value is cross-checked against the simplified closed
    form; disagreement indicates an implementation bug.
    """
    _check_composition_domain(L, delta, w_s)
    u = delta * L / 4.0
    val = (
        log2_count(binomial(L, w_s)) / L
        - _interpolated_ball_exponent(L, w_s, u)
        - binary_entropy(math.ceil(u) - u) / L
    )
    if delta < 4.0 / L:
        simple = _gamma_sp_simplified_value(L, delta, w_s)
        if abs(val - simple) > 1e-9:
            raise InternalConsistencyError(
                f"packing-bound forms disagree at L={L}, delta={delta!r}, "
                f"w_s={w_s}: {val!r} vs {simple!r}"
            )
    return RateValue(_clamp01(val), UPPER)


def _gamma_sp_simplified_value(L: int, delta: float, w_s: int) -> float:
    return (
        log2_count(binomial(L, w_s)) / L
        - (delta / 4.0) * math.log2(w_s * (L - w_s))
        - binary_entropy(delta * L / 4.0) / L
    )


def gamma_sp_simplified(L: int, delta: float, w_s: int) -> RateValue:
    """Closed form of the packing bound, valid only for delta < 4/L."""
    _check_composition_domain(L, delta, w_s)
    if delta >= 4.0 / L:
        raise ParameterError(
            f"simplified packing form needs delta < 4/L, got {delta!r} at L={L}"
        )
    return RateValue(_clamp01(_gamma_sp_simplified_value(L, delta, w_s)), UPPER)


# ---------------------------------------------------------------------------
# Subblock energy-constrained rates


def sigma_gv(L: int, delta: float, w_s: int) -> RateValue:
    """Achievability bound for codes with weight >= w_s in every subblock.

    (1/L)*log2(sum_{j>=w_s} C(L,j)) - h(delta) for delta < 1/2.  The naive
    formula would stay positive past delta = 1/2 where the true rate is
    already zero, because the covering-ball exponent saturates at 1 rather
    than following h(delta); the bound is therefore hard-cut to the exact
    value 0 from 1/2 on.
    """
    _check_subblock(L, w_s, proper=False)
    _check_delta(delta)
    if delta >= 0.5:
        return RateValue(0.0, LOWER)
    val = log2_count(binomial_tail_sum(L, w_s)) / L - binary_entropy(delta)
    return RateValue(_clamp01(val), LOWER)


def sigma_sp(L: int, delta: float, w_s: int) -> RateValue:
    """Packing upper bound for codes with weight >= w_s in every subblock.

    Defined for 0 < delta < min(2*(w_s/L)*(1-w_s/L), 4/L); raises outside.
    """
    _check_subblock(L, w_s, proper=True)
    _check_delta(delta, positive=True)
    limit = min(delta_star(w_s / L), 4.0 / L)
    if delta >= limit:
        raise ParameterError(
            f"packing bound undefined at delta={delta!r}; needs delta < {limit!r}"
        )
    val = (
        log2_count(binomial_tail_sum(L, w_s)) / L
        - binary_entropy(L * delta / 4.0) / L
        - (delta / 4.0) * math.log2((L - w_s) * (w_s + 1))
    )
    return RateValue(_clamp01(val), UPPER)


# ---------------------------------------------------------------------------
# Rate penalties


def rate_penalty_r(L: int, w_s: int) -> float:
    """Capacity-gap ceiling h(w_s/L) - (1/L)*log2 C(L, w_s).

    Nonnegative for all valid inputs; it is the zero-distance limit of the
    constant-weight versus constant-subblock-composition gap bound.
    """
    _check_subblock(L, w_s, proper=False)
    return binary_entropy(w_s / L) - log2_count(binomial(L, w_s)) / L


def composition_rate(L: int, w_s: int) -> float:
    """(1/L)*log2 C(L, w_s): the zero-distance rate with fixed subblock weight."""
    _check_subblock(L, w_s, proper=False)
    return log2_count(binomial(L, w_s)) / L


def tail_rate(L: int, w_s: int) -> float:
    """(1/L)*log2 of the weight >= w_s count: zero-distance rate with a floor."""
    _check_subblock(L, w_s, proper=False)
    return log2_count(binomial_tail_sum(L, w_s)) / L


def gap_cwc_cscc_lb(L: int, delta: float, w_s: int) -> float:
    """Lower bound on the rate lost by fixing the composition per subblock
    instead of per codeword: [cwc achievability - cscc packing]^+."""
    a = alpha_gv_cwc(delta, w_s / L).bits_per_use
    g = gamma_sp(L, delta, w_s).bits_per_use
    return max(0.0, a - g)


def gap_hwc_secc_lb(L: int, delta: float, w_s: int) -> float:
    """Lower bound on the rate lost by enforcing the minimum weight per
    subblock instead of per codeword: [hwc achievability - secc packing]^+.

    Codewords of relative weight at least 1/2 achieve the same asymptotic
    rate as constant relative weight exactly w_s/L, so for w_s >= L/2 the
    heavy-codeword reference rate is the constant-weight bound at w_s/L;
    below L/2 it is the unconstrained point omega = 1/2.  At w_s = L/2 this
    gap also lower-bounds the constant-weight versus subblock-energy gap.
    """
    s = sigma_sp(L, delta, w_s).bits_per_use
    omega = w_s / L if 2 * w_s >= L else 0.5
    a = alpha_gv_cwc(delta, omega).bits_per_use
    return max(0.0, a - s)


def gap_secc_cscc_lb(L: int, delta: float, w_s: int) -> float:
    """Lower bound on the rate gained by letting subblock weights float above
    w_s instead of pinning them: [secc achievability - cscc packing]^+."""
    s = sigma_gv(L, delta, w_s).bits_per_use
    g = gamma_sp(L, delta, w_s).bits_per_use
    return max(0.0, s - g)


def gap_cwc_cscc_zero_limit(L: int, w_s: int) -> float:
    """Zero-distance limit of the cwc-vs-cscc gap bound: rate_penalty_r."""
    _check_subblock(L, w_s, proper=True)
    return rate_penalty_r(L, w_s)


def gap_hwc_secc_zero_limit(L: int, w_s: int) -> float:
    """Zero-distance limit of the hwc-vs-secc gap bound."""
    _check_subblock(L, w_s, proper=True)
    tail = log2_count(binomial_tail_sum(L, w_s)) / L
    if 2 * w_s >= L:
        return binary_entropy(w_s / L) - tail
    return 1.0 - tail


def gap_secc_cscc_zero_limit(L: int, w_s: int) -> float:
    """Zero-distance limit of the secc-vs-cscc gap bound."""
    _check_subblock(L, w_s, proper=True)
    return (
        log2_count(binomial_tail_sum(L, w_s)) - log2_count(binomial(L, w_s))
    ) / L


def gap_zero_boundary(pair: str, L: int, w_s: int) -> float:
    """Distance from which the true rate gap is provably exactly zero.

    For the cwc-cscc pair (any weight), and for the other pairs at
    w_s >= L/2, both rates vanish from 2*(w_s/L)*(1-w_s/L) on.  For the
    others at w_s < L/2 the reference rate only vanishes from 1/2 on.
    """
    if pair not in GAP_PAIRS:
        raise ParameterError(f"unknown gap pair {pair!r}; expected one of {GAP_PAIRS}")
    _check_subblock(L, w_s, proper=True)
    if pair == "cwc-cscc" or 2 * w_s >= L:
        return delta_star(w_s / L)
    return 0.5


def _sweep(
    L: int,
    delta: float,
    w_s: int,
    *,
    strict: Callable[[int, float, int], float],
    zero_limit: Callable[[int, int], float],
    valid_end: float,
    zero_start: float,
) -> tuple[float, str]:
    _check_subblock(L, w_s, proper=True)
    _check_delta(delta)
    if delta == 0.0:
        return zero_limit(L, w_s), OK
    if delta < valid_end:
        return strict(L, delta, w_s), OK
    if delta >= zero_start:
        return 0.0, PROVEN_ZERO
    return math.nan, UNDEFINED


def gap_cwc_cscc_sweep(L: int, delta: float, w_s: int) -> tuple[float, str]:
    """Grid-friendly cwc-vs-cscc gap bound: (value, flag).

    Flags: "ok" inside the formula's validity range (delta = 0 reports the
    limit value), "proven-zero" where the true gap is exactly zero, and
    "undefined" (value NaN) where neither applies.
    """
    ds = delta_star(w_s / L) if 0 < w_s < L else 0.0
    return _sweep(
        L,
        delta,
        w_s,
        strict=gap_cwc_cscc_lb,
        zero_limit=gap_cwc_cscc_zero_limit,
        valid_end=ds,
        zero_start=ds,
    )


def gap_hwc_secc_sweep(L: int, delta: float, w_s: int) -> tuple[float, str]:
    """Grid-friendly hwc-vs-secc gap bound: (value, flag); see the cwc-cscc
    sweep for the flag convention."""
    if 0 < w_s < L:
        ds = delta_star(w_s / L)
        valid_end = min(ds, 4.0 / L)
        zero_start = ds if 2 * w_s >= L else 0.5
    else:
        valid_end = zero_start = 0.0
    return _sweep(
        L,
        delta,
        w_s,
        strict=gap_hwc_secc_lb,
        zero_limit=gap_hwc_secc_zero_limit,
        valid_end=valid_end,
        zero_start=zero_start,
    )


def gap_secc_cscc_sweep(L: int, delta: float, w_s: int) -> tuple[float, str]:
    """Grid-friendly secc-vs-cscc gap bound: (value, flag); see the cwc-cscc
    sweep for the flag convention."""
    if 0 < w_s < L:
        ds = delta_star(w_s / L)
        zero_start = ds if 2 * w_s >= L else 0.5
    else:
        ds = zero_start = 0.0
    return _sweep(
        L,
        delta,
        w_s,
        strict=gap_secc_cscc_lb,
        zero_limit=gap_secc_cscc_zero_limit,
        valid_end=ds,
        zero_start=zero_start,
    )


# ---------------------------------------------------------------------------
# Positivity thresholds


def threshold_boundary_fn(pair: str, L: int) -> Callable[[float], float]:
    """The function whose smallest positive root bounds where the gap stays
    provably positive, for even L at the half-weight point w_s = L/2.

    Each function is positive at 0+ and continuous; the root finder scans for
    its first sign change.
    """
    if pair not in GAP_PAIRS:
        raise ParameterError(f"unknown gap pair {pair!r}; expected one of {GAP_PAIRS}")
    if not isinstance(L, int) or L < 2 or L % 2:
        raise ParameterError(f"threshold functions need even L >= 2, got {L!r}")
    central = log2_count(binomial(L, L // 2)) / L
    tail = log2_count(binomial_tail_sum(L, L // 2)) / L
    log_half_L = math.log2(L / 2.0)

    if pair == "cwc-cscc":

        def f(delta: float) -> float:
            return (
                1.0
                - binary_entropy(delta)
                - central
                + (delta / 2.0) * log_half_L
                + binary_entropy(delta * L / 4.0) / L
            )

    elif pair == "secc-cscc":

        def f(delta: float) -> float:
            return (
                tail
                - binary_entropy(delta)
                - central
                + (delta / 2.0) * log_half_L
                + binary_entropy(delta * L / 4.0) / L
            )

    else:  # hwc-secc
        log_quarter = math.log2(L * (L + 2) / 4.0)

        def f(delta: float) -> float:
            return (
                1.0
                - binary_entropy(delta)
                - tail
                + binary_entropy(L * delta / 4.0) / L
                + (delta / 4.0) * log_quarter
            )

    return f


_SCAN_POINTS = 4096


def threshold_root(pair: str, L: int, *, tol: float = 1e-12, max_iter: int = 200) -> float:
    """Smallest positive root of the pair's boundary function at w_s = L/2.

    The gap bound is strictly positive for all distances below the returned
    value.  Roots lie in (0, 1/L) for the cwc-cscc and secc-cscc pairs and in
    (0, 2/L) for hwc-secc (even L >= 4; L = 2 shares the same functions).
    Raises if no sign change exists on the scan range, which would contradict
    the bracketing argument behind the threshold.
    """
    f = threshold_boundary_fn(pair, L)
    span = (2.0 if pair == "hwc-secc" else 1.0) / L
    lo, f_lo = 1e-12, f(1e-12)
    if f_lo <= 0.0:
        raise InternalConsistencyError(
            f"boundary function for {pair!r} not positive at 0+ for L={L}"
        )
    hi = math.nan
    for k in range(1, _SCAN_POINTS + 1):
        x = span * k / _SCAN_POINTS
        if f(x) <= 0.0:
            hi = x
            break
        lo = x
    if math.isnan(hi):
        raise ParameterError(
            f"no sign change for {pair!r} on (0, {span!r}] at L={L}"
        )
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if f(mid) <= 0.0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


# ---------------------------------------------------------------------------
# Finite-length illustration


def finite_length_rate_offset(m: int, L: int, w_s: int) -> float:
    """Normalized log-ratio of the subblock-constrained space to the
    codeword-constrained space with the same total weight.

    (1/(m*L)) * log2( C(L, w_s)^m / C(m*L, m*w_s) ), always <= 0; its
    magnitude shrinks as L grows with w_s/L fixed.  A numerical
    illustration of the vanishing space penalty, not a proof.
    """
    if not isinstance(m, int) or m < 1:
        raise ParameterError(f"subblock count {m!r} must be a positive integer")
    _check_subblock(L, w_s, proper=False)
    per_subblock = binomial(L, w_s) ** m
    whole = binomial(m * L, m * w_s)
    return (log2_count(per_subblock) - log2_count(whole)) / (m * L)
