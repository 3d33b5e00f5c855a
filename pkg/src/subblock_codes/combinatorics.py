"""Exact big-integer combinatorial primitives and entropy/log utilities.

All counting here is arbitrary-precision and exact; floating point enters
only when a count is converted to a rate via ``log2_count`` or through the
entropy function. Polynomials are plain coefficient lists (index = distance
contribution), multiplied by schoolbook convolution, which is plenty at the
degrees this package ever sees.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import ParameterError

# Type aliases used across the package.
ExactCount = int
Ratio = Fraction
CountPolynomial = list[int]

# Tolerance for arguments that drift outside [0, 1] by floating rounding.
_DOMAIN_SLACK = 1e-12


def binomial(n: int, k: int) -> ExactCount:
    """Binomial coefficient C(n, k); 0 whenever k < 0 or k > n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def binomial_tail_sum(n: int, k: int) -> ExactCount:
    """Sum of C(n, j) for j from max(k, 0) to n."""
    if n < 0:
        return 0
    return sum(math.comb(n, j) for j in range(max(k, 0), n + 1))


def binary_entropy(p: float) -> float:
    """Binary entropy h(p) in bits, with h(0) = h(1) = 0.

    Arguments within 1e-12 outside [0, 1] are clamped (they arise from
    expressions like h(L*delta/4) evaluated exactly at the domain edge);
    anything further out is a domain error.
    """
    if p < 0.0:
        if p < -_DOMAIN_SLACK:
            raise ParameterError(f"entropy argument {p!r} outside [0, 1]")
        p = 0.0
    elif p > 1.0:
        if p > 1.0 + _DOMAIN_SLACK:
            raise ParameterError(f"entropy argument {p!r} outside [0, 1]")
        p = 1.0
    if p == 0.0 or p == 1.0:
        return 0.0
    return -(p * math.log2(p) + (1.0 - p) * math.log2(1.0 - p))


def log2_count(n: int) -> float:
    """log2 of a positive count, accurate to ~1 ulp at any size.

    Splits the integer into its bit length and a 64-bit leading mantissa, so
    the result never degrades with magnitude (relative error stays far below
    1e-12 even for counts with millions of bits).
    """
    if n <= 0:
        raise ParameterError(f"log2 of non-positive count {n!r}")
    bits = n.bit_length()
    if bits <= 64:
        return math.log2(n)
    shift = bits - 64
    return math.log2(n >> shift) + shift


def poly_trim(p: CountPolynomial) -> CountPolynomial:
    """Strip trailing zeros; the zero polynomial normalizes to [0]."""
    last = 0
    for i, c in enumerate(p):
        if c:
            last = i
    return list(p[: last + 1]) if p else [0]


def poly_mul_truncated(
    a: CountPolynomial, b: CountPolynomial, max_degree: int
) -> CountPolynomial:
    """Product of two coefficient lists, truncated to degree max_degree."""
    if max_degree < 0:
        raise ParameterError("max_degree must be non-negative")
    out = [0] * (max_degree + 1)
    for i, ai in enumerate(a):
        if i > max_degree:
            break
        if not ai:
            continue
        top = min(len(b) - 1, max_degree - i)
        for j in range(top + 1):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return poly_trim(out)


def poly_power_truncated(
    p: CountPolynomial, m: int, max_degree: int
) -> CountPolynomial:
    """Coefficients 0..max_degree of p(z)**m, exact.

    Repeated truncated convolution; exponents here are the subblock count m,
    and degrees stay bounded by the ball radius, so schoolbook cost is fine.
    """
    if m < 0:
        raise ParameterError("negative polynomial power")
    if max_degree < 0:
        raise ParameterError("max_degree must be non-negative")
    acc: CountPolynomial = [1]
    for _ in range(m):
        acc = poly_mul_truncated(acc, p, max_degree)
    return acc


def poly_prefix_sum(p: CountPolynomial, through_degree: int) -> ExactCount:
    """Sum of coefficients with index <= through_degree (negative -> 0)."""
    if through_degree < 0:
        return 0
    return sum(p[: through_degree + 1])


def weak_composition_count(t: int, m: int) -> ExactCount:
    """Number of tuples (u_1..u_m) of non-negative integers with sum <= t.

    Equals C(t + m, m): append a slack part to turn the inequality into an
    equality over m + 1 parts.
    """
    if t < 0:
        return 0
    if m < 0:
        raise ParameterError("negative tuple length")
    return math.comb(t + m, m)


def ceil_div(num: int, den: int) -> ExactCount:
    """Exact ceiling of num/den for positive den."""
    if den <= 0:
        raise ParameterError("non-positive denominator")
    return -((-num) // den)


def ceil_ratio(r: Fraction) -> ExactCount:
    """Exact ceiling of a rational."""
    return ceil_div(r.numerator, r.denominator)


def floor_ratio(r: Fraction) -> ExactCount:
    """Exact floor of a rational."""
    return r.numerator // r.denominator
