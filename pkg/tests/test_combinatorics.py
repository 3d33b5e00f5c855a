"""Exact counting primitives: binomials, polynomials, entropy, log2 of counts."""

import math
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from subblock_codes.combinatorics import (
    binary_entropy,
    binomial,
    binomial_tail_sum,
    ceil_div,
    ceil_ratio,
    floor_ratio,
    log2_count,
    poly_mul_truncated,
    poly_power_truncated,
    poly_prefix_sum,
    weak_composition_count,
)
from subblock_codes.errors import ParameterError


def test_binomial_frozen_values():
    assert binomial(60, 30) == 118264581564861424
    assert binomial(0, 0) == 1
    assert binomial(12, 5) == 792
    assert binomial(5, 7) == 0
    assert binomial(7, -1) == 0


def test_binomial_pascal_and_symmetry_exhaustive():
    # n <= 64 per the module contract
    for n in range(65):
        for k in range(n + 1):
            assert binomial(n, k) == binomial(n, n - k)
            if 0 < k <= n:
                assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_binomial_tail_sum_brute():
    for n in range(13):
        for k in range(n + 2):
            expect = sum(binomial(n, j) for j in range(k, n + 1))
            assert binomial_tail_sum(n, k) == expect


def test_weak_composition_count_brute():
    # all t <= 6, m <= 5: tuples of m non-negative integers with sum <= t
    for t in range(7):
        for m in range(1, 6):
            expect = sum(1 for tup in product(range(t + 1), repeat=m) if sum(tup) <= t)
            assert weak_composition_count(t, m) == expect


@settings(max_examples=1000, deadline=None, derandomize=True)
@given(st.data())
def test_balanced_product_dominates(data):
    # a product of binomials with fixed index sum is maximized by the most
    # balanced split (log-concavity of n -> binomial(n, k) in k)
    m = data.draw(st.integers(1, 6))
    n = data.draw(st.integers(1, 12))
    ks = data.draw(st.lists(st.integers(0, n), min_size=m, max_size=m))
    z = sum(ks)
    m1 = m * ceil_div(z, m) - z
    lo, hi = z // m, ceil_div(z, m)
    left = math.prod(binomial(n, k) for k in ks)
    right = binomial(n, lo) ** m1 * binomial(n, hi) ** (m - m1)
    assert left <= right


def test_window_product_strictly_increasing():
    # binomial(w,k)*binomial(L-w,k) grows strictly while k <= w(L-w)/L
    for L in range(3, 25):
        for w in range(1, L):
            k = 1
            while k * L <= w * (L - w):
                assert binomial(w, k) * binomial(L - w, k) > binomial(w, k - 1) * binomial(L - w, k - 1)
                k += 1


def test_poly_ops_against_brute_force():
    a = [1, 3, 0, 2]
    b = [2, 1, 4]
    full = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            full[i + j] += x * y
    for deg in range(len(full) + 2):
        got = poly_mul_truncated(a, b, deg)
        assert list(got) == full[: deg + 1]
    # powers: ((1 + z)^n truncated) must reproduce binomials
    p = [1, 1]
    for n in range(9):
        got = poly_power_truncated(p, n, n)
        assert list(got) == [binomial(n, k) for k in range(n + 1)]
    assert poly_prefix_sum([1, 2, 3], 1) == 3
    assert poly_prefix_sum([1, 2, 3], 10) == 6
    assert poly_prefix_sum([1, 2, 3], -1) == 0


def test_rational_rounding():
    assert ceil_ratio(Fraction(49, 25)) == 2
    assert floor_ratio(Fraction(49, 25)) == 1
    assert ceil_ratio(Fraction(4, 2)) == 2
    assert floor_ratio(Fraction(4, 2)) == 2
    assert ceil_div(7, 2) == 4
    assert ceil_div(8, 2) == 4


def test_binary_entropy_frozen_and_symmetric():
    assert binary_entropy(0.0) == 0.0
    assert binary_entropy(1.0) == 0.0
    assert binary_entropy(0.5) == 1.0
    # printed reference value is truncated, not rounded, at the 10th decimal
    assert abs(binary_entropy(0.11) - 0.4999159581) < 1e-10
    for p in (0.01, 0.2, 0.37, 0.44):
        assert binary_entropy(p) == pytest.approx(binary_entropy(1 - p), abs=1e-15)
    with pytest.raises(ParameterError):
        binary_entropy(-0.1)
    with pytest.raises(ParameterError):
        binary_entropy(1.1)


def test_log2_count_precision():
    for n in (1, 2, 3, 1000, 10**6):
        assert log2_count(n) == pytest.approx(math.log2(n), rel=1e-14)
    # huge counts: check against exact bit-length bracketing
    big = binomial(300, 150)
    val = log2_count(big)
    assert big.bit_length() - 1 <= val <= big.bit_length()
    # relative error <= 1e-12 against a Fraction-scaled reference
    scaled = Fraction(big, 1 << (big.bit_length() - 60))
    ref = math.log2(float(scaled)) + (big.bit_length() - 60)
    assert val == pytest.approx(ref, rel=1e-12)
