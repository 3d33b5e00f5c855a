"""Word spaces, ball sizes, and enumeration order."""

from fractions import Fraction

import pytest

from subblock_codes.errors import ParameterError, ResourceCapError
from subblock_codes.spaces import (
    CodeParams,
    cscc_ball_size,
    cscc_space_size,
    enumerate_space,
    secc_avg_ball_size,
    secc_ball_size_at,
    secc_min_ball_size,
    secc_pair_count,
    secc_space_size,
    space_size,
    str_to_word,
    word_to_str,
    word_weight_profile,
)


def bits(x: int) -> int:
    return bin(x).count("1")


def block_weights(x: int, m: int, L: int) -> list[int]:
    mask = (1 << L) - 1
    return [bits((x >> (i * L)) & mask) for i in range(m)]


def brute_space(params: CodeParams, kind: str) -> list[int]:
    out = []
    for x in range(1 << (params.m * params.L)):
        ws = block_weights(x, params.m, params.L)
        if kind == "CSCC" and all(a == params.w_s for a in ws):
            out.append(x)
        elif kind == "SECC" and all(a >= params.w_s for a in ws):
            out.append(x)
        elif kind == "CWC" and bits(x) == params.m * params.w_s:
            out.append(x)
        elif kind == "HWC" and bits(x) >= params.m * params.w_s:
            out.append(x)
        elif kind == "ALL":
            out.append(x)
    return out


# --- paper worked examples -------------------------------------------------


def test_single_subblock_ball_examples():
    quad = CodeParams(1, 4, 1, 2)
    assert secc_ball_size_at((3,), quad, 1) == 5
    assert secc_ball_size_at((2,), quad, 1) == 3
    assert secc_ball_size_at((2,), quad, 0) == 1
    assert secc_min_ball_size(quad, 1) == 3
    assert cscc_ball_size(quad, 2) == 5


def test_average_ball_examples():
    tri = CodeParams(1, 3, 1, 1)
    assert secc_space_size(tri) == 7
    assert secc_avg_ball_size(tri, 1) == Fraction(25, 7)
    assert secc_avg_ball_size(tri, 0) == Fraction(1)
    quad = CodeParams(1, 4, 1, 2)
    assert secc_avg_ball_size(quad, 1) == Fraction(43, 11)
    assert secc_min_ball_size(tri, 1) == 3


# --- exhaustive structural checks -------------------------------------------


def all_params(max_n: int):
    for m in range(1, max_n + 1):
        for L in range(1, max_n // m + 1):
            for w_s in range(L + 1):
                yield CodeParams(m, L, 1, w_s)


def test_cscc_ball_center_independent_and_exact():
    for params in all_params(10):
        space = brute_space(params, "CSCC")
        if not space:
            continue
        n = params.m * params.L
        for radius in range(n + 1):
            sizes = {sum(1 for y in space if bits(x ^ y) <= radius) for x in space}
            assert len(sizes) == 1
            assert cscc_ball_size(params, radius) == sizes.pop()


def test_secc_ball_size_at_matches_brute_force():
    for params in all_params(10):
        space = brute_space(params, "SECC")
        if not space:
            continue
        n = params.m * params.L
        for radius in (0, 1, 2, n):
            for x in space[:: max(1, len(space) // 16)]:
                profile = word_weight_profile(x, params.m, params.L)
                expect = sum(1 for y in space if bits(x ^ y) <= radius)
                assert secc_ball_size_at(profile, params, radius) == expect


def test_min_avg_max_ball_ordering():
    for params in all_params(8):
        space = brute_space(params, "SECC")
        if not space:
            continue
        for radius in (1, 2):
            sizes = [sum(1 for y in space if bits(x ^ y) <= radius) for x in space]
            assert secc_min_ball_size(params, radius) == min(sizes)
            avg = secc_avg_ball_size(params, radius)
            assert avg == Fraction(sum(sizes), len(sizes))
            assert min(sizes) <= avg <= max(sizes)
            assert secc_pair_count(params, radius) == sum(sizes)


def test_full_radius_ball_is_whole_space():
    for params in all_params(10):
        n = params.m * params.L
        assert cscc_ball_size(params, n) == cscc_space_size(params)
        assert secc_ball_size_at((params.w_s,) * params.m, params, n) == secc_space_size(params)


def test_near_neighborhood_floor():
    # around any weight-a center (a >= w_s) at least (L-w_s)(w_s+1) in-space
    # words sit at distance 1 or 2
    for L in range(2, 11):
        for w_s in range(1, L):
            for a in range(w_s, L + 1):
                center = (1 << a) - 1
                count = sum(
                    1
                    for y in range(1 << L)
                    if bits(y) >= w_s and 1 <= bits(center ^ y) <= 2
                )
                assert count >= (L - w_s) * (w_s + 1)


# --- enumeration and formatting ----------------------------------------------


def test_enumeration_matches_brute_force_and_is_sorted():
    for params in all_params(8):
        for kind in ("CSCC", "SECC", "CWC", "HWC", "ALL"):
            got = enumerate_space(params, kind, cap=1 << 16)
            assert got == brute_space(params, kind)
            assert got == sorted(got)


def test_enumeration_examples():
    tri = enumerate_space(CodeParams(1, 3, 1, 1), "SECC")
    assert len(tri) == 7
    assert tri[0] == 0b001
    assert enumerate_space(CodeParams(1, 2, 1, 1), "CSCC") == [0b01, 0b10]
    assert len(enumerate_space(CodeParams(2, 2, 1, 1), "CSCC")) == 4


def test_space_size_dispatch():
    params = CodeParams(2, 3, 1, 1)
    for kind in ("CSCC", "SECC", "CWC", "HWC", "ALL"):
        assert space_size(params, kind) == len(brute_space(params, kind))


def test_word_string_round_trip():
    for params in all_params(6):
        for x in enumerate_space(params, "SECC", cap=1 << 12)[:8]:
            s = word_to_str(x, params.m, params.L)
            assert str_to_word(s) == x
            assert len(s.replace(" ", "")) == params.m * params.L


def test_cap_and_parameter_errors():
    with pytest.raises(ResourceCapError):
        enumerate_space(CodeParams(4, 4, 1, 2), "ALL", cap=10)
    with pytest.raises(ParameterError):
        CodeParams(1, 3, 1, 4)  # w_s > L
    with pytest.raises(ParameterError):
        CodeParams(1, 3, 0, 1)  # d < 1
    with pytest.raises(ParameterError):
        secc_ball_size_at((0,), CodeParams(1, 3, 1, 1), 1)  # profile below w_s
    with pytest.raises(ParameterError):
        secc_ball_size_at((1, 1), CodeParams(1, 3, 1, 1), 1)  # wrong length
