"""Asymptotic rate bounds, gap functions, thresholds, and limits."""

import math

import pytest

from subblock_codes import asymptotic as asy
from subblock_codes.errors import ParameterError
from subblock_codes.spaces import CodeParams
from subblock_codes.finite_bounds import cscc_gv_lower, secc_gv_lower
from subblock_codes.combinatorics import log2_count


def test_frozen_rate_values():
    assert asy.gamma_gv(2, 0.2, 1).bits_per_use == pytest.approx(0.13903595255631884, abs=1e-15)
    assert asy.gamma_sp(2, 0.2, 1).bits_per_use == pytest.approx(0.26550220320535944, abs=1e-15)
    assert asy.sigma_gv(2, 0.2, 1).bits_per_use == pytest.approx(0.07055315547321572, abs=1e-15)
    assert asy.sigma_sp(2, 0.2, 1).bits_per_use == pytest.approx(0.5079834535659373, abs=1e-15)
    assert asy.rate_penalty_r(16, 8) == pytest.approx(0.14676722293074596, abs=1e-15)
    assert asy.alpha_gv_unconstrained(0.2).bits_per_use == pytest.approx(0.2780719051126377, abs=1e-15)
    # at full weight freedom the constant-composition family matches the
    # unconstrained GV exponent
    assert asy.alpha_gv_cwc(0.2, 0.5).bits_per_use == pytest.approx(
        asy.alpha_gv_unconstrained(0.2).bits_per_use, abs=1e-15
    )


def test_rate_values_in_unit_interval():
    grids = [(L, w_s) for L in (2, 3, 4, 6, 8, 16) for w_s in range(1, L)]
    for L, w_s in grids:
        for i in range(0, 41):
            delta = i / 80
            for fn in (asy.gamma_gv, asy.gamma_sp, asy.sigma_gv, asy.sigma_sp):
                try:
                    v = fn(L, delta, w_s).bits_per_use
                except ParameterError:
                    continue
                assert 0.0 <= v <= 1.0


def test_gv_below_sp_pointwise():
    for L, w_s in [(2, 1), (3, 1), (4, 2), (6, 3), (8, 3), (16, 8)]:
        limit = asy.delta_star(w_s / L)
        for i in range(1, 40):
            delta = limit * i / 40
            assert asy.gamma_gv(L, delta, w_s).bits_per_use <= asy.gamma_sp(L, delta, w_s).bits_per_use + 1e-12
        for i in range(1, 40):
            delta = min(limit, 4 / L) * i / 41
            assert asy.sigma_gv(L, delta, w_s).bits_per_use <= asy.sigma_sp(L, delta, w_s).bits_per_use + 1e-12


def test_gamma_weight_complement_symmetry():
    for L, w_s in [(4, 1), (5, 2), (8, 3), (16, 5)]:
        for delta in (0.01, 0.1, 0.3):
            if delta >= asy.delta_star(w_s / L):
                continue
            assert asy.gamma_gv(L, delta, w_s).bits_per_use == pytest.approx(
                asy.gamma_gv(L, delta, L - w_s).bits_per_use, abs=1e-12
            )
            assert asy.gamma_sp(L, delta, w_s).bits_per_use == pytest.approx(
                asy.gamma_sp(L, delta, L - w_s).bits_per_use, abs=1e-12
            )


def test_gamma_sp_simplified_matches_general():
    for L in (2, 4, 8, 16):
        w_s = L // 2
        for i in range(1, 30):
            delta = min(asy.delta_star(w_s / L), 4 / L) * i / 31
            a = asy.gamma_sp(L, delta, w_s).bits_per_use
            b = asy.gamma_sp_simplified(L, delta, w_s).bits_per_use
            assert a == pytest.approx(b, abs=1e-12)


def test_zero_distance_rates():
    assert asy.composition_rate(4, 2) == pytest.approx(math.log2(6) / 4, abs=1e-15)
    assert asy.tail_rate(4, 2) == pytest.approx(math.log2(11) / 4, abs=1e-15)
    assert asy.composition_rate(2, 1) == 0.5
    assert asy.tail_rate(2, 0) == 1.0


def test_threshold_roots_frozen():
    assert asy.threshold_root("cwc-cscc", 2) == pytest.approx(0.21074037788048372, abs=1e-9)
    assert asy.threshold_root("hwc-secc", 2) == pytest.approx(0.0569034312597978, abs=1e-9)
    assert asy.threshold_root("secc-cscc", 2) == pytest.approx(0.08488917565637166, abs=1e-9)
    # the two-bit-subblock roots printed to three decimals
    assert asy.threshold_root("hwc-secc", 2) == pytest.approx(0.056, abs=1e-3)
    assert asy.threshold_root("secc-cscc", 2) == pytest.approx(0.084, abs=1e-3)


def test_threshold_root_windows():
    for L in range(4, 65, 2):
        tilde = asy.threshold_root("cwc-cscc", L)
        hat = asy.threshold_root("hwc-secc", L)
        grave = asy.threshold_root("secc-cscc", L)
        assert 0 < tilde < 1 / L
        assert 0 < hat < 2 / L
        assert grave < tilde
        for pair, root in (("cwc-cscc", tilde), ("hwc-secc", hat), ("secc-cscc", grave)):
            f = asy.threshold_boundary_fn(pair, L)
            assert abs(f(root)) < 1e-8
            # strictly positive before the first root
            for i in range(1, 101):
                assert f(root * i / 101) > 0


def test_gap_zero_limits():
    for L in (2, 4, 8, 16):
        for w_s in range(1, L):
            want = asy.rate_penalty_r(L, w_s)
            got = asy.gap_cwc_cscc_lb(L, 1e-9, w_s)
            assert got == pytest.approx(want, abs=1e-6)
            assert asy.gap_cwc_cscc_zero_limit(L, w_s) == pytest.approx(want, abs=1e-12)
            assert asy.gap_hwc_secc_lb(L, 1e-9, w_s) == pytest.approx(
                asy.gap_hwc_secc_zero_limit(L, w_s), abs=1e-6
            )
            assert asy.gap_secc_cscc_lb(L, 1e-9, w_s) == pytest.approx(
                asy.gap_secc_cscc_zero_limit(L, w_s), abs=1e-6
            )


def test_gap_lower_bounds_clamped_nonnegative():
    for L, w_s in [(2, 1), (4, 2), (8, 4), (8, 2), (16, 8)]:
        for i in range(0, 50):
            delta = i / 100
            for fn in (asy.gap_cwc_cscc_lb, asy.gap_hwc_secc_lb, asy.gap_secc_cscc_lb):
                try:
                    assert fn(L, delta, w_s) >= 0.0
                except ParameterError:
                    pass


def test_gap_decomposition_inequality():
    for L in range(4, 33, 2):
        w_s = L // 2
        limit = min(asy.delta_star(0.5), 4 / L)
        k = 1
        while k * 0.001 < limit:
            delta = k * 0.001
            whole = asy.gap_cwc_cscc_lb(L, delta, w_s)
            parts = asy.gap_hwc_secc_lb(L, delta, w_s) + asy.gap_secc_cscc_lb(L, delta, w_s)
            assert whole >= parts - 1e-12
            k += 4
    # fine grid on one representative length
    for k in range(1, int(min(asy.delta_star(0.5), 0.5) / 0.001)):
        delta = k * 0.001
        whole = asy.gap_cwc_cscc_lb(8, delta, 4)
        parts = asy.gap_hwc_secc_lb(8, delta, 4) + asy.gap_secc_cscc_lb(8, delta, 4)
        assert whole >= parts - 1e-12


def test_sweep_flags():
    assert asy.gap_cwc_cscc_sweep(4, 0.6, 2) == (0.0, "proven-zero")
    assert asy.gap_secc_cscc_sweep(4, 0.9, 2) == (0.0, "proven-zero")
    v, flag = asy.gap_cwc_cscc_sweep(4, 0.01, 2)
    assert flag == "ok" and v > 0
    v, flag = asy.gap_hwc_secc_sweep(8, 0.01, 2)
    assert flag == "ok" and v >= 0
    # heavy-weight branch: between the closed-form validity edge 4/L and the
    # proven-zero region, points are reported rather than interpolated
    _, flag = asy.gap_hwc_secc_sweep(16, 0.3, 4)
    assert flag in ("ok", "undefined", "proven-zero")


def test_gap_zero_boundary_consistency():
    for L in (4, 8, 16):
        for w_s in range(1, L):
            b = asy.gap_zero_boundary("cwc-cscc", L, w_s)
            assert b == pytest.approx(asy.delta_star(w_s / L), abs=1e-15)
            if 2 * w_s >= L:
                assert asy.gap_zero_boundary("hwc-secc", L, w_s) == pytest.approx(b, abs=1e-15)
            else:
                assert asy.gap_zero_boundary("hwc-secc", L, w_s) == pytest.approx(0.5, abs=1e-15)


def test_space_penalty_offset():
    # splitting a global weight constraint into per-subblock constraints
    # costs rate; the cost approaches composition_rate - entropy as m grows
    # and shrinks as L grows at fixed w_s/L
    from subblock_codes.combinatorics import binary_entropy

    vals = [asy.finite_length_rate_offset(m, 2, 1) for m in (5, 10, 20, 40)]
    assert all(v < 0 for v in vals)
    limit = asy.composition_rate(2, 1) - binary_entropy(0.5)
    assert abs(vals[-1] - limit) < abs(vals[0] - limit)
    assert asy.finite_length_rate_offset(10, 2, 1) == pytest.approx(-0.37476308457361573, abs=1e-15)
    by_L = [abs(asy.finite_length_rate_offset(12, L, L // 2)) for L in (2, 4, 8)]
    assert by_L[0] > by_L[1] > by_L[2]


def test_finite_gv_tracks_asymptotic_gamma():
    # normalized finite-length GV bounds approach the asymptotic exponent
    for L, w_s, delta in ((2, 1, 0.1), (3, 2, 0.05), (4, 2, 0.1)):
        gamma = asy.gamma_gv(L, delta, w_s).bits_per_use
        diffs = []
        for m in (10, 20, 40):
            d = max(1, int(m * L * delta))
            finite = cscc_gv_lower(CodeParams(m, L, d, w_s)).value
            diffs.append(abs(log2_count(finite) / (m * L) - gamma))
        assert diffs[-1] == min(diffs)


def test_parameter_validation():
    with pytest.raises(ParameterError):
        asy.gamma_gv(4, -0.1, 2)
    with pytest.raises(ParameterError):
        asy.gamma_gv(4, 0.1, 5)
    with pytest.raises(ParameterError):
        asy.threshold_root("cwc-hwc", 4)
    with pytest.raises(ParameterError):
        asy.gamma_sp_simplified(8, 0.9, 4)  # beyond the 4/L validity window
