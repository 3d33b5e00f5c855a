"""Formula-based lower/upper bounds and their aggregation."""

from fractions import Fraction

import pytest

from subblock_codes.errors import ParameterError
from subblock_codes.exact_oracle import exact_size, verify_code
from subblock_codes.finite_bounds import (
    avg_sp_value,
    best_bounds,
    binary_gv_lower,
    candidate_bounds,
    cscc_gv_lower,
    cscc_sp_upper,
    cscc_symmetry,
    secc_concat_lower,
    secc_elias_lower,
    secc_from_cscc_lower,
    secc_gv_lower,
    secc_johnson_upper,
    secc_monotonic_upper,
    secc_puncture_upper,
    secc_sp_upper,
)
from subblock_codes.spaces import CodeParams, cscc_space_size, secc_space_size


def test_cscc_gv_lower_values():
    assert cscc_gv_lower(CodeParams(2, 4, 3, 2)).value == 4
    assert cscc_gv_lower(CodeParams(1, 4, 3, 2)).value == 2
    # d=1 gives the whole space
    p = CodeParams(2, 3, 1, 1)
    assert cscc_gv_lower(p).value == cscc_space_size(p) == 9
    assert cscc_gv_lower(p).direction == "Lower"


def test_cscc_sp_upper_values():
    assert cscc_sp_upper(CodeParams(2, 4, 5, 2)).value == 4
    for d in (1, 2):
        p = CodeParams(1, 4, d, 2)
        assert cscc_sp_upper(p).value == cscc_space_size(p) == 6


def test_cscc_symmetry_transfer():
    p = cscc_symmetry(CodeParams(2, 5, 3, 1))
    assert (p.m, p.L, p.d, p.w_s) == (2, 5, 3, 4)
    fixed = cscc_symmetry(CodeParams(1, 4, 2, 2))
    assert fixed.w_s == 2
    assert exact_size(CodeParams(1, 4, 2, 1), "CSCC") == exact_size(CodeParams(1, 4, 2, 3), "CSCC") == 4


def test_secc_gv_lower_values():
    assert secc_gv_lower(CodeParams(1, 3, 2, 1)).value == 2  # ceil(49/25)
    assert secc_gv_lower(CodeParams(1, 4, 2, 2)).value == 3  # ceil(121/43)
    p = CodeParams(2, 3, 1, 1)
    assert secc_gv_lower(p).value == secc_space_size(p) == 49


def test_secc_sp_upper_values():
    assert secc_sp_upper(CodeParams(1, 3, 3, 1)).value == 2  # floor(7/3)
    assert secc_sp_upper(CodeParams(1, 4, 3, 2)).value == 3  # floor(11/3)
    assert secc_sp_upper(CodeParams(1, 3, 2, 1)).value == 7


def test_secc_from_cscc_lower_cases():
    # union of composition layers is valid when m >= d
    r = secc_from_cscc_lower(CodeParams(2, 2, 2, 1), {1: 4, 2: 1})
    assert r.value == 5
    assert exact_size(CodeParams(2, 2, 2, 1), "SECC") == 5
    # w_s = L leaves the single all-ones layer
    assert secc_from_cscc_lower(CodeParams(2, 2, 2, 2), {2: 1}).value == 1
    # best single layer when m < d
    assert secc_from_cscc_lower(CodeParams(1, 4, 2, 2), {2: 4, 3: 1, 4: 1}).value == 4


def test_secc_concat_lower():
    # inner heavy-weight code of size 7 at d1=2 and outer distance 2 on q=7:
    # A_7(2,2) >= ceil(49/7) = 7
    r = secc_concat_lower(2, 4, 2, 2, 2, 7)
    assert r.value == 7
    assert r.direction == "Lower"
    # no outer constraint -> q^m
    assert secc_concat_lower(3, 4, 2, 1, 2, 7).value == 343
    with pytest.raises(ParameterError):
        secc_concat_lower(2, 4, 2, 2, 2, 1)


def test_secc_elias_lower():
    assert secc_elias_lower(CodeParams(1, 3, 2, 1), 4).value == 4  # ceil(7*4/8)
    assert secc_elias_lower(CodeParams(1, 3, 2, 1), 2).value == 2  # ceil(7*2/8)
    # w_s=0 passes the unconstrained value straight through
    assert secc_elias_lower(CodeParams(1, 3, 2, 0), 4).value == 4


def test_secc_monotonic_upper():
    inner = secc_sp_upper(CodeParams(1, 3, 2, 1))
    r = secc_monotonic_upper(CodeParams(1, 3, 2, 2), inner)
    assert r.value == inner.value
    assert r.direction == "Upper"
    assert exact_size(CodeParams(1, 3, 2, 2), "SECC") <= r.value
    with pytest.raises(ParameterError):
        secc_monotonic_upper(CodeParams(1, 3, 2, 1), secc_sp_upper(CodeParams(1, 3, 2, 2)))


def test_secc_puncture_upper():
    inner = secc_sp_upper(CodeParams(1, 3, 2, 1))
    r = secc_puncture_upper(CodeParams(1, 4, 3, 2), inner)
    assert r.value == inner.value == 7
    assert exact_size(CodeParams(1, 4, 3, 2), "SECC") == 2 <= r.value
    with pytest.raises(ParameterError):
        secc_puncture_upper(CodeParams(2, 4, 2, 2), secc_sp_upper(CodeParams(2, 3, 1, 1)))


def test_secc_johnson_upper():
    inner = secc_sp_upper(CodeParams(1, 3, 2, 1))
    assert secc_johnson_upper(CodeParams(1, 4, 2, 2), inner).value == 14
    # w_s = L collapses the scaling factor to 1
    inner2 = secc_sp_upper(CodeParams(1, 3, 2, 3))
    assert secc_johnson_upper(CodeParams(1, 4, 2, 4), inner2).value == inner2.value == 1


def test_avg_sp_value_is_not_a_bound():
    p = CodeParams(1, 3, 3, 1)
    assert avg_sp_value(p) == Fraction(49, 25)
    code = (0b100, 0b011)
    assert verify_code(code, 3, "SECC", p)
    assert len(code) > avg_sp_value(p)
    # d<=2 leaves the space size
    assert avg_sp_value(CodeParams(1, 3, 2, 1)) == Fraction(7)


def test_binary_gv_lower():
    assert binary_gv_lower(3, 2) == 2
    assert binary_gv_lower(8, 3) == pytest.approx(7, abs=1)  # ceil(256/37) = 7
    assert binary_gv_lower(8, 1) == 256


def test_best_bounds_examples():
    lo, up = best_bounds(CodeParams(1, 3, 3, 1), "SECC")
    assert lo.value == up.value == 2
    p = CodeParams(2, 3, 1, 1)
    lo, up = best_bounds(p, "CSCC")
    assert lo.value == up.value == cscc_space_size(p)
    lo, up = best_bounds(CodeParams(2, 2, 2, 1), "CSCC")
    assert lo.value <= 4 <= up.value


def test_aggregated_bounds_never_cross():
    for m in range(1, 4):
        for L in range(1, 5):
            for w_s in range(L + 1):
                for d in range(1, m * L + 1):
                    p = CodeParams(m, L, d, w_s)
                    for kind in ("CSCC", "SECC"):
                        cands = candidate_bounds(p, kind)
                        lows = [b.value for b in cands if b.direction == "Lower"]
                        ups = [b.value for b in cands if b.direction == "Upper"]
                        assert max(lows) <= min(ups)
                        lo, up = best_bounds(p, kind)
                        assert lo.value == max(lows) and up.value == min(ups)


def test_bounds_sandwich_oracle_small():
    # every pair here is settled by the oracle in well under a second
    for m, L in ((1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3), (3, 2), (2, 4), (4, 2)):
        for w_s in range(L + 1):
            for d in range(1, m * L + 1):
                p = CodeParams(m, L, d, w_s)
                for kind in ("CSCC", "SECC"):
                    lo, up = best_bounds(p, kind)
                    exact = exact_size(p, kind, node_budget=20_000_000)
                    assert lo.value <= exact <= up.value
