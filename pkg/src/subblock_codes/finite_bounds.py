"""Finite-length lower and upper bounds for subblock-constrained codes.

Every bound is computed in exact integer or rational arithmetic: lower
bounds are ceilings of exact ratios, upper bounds are floors.  Transfer
operations (weight relaxation, column deletion, scaled column deletion)
take an already-proven bound for the reduced parameter set and reissue it
for the original one, validating that the hand-off matches.

``best_bounds`` aggregates every applicable method of each direction and
never calls the exact-search oracle; its building blocks are pure
formulas, so results are cheap and reproducible at any size.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .combinatorics import binomial, ceil_ratio, floor_ratio
from .errors import InternalConsistencyError, ParameterError
from .spaces import (
    CodeParams,
    cscc_ball_size,
    cscc_space_size,
    secc_avg_ball_size,
    secc_min_ball_size,
    secc_space_size,
)

LOWER = "Lower"
UPPER = "Upper"
EXACT = "Exact"


@dataclass(frozen=True)
class BoundResult:
    """One proven bound: value, direction, producing method, and parameters."""

    value: int
    direction: str
    method: str
    params: CodeParams

    def __post_init__(self) -> None:
        if self.direction not in (LOWER, UPPER, EXACT):
            raise ParameterError(f"bad direction {self.direction!r}")
        if self.value < 0:
            raise ParameterError(f"bound value must be >= 0, got {self.value}")


# ---------------------------------------------------------------------------
# constant-subblock-composition bounds


def cscc_gv_lower(params: CodeParams) -> BoundResult:
    """Gilbert-style covering bound: radius-(d-1) balls around a maximal
    code cover the space, and the ball size is center-independent."""
    space = cscc_space_size(params)
    ball = cscc_ball_size(params, params.d - 1)
    value = ceil_ratio(Fraction(space, ball))
    return BoundResult(value, LOWER, "gilbert-varshamov", params)


def cscc_sp_upper(params: CodeParams) -> BoundResult:
    """Sphere packing: radius-floor((d-1)/2) balls around codewords are
    disjoint subsets of the space."""
    space = cscc_space_size(params)
    ball = cscc_ball_size(params, (params.d - 1) // 2)
    value = floor_ratio(Fraction(space, ball))
    return BoundResult(value, UPPER, "sphere-packing", params)


def cscc_symmetry(params: CodeParams) -> CodeParams:
    """Complementing every subblock maps weight w_s codes bijectively to
    weight L-w_s codes, so all bounds transfer verbatim."""
    return CodeParams(params.m, params.L, params.d, params.L - params.w_s)


# ---------------------------------------------------------------------------
# subblock-energy-constraint bounds


def secc_gv_lower(params: CodeParams) -> BoundResult:
    """Averaged Gilbert bound: some maximal code covers the space with
    radius-(d-1) balls no larger than the average ball."""
    space = secc_space_size(params)
    avg = secc_avg_ball_size(params, params.d - 1)
    value = ceil_ratio(Fraction(space) / avg)
    return BoundResult(value, LOWER, "gilbert-varshamov", params)


def secc_from_cscc_lower(
    params: CodeParams,
    cscc_values: Mapping[int, int],
    block_values: Mapping[int, int] | None = None,
) -> BoundResult:
    """Constructions from constant-composition codes: (a) any single
    per-subblock weight j >= w_s qualifies; (b) for m >= d the union over
    weights keeps distance d because distinct compositions already differ
    in every subblock; (c) for d | m, a product of independent d-subblock
    segments, each a union as in (b).

    ``cscc_values[j]`` must be a proven lower bound on the size of the
    (m, L, d, j) constant-composition code; ``block_values[j]`` covers the
    (d, L, d, j) segment codes needed by case (c) (defaults to
    ``cscc_values`` when m == d).
    """
    m, L, d, w_s = params.m, params.L, params.d, params.w_s
    weights = range(w_s, L + 1)
    missing = [j for j in weights if j not in cscc_values]
    if missing:
        raise ParameterError(f"missing constant-composition values for {missing}")

    best = max(cscc_values[j] for j in weights)
    method = "constant-composition-best-weight"
    if m >= d:
        total = sum(cscc_values[j] for j in weights)
        if total > best:
            best, method = total, "constant-composition-union"
    if m % d == 0 and m > d:
        blocks = block_values if block_values is not None else None
        if blocks is not None:
            seg = sum(blocks[j] for j in weights)
            prod = seg ** (m // d)
            if prod > best:
                best, method = prod, "constant-composition-product"
    elif m == d:
        # one segment: the product equals the union
        pass
    return BoundResult(best, LOWER, method, params)


def secc_concat_lower(
    m: int, L: int, d1: int, d2: int, w_s: int, inner_size: int
) -> BoundResult:
    """Concatenation: an inner heavy-weight subblock code of size q and
    distance d1, composed with a q-ary outer code of distance d2, yields
    distance d1*d2.  The outer size is the best of the q-ary Gilbert bound
    and the trivial bounds for d2 = 1 and d2 = m."""
    if inner_size < 2:
        raise ParameterError(f"inner code must have at least 2 words, got {inner_size}")
    if not 1 <= d1 <= L or not 1 <= d2 <= m:
        raise ParameterError(f"need 1 <= d1 <= L and 1 <= d2 <= m, got d1={d1}, d2={d2}")
    q = inner_size
    denom = sum(binomial(m, i) * (q - 1) ** i for i in range(d2))
    outer = ceil_ratio(Fraction(q**m, denom))
    if d2 == 1:
        outer = max(outer, q**m)
    if d2 == m:
        outer = max(outer, q)  # repetition of inner symbols
    params = CodeParams(m, L, d1 * d2, w_s)
    return BoundResult(outer, LOWER, f"concatenation(d1={d1},d2={d2})", params)


def secc_elias_lower(params: CodeParams, unconstrained_lower: int) -> BoundResult:
    """Translate averaging: some coset of a distance-d code of size A meets
    the space in at least |space| * A / 2^n words."""
    n = params.m * params.L
    space = secc_space_size(params)
    value = ceil_ratio(Fraction(space * unconstrained_lower, 2**n))
    return BoundResult(value, LOWER, "translate-average", params)


def binary_gv_lower(n: int, d: int) -> int:
    """Classic Gilbert bound for unconstrained binary codes."""
    if not 1 <= d <= n:
        raise ParameterError(f"need 1 <= d <= n, got d={d}, n={n}")
    denom = sum(binomial(n, i) for i in range(d))
    return ceil_ratio(Fraction(2**n, denom))


def secc_sp_upper(params: CodeParams) -> BoundResult:
    """Sphere packing with the smallest ball over all weight profiles."""
    space = secc_space_size(params)
    ball = secc_min_ball_size(params, (params.d - 1) // 2)
    value = floor_ratio(Fraction(space, ball))
    return BoundResult(value, UPPER, "sphere-packing", params)


def secc_monotonic_upper(params: CodeParams, value_at_lower_ws: BoundResult) -> BoundResult:
    """Relaxing the per-subblock weight floor only enlarges the space, so
    an upper bound at w2 < w_s caps the size at w_s as well."""
    inner = value_at_lower_ws
    if inner.direction not in (UPPER, EXACT):
        raise ParameterError("weight relaxation needs an Upper bound")
    p = inner.params
    if (p.m, p.L, p.d) != (params.m, params.L, params.d) or p.w_s > params.w_s:
        raise ParameterError(
            f"weight relaxation needs same (m, L, d) and w2 <= w_s, got {p} for {params}"
        )
    return BoundResult(inner.value, UPPER, f"weight-relaxation(w2={p.w_s})", params)


def secc_puncture_upper(params: CodeParams, inner: BoundResult) -> BoundResult:
    """Deleting one fixed column per subblock keeps codewords distinct when
    d > m, lowers each subblock weight floor by one, and costs at most m
    units of distance."""
    m, L, d, w_s = params.m, params.L, params.d, params.w_s
    if d <= m:
        raise ParameterError(f"column deletion needs d > m, got d={d}, m={m}")
    if w_s < 1 or L < 2:
        raise ParameterError(f"column deletion needs w_s >= 1 and L >= 2, got {params}")
    if inner.direction not in (UPPER, EXACT):
        raise ParameterError("column deletion needs an Upper bound")
    expect = CodeParams(m, L - 1, d - m, w_s - 1)
    if inner.params != expect:
        raise ParameterError(f"inner bound is for {inner.params}, expected {expect}")
    return BoundResult(inner.value, UPPER, "column-deletion", params)


def secc_johnson_upper(params: CodeParams, inner: BoundResult) -> BoundResult:
    """Johnson-type scaling: deleting one weight-carrying column per
    subblock maps each codeword to at least w_s^m / L^m distinct shortened
    codewords, so the size is at most (L/w_s)^m times the shortened bound."""
    m, L, d, w_s = params.m, params.L, params.d, params.w_s
    if w_s < 1 or L < 2:
        raise ParameterError(f"scaled deletion needs w_s >= 1 and L >= 2, got {params}")
    if inner.direction not in (UPPER, EXACT):
        raise ParameterError("scaled deletion needs an Upper bound")
    expect = CodeParams(m, L - 1, d, w_s - 1)
    if inner.params != expect:
        raise ParameterError(f"inner bound is for {inner.params}, expected {expect}")
    value = (L**m * inner.value) // (w_s**m)
    return BoundResult(value, UPPER, "johnson-scaling", params)


def avg_sp_value(params: CodeParams) -> Fraction:
    """Space size divided by the radius-floor((d-1)/2) average ball.

    Diagnostic only: the averaged packing ratio is NOT a valid upper
    bound, and small codes exceed it."""
    space = secc_space_size(params)
    avg = secc_avg_ball_size(params, (params.d - 1) // 2)
    return Fraction(space) / avg


# ---------------------------------------------------------------------------
# aggregation


def _space_bound(params: CodeParams, kind: str) -> BoundResult:
    if kind == "CSCC":
        size = cscc_space_size(params)
    else:
        size = secc_space_size(params)
    return BoundResult(size, UPPER, "space-size", params)


def candidate_bounds(params: CodeParams, kind: str) -> list[BoundResult]:
    """Every applicable formula bound for the given parameters, both
    directions, unaggregated (one entry per method)."""
    if kind == "CSCC":
        return [cscc_gv_lower(params), cscc_sp_upper(params), _space_bound(params, kind)]
    if kind != "SECC":
        raise ParameterError(f"kind must be CSCC or SECC, got {kind!r}")

    m, L, d, w_s = params.m, params.L, params.d, params.w_s
    out: list[BoundResult] = [secc_gv_lower(params)]

    cscc_values = {j: cscc_gv_lower(CodeParams(m, L, d, j)).value for j in range(w_s, L + 1)}
    block_values = None
    if m % d == 0 and m > d:
        block_values = {
            j: cscc_gv_lower(CodeParams(d, L, d, j)).value for j in range(w_s, L + 1)
        }
    out.append(secc_from_cscc_lower(params, cscc_values, block_values))

    for d1 in range(1, min(d, L) + 1):
        if d % d1 != 0:
            continue
        d2 = d // d1
        if d2 > m:
            continue
        inner_size = secc_gv_lower(CodeParams(1, L, d1, w_s)).value
        if inner_size < 2:
            continue
        out.append(secc_concat_lower(m, L, d1, d2, w_s, inner_size))

    out.append(secc_elias_lower(params, binary_gv_lower(m * L, d)))

    out.append(_space_bound(params, kind))
    out.append(secc_sp_upper(params))

    if w_s > 0:
        relaxed = CodeParams(m, L, d, 0)
        base = min(secc_sp_upper(relaxed), _space_bound(relaxed, kind), key=lambda b: b.value)
        out.append(secc_monotonic_upper(params, base))

    if d > m and w_s >= 1 and L >= 2:
        reduced = CodeParams(m, L - 1, d - m, w_s - 1)
        base = min(secc_sp_upper(reduced), _space_bound(reduced, kind), key=lambda b: b.value)
        out.append(secc_puncture_upper(params, base))

    if w_s >= 1 and L >= 2 and d <= m * (L - 1):
        reduced = CodeParams(m, L - 1, d, w_s - 1)
        base = min(secc_sp_upper(reduced), _space_bound(reduced, kind), key=lambda b: b.value)
        out.append(secc_johnson_upper(params, base))

    return out


def best_bounds(params: CodeParams, kind: str) -> tuple[BoundResult, BoundResult]:
    """Best lower and best upper formula bound, labeled by winning method.

    Raises an internal-consistency error if the directions cross, which
    would mean one of the component formulas is wrong."""
    cands = candidate_bounds(params, kind)
    lowers = [b for b in cands if b.direction == LOWER]
    uppers = [b for b in cands if b.direction == UPPER]
    best_lower = max(lowers, key=lambda b: b.value)
    best_upper = min(uppers, key=lambda b: b.value)
    if best_lower.value > best_upper.value:
        raise InternalConsistencyError(
            f"bounds crossed for {kind} {params}: "
            f"{best_lower.method}={best_lower.value} > {best_upper.method}={best_upper.value}"
        )
    if best_lower.value == best_upper.value:
        best_lower = BoundResult(best_lower.value, EXACT, best_lower.method, params)
        best_upper = BoundResult(best_upper.value, EXACT, best_upper.method, params)
    return best_lower, best_upper
