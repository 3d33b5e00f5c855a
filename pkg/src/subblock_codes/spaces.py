"""Codeword spaces and exact ball sizes for subblock-constrained codes.

Words are packed big-endian into Python ints: bit position p of an
(m*L)-bit word (p = 0 is the leftmost/most significant) lives at integer
bit (m*L - 1 - p), and subblock i occupies positions i*L .. (i+1)*L - 1.
Numeric order on packed words therefore equals lexicographic order on the
bit strings, which keeps every enumeration reproducible.

Ball sizes: within the fixed-subblock-weight space, ball sizes are
center-independent, computed from one per-subblock distance polynomial.
In the at-least-w_s space they depend on the center, but only through its
per-subblock weight profile, so exact minima and averages over centers
reduce to small polynomial computations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .combinatorics import (
    CountPolynomial,
    ExactCount,
    Ratio,
    binomial,
    binomial_tail_sum,
    poly_mul_truncated,
    poly_power_truncated,
    poly_prefix_sum,
    poly_trim,
)
from .errors import ParameterError, ResourceCapError

WeightProfile = tuple[int, ...]

DEFAULT_SPACE_CAP = 20000
DEFAULT_PROFILE_CAP = 10**6

SPACE_KINDS = ("CSCC", "SECC", "CWC", "HWC", "ALL")


@dataclass(frozen=True)
class CodeParams:
    """Code parameters: m subblocks of length L, distance d, subblock weight w_s."""

    m: int
    L: int
    d: int
    w_s: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.L < 1:
            raise ParameterError(f"need m >= 1 and L >= 1, got m={self.m}, L={self.L}")
        if not 0 <= self.w_s <= self.L:
            raise ParameterError(f"need 0 <= w_s <= L, got w_s={self.w_s}, L={self.L}")
        if not 1 <= self.d <= self.m * self.L:
            raise ParameterError(f"need 1 <= d <= m*L, got d={self.d}, m*L={self.m * self.L}")

    @property
    def n(self) -> int:
        """Blocklength n = m*L."""
        return self.m * self.L

    @property
    def w(self) -> int:
        """Codeword weight w = m*w_s."""
        return self.m * self.w_s

    @property
    def delta(self) -> float:
        """Relative distance d/n."""
        return self.d / self.n

    @property
    def omega(self) -> float:
        """Weight fraction w/n."""
        return self.w_s / self.L


def cscc_space_size(params: CodeParams) -> ExactCount:
    """Number of words whose every subblock has weight exactly w_s."""
    return binomial(params.L, params.w_s) ** params.m


def secc_space_size(params: CodeParams) -> ExactCount:
    """Number of words whose every subblock has weight at least w_s."""
    return binomial_tail_sum(params.L, params.w_s) ** params.m


@lru_cache(maxsize=None)
def _cscc_subblock_poly(L: int, w_s: int) -> tuple[int, ...]:
    """Coefficient u = #weight-w_s words at distance 2u from a weight-w_s word."""
    v = min(w_s, L - w_s)
    return tuple(binomial(w_s, u) * binomial(L - w_s, u) for u in range(v + 1))


def cscc_ball_size(params: CodeParams, radius: int) -> ExactCount:
    """Size of a radius-`radius` ball around any fixed-composition word.

    Center-independent: any two centers are related by per-subblock
    permutations, which preserve both the space and all distances. Distances
    within the space are even, so only radius // 2 matters.
    """
    if radius < 0:
        raise ParameterError("negative radius")
    p = list(_cscc_subblock_poly(params.L, params.w_s))
    max_tau = min(radius // 2, params.m * (len(p) - 1))
    powered = poly_power_truncated(p, params.m, max_tau)
    return poly_prefix_sum(powered, max_tau)


@lru_cache(maxsize=None)
def _secc_subblock_poly(L: int, w_s: int, a: int) -> tuple[int, ...]:
    """Coefficient e = #length-L words of weight >= w_s at distance e from a weight-a word.

    Flipping k ones down and e-k zeros up reaches weight a - k + (e - k);
    only weights >= w_s stay inside the space.
    """
    out = [0] * (L + 1)
    for e in range(L + 1):
        total = 0
        for k in range(min(a, e) + 1):
            up = e - k
            if up > L - a:
                continue
            if a - k + up < w_s:
                continue
            total += binomial(a, k) * binomial(L - a, up)
        out[e] = total
    return tuple(poly_trim(out))


def _profile_ball_poly(
    profile: WeightProfile, L: int, w_s: int, max_degree: int
) -> CountPolynomial:
    """Truncated product of per-subblock distance polynomials for a profile."""
    acc: CountPolynomial = [1]
    counts: dict[int, int] = {}
    for a in profile:
        counts[a] = counts.get(a, 0) + 1
    for a, mult in sorted(counts.items()):
        poly = list(_secc_subblock_poly(L, w_s, a))
        acc = poly_mul_truncated(acc, poly_power_truncated(poly, mult, max_degree), max_degree)
    return acc


def secc_ball_size_at(
    profile: WeightProfile, params: CodeParams, radius: int
) -> ExactCount:
    """Ball size around any center whose i-th subblock has weight profile[i]."""
    if radius < 0:
        raise ParameterError("negative radius")
    profile = tuple(profile)
    if len(profile) != params.m:
        raise ParameterError(f"profile length {len(profile)} != m = {params.m}")
    for a in profile:
        if not params.w_s <= a <= params.L:
            raise ParameterError(f"profile entry {a} outside [w_s, L] = [{params.w_s}, {params.L}]")
    max_degree = min(radius, params.n)
    poly = _profile_ball_poly(profile, params.L, params.w_s, max_degree)
    return poly_prefix_sum(poly, max_degree)


def secc_profile_count(params: CodeParams) -> ExactCount:
    """Number of weight-profile multisets: multisets of m values from [w_s, L]."""
    return binomial(params.L - params.w_s + params.m, params.m)


def secc_min_ball_size(
    params: CodeParams, radius: int, *, profile_cap: int = DEFAULT_PROFILE_CAP
) -> ExactCount:
    """Minimum ball size over all centers.

    Ball size is invariant under subblock reordering and within-subblock
    permutations, so it suffices to sweep weight-profile multisets.
    """
    if radius < 0:
        raise ParameterError("negative radius")
    count = secc_profile_count(params)
    if count > profile_cap:
        raise ResourceCapError(
            f"{count} weight-profile multisets exceed cap {profile_cap}",
            required=count,
            cap=profile_cap,
        )
    best: ExactCount | None = None
    for profile in itertools.combinations_with_replacement(
        range(params.w_s, params.L + 1), params.m
    ):
        size = secc_ball_size_at(profile, params, radius)
        if best is None or size < best:
            best = size
    assert best is not None
    return best


def secc_pair_count(params: CodeParams, radius: int) -> ExactCount:
    """Ordered pairs (x, y) of space words with d(x, y) <= radius.

    Per subblock, summing the distance polynomial over all centers of each
    weight gives one pair polynomial; pairs multiply across subblocks.
    """
    if radius < 0:
        return 0
    L, w_s = params.L, params.w_s
    max_degree = min(radius, params.n)
    pair_poly = [0] * (L + 1)
    for a in range(w_s, L + 1):
        centers = binomial(L, a)
        sub = _secc_subblock_poly(L, w_s, a)
        for e, c in enumerate(sub):
            pair_poly[e] += centers * c
    powered = poly_power_truncated(poly_trim(pair_poly), params.m, max_degree)
    return poly_prefix_sum(powered, max_degree)


def secc_avg_ball_size(params: CodeParams, radius: int) -> Ratio:
    """Exact average ball size over all centers of the at-least-w_s space."""
    if radius < 0:
        raise ParameterError("negative radius")
    return Fraction(secc_pair_count(params, radius), secc_space_size(params))


def _subblock_values(L: int, weights: list[int]) -> list[int]:
    """All L-bit subblock values with weight in `weights`, ascending."""
    wanted = set(weights)
    return [s for s in range(1 << L) if bin(s).count("1") in wanted]


def space_size(params: CodeParams, kind: str) -> ExactCount:
    """Size of the chosen space without enumerating it."""
    kind = kind.upper()
    n, w = params.n, params.w
    if kind == "CSCC":
        return cscc_space_size(params)
    if kind == "SECC":
        return secc_space_size(params)
    if kind == "CWC":
        return binomial(n, w)
    if kind == "HWC":
        return binomial_tail_sum(n, w)
    if kind == "ALL":
        return 1 << n
    raise ParameterError(f"unknown space kind {kind!r}; expected one of {SPACE_KINDS}")


def enumerate_space(
    params: CodeParams, kind: str, *, cap: int = DEFAULT_SPACE_CAP
) -> list[int]:
    """All words of the chosen space as packed ints, in increasing order.

    kinds: CSCC (every subblock weight w_s), SECC (every subblock weight
    >= w_s), CWC (total weight m*w_s), HWC (total weight >= m*w_s),
    ALL (every word of length m*L).
    """
    kind = kind.upper()
    size = space_size(params, kind)
    if size > cap:
        raise ResourceCapError(
            f"{kind} space has {size} words, over cap {cap}", required=size, cap=cap
        )
    m, L, w_s = params.m, params.L, params.w_s
    n, w = params.n, params.w
    if kind in ("CSCC", "SECC"):
        weights = [w_s] if kind == "CSCC" else list(range(w_s, L + 1))
        subs = _subblock_values(L, weights)
        words = []
        for combo in itertools.product(subs, repeat=m):
            x = 0
            for s in combo:
                x = (x << L) | s
            words.append(x)
        return words
    if kind == "CWC":
        return sorted(
            sum(1 << (n - 1 - p) for p in combo)
            for combo in itertools.combinations(range(n), w)
        )
    if kind == "HWC":
        words = []
        for j in range(w, n + 1):
            words.extend(
                sum(1 << (n - 1 - p) for p in combo)
                for combo in itertools.combinations(range(n), j)
            )
        return sorted(words)
    # ALL
    return list(range(1 << n))


def word_to_str(x: int, m: int, L: int) -> str:
    """Render a packed word as space-separated subblock bit strings."""
    bits = format(x, "0{}b".format(m * L))
    return " ".join(bits[i * L : (i + 1) * L] for i in range(m))


def str_to_word(s: str) -> int:
    """Parse a bit string (spaces between subblocks optional) to a packed int."""
    compact = s.replace(" ", "")
    if not compact or set(compact) - {"0", "1"}:
        raise ParameterError(f"not a binary word: {s!r}")
    return int(compact, 2)


def word_weight_profile(x: int, m: int, L: int) -> WeightProfile:
    """Per-subblock weights of a packed word."""
    mask = (1 << L) - 1
    out = []
    for i in range(m):
        shift = (m - 1 - i) * L
        out.append(bin((x >> shift) & mask).count("1"))
    return tuple(out)
