"""Exact optimal code sizes on small instances.

Computes A(n,d), A(n,d,w), H(n,d,w), and the subblock quantities
C(m,L,d,w_s), S(m,L,d,w_s) exactly, as maximum cliques of the
distance->=d compatibility graph over the corresponding space.

Layers, cheapest first:
  1. closed forms (single-word spaces, d = 1, fixed-composition d = 2) and
     reductions (complement symmetry, parity extension for even-d
     unconstrained codes, kind aliases);
  2. a polynomial fast path for d = 2 on the at-least-w_s spaces via
     bipartite maximum matching (conflicts are distance-1 pairs, which
     always join words of different weight parity);
  3. proven integer upper bounds (Singleton / Hamming / Plotkin / Johnson /
     halving recursions) plus a greedy clique seed, which together often
     certify optimality with no search at all;
  4. branch-and-bound maximum clique (numba kernel when available, pure
     Python otherwise) under a deterministic node budget.

Budget exhaustion is a first-class outcome carrying the proven bracket
[lower, upper]; it is never silently turned into a number.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

from . import _clique
from .combinatorics import binomial, binomial_tail_sum
from .errors import BudgetExceededError, ParameterError, ResourceCapError
from .spaces import (
    DEFAULT_SPACE_CAP,
    CodeParams,
    cscc_ball_size,
    secc_min_ball_size,
    enumerate_space,
    space_size,
)

try:  # pragma: no cover - exercised indirectly via engine tests
    from . import _clique_numba

    _HAVE_NUMBA = True
except Exception:  # pragma: no cover
    _clique_numba = None
    _HAVE_NUMBA = False

ORACLE_KINDS = ("CSCC", "SECC", "CWC", "HWC", "UNCONSTRAINED")

# Node budget for the branch and bound. Nodes, not seconds: identical runs
# must give identical outcomes, so wall-clock cutoffs are out. The CLI maps
# its --budget seconds flag through NODES_PER_SECOND, calibrated low enough
# that the pure-Python engine also respects the wall-clock intent.
DEFAULT_NODE_BUDGET = 5_000_000
NODES_PER_SECOND = 100_000

# Graphs at least this large run on the numba engine when it is available.
_NUMBA_MIN_VERTICES = 96

EXACT = "exact"
BUDGET_EXCEEDED = "budget-exceeded"


@dataclass(frozen=True)
class OracleResult:
    """Outcome of one exact-size computation.

    status "exact": lower == upper is the optimum. status "budget-exceeded":
    only the bracket [lower, upper] is proven; `witness` still achieves
    `lower`. Accessing .size on a non-exact result raises, so a truncated
    search can never masquerade as an answer.
    """

    lower: int
    upper: int
    status: str
    method: str
    witness: tuple[int, ...] | None
    nodes: int = 0

    @property
    def size(self) -> int:
        if self.status != EXACT:
            raise BudgetExceededError(
                f"exact size not proven; bracket is [{self.lower}, {self.upper}]",
                lower=self.lower,
                upper=self.upper,
                nodes=self.nodes,
            )
        return self.lower


_CACHE: dict[tuple, tuple[OracleResult, int]] = {}


def clear_cache() -> None:
    """Drop all memoized oracle results (mainly for tests)."""
    _CACHE.clear()


def _cache_get(key: tuple, budget: int) -> OracleResult | None:
    hit = _CACHE.get(key)
    if hit is None:
        return None
    result, used_budget = hit
    if result.status == EXACT or budget <= used_budget:
        return result
    return None


def _cache_put(key: tuple, result: OracleResult, budget: int) -> OracleResult:
    _CACHE[key] = (result, budget)
    return result


def _exact(value: int, method: str, witness: tuple[int, ...] | None, nodes: int = 0) -> OracleResult:
    return OracleResult(value, value, EXACT, method, witness, nodes)


def _map_witness(res: OracleResult, fn, suffix: str) -> OracleResult:
    wit = None if res.witness is None else tuple(sorted(fn(x) for x in res.witness))
    return OracleResult(res.lower, res.upper, res.status, f"{res.method}+{suffix}", wit, res.nodes)


# ---------------------------------------------------------------------------
# proven upper bounds (exact integer arithmetic throughout)


@lru_cache(maxsize=None)
def _upper_a(n: int, d: int) -> int:
    """Proven upper bound on A(n, d)."""
    if d > n:
        return 1
    if d == n:
        return 2
    if d <= 1:
        return 1 << n
    best = 1 << (n - d + 1)  # Singleton
    if d % 2 == 0:
        best = min(best, _upper_a(n - 1, d - 1))  # parity-extension equality
        if 2 * d > n:
            best = min(best, 2 * (d // (2 * d - n)))  # Plotkin
        elif 2 * d == n:
            best = min(best, 4 * d)
    else:
        best = min(best, 2 * _upper_a(n - 1, d))  # halving
        if 2 * d + 1 > n:
            best = min(best, 2 * ((d + 1) // (2 * d + 1 - n)))
        elif 2 * d + 1 == n:
            best = min(best, 4 * d + 4)
    t = (d - 1) // 2
    ball = sum(binomial(n, i) for i in range(t + 1))
    best = min(best, (1 << n) // ball)  # Hamming
    return best


@lru_cache(maxsize=None)
def _upper_cwc(n: int, d: int, w: int) -> int:
    """Proven upper bound on A(n, d, w)."""
    w = min(w, n - w)
    if w < 0:
        return 0
    if d % 2 == 1:  # distances between equal-weight words are even
        d += 1
    if w == 0:
        return 1
    if d > 2 * w:
        return 1
    if d == 2 * w:
        return n // w  # disjoint supports
    if d <= 2:
        return binomial(n, w)
    best = binomial(n, w)
    best = min(best, (n * _upper_cwc(n - 1, d, w - 1)) // w)  # Johnson
    best = min(best, (n * _upper_cwc(n - 1, d, w)) // (n - w))  # Johnson on zeros
    best = min(best, _upper_a(n, d))
    t = (d - 1) // 2
    ball = cscc_ball_size(CodeParams(1, n, min(d, n), w), t)
    best = min(best, binomial(n, w) // ball)  # sphere packing
    return best


@lru_cache(maxsize=None)
def _upper_hwc(n: int, d: int, w: int) -> int:
    """Proven upper bound on H(n, d, w)."""
    if w <= 0:
        return _upper_a(n, d)
    if w >= n:
        return 1
    best = min(_upper_a(n, d), binomial_tail_sum(n, w))
    best = min(best, sum(_upper_cwc(n, d, j) for j in range(w, n + 1)))
    t = (d - 1) // 2
    if t > 0:
        params = CodeParams(1, n, min(d, n), w)
        best = min(best, binomial_tail_sum(n, w) // secc_min_ball_size(params, t))
    return best


@lru_cache(maxsize=None)
def _upper_cscc(m: int, L: int, d: int, w_s: int) -> int:
    """Proven upper bound on C(m, L, d, w_s)."""
    params = CodeParams(m, L, d, w_s)
    space = space_size(params, "CSCC")
    best = min(space, _upper_cwc(m * L, d, m * w_s))
    t = (d - 1) // 2
    best = min(best, space // cscc_ball_size(params, t))
    return best


@lru_cache(maxsize=None)
def _upper_secc(m: int, L: int, d: int, w_s: int) -> int:
    """Proven upper bound on S(m, L, d, w_s)."""
    params = CodeParams(m, L, d, w_s)
    space = space_size(params, "SECC")
    best = min(space, _upper_hwc(m * L, d, m * w_s))
    t = (d - 1) // 2
    if t > 0:
        best = min(best, space // secc_min_ball_size(params, t))
    if w_s >= 1 and L >= 2:
        if d > m:
            # delete one fixed column per subblock: distances drop by <= m
            best = min(best, _upper_secc(m, L - 1, d - m, w_s - 1))
        # Johnson-type: delete a weight-carrying column per subblock.  When d
        # exceeds the shortened space's diameter the inner code is one word.
        inner = _upper_secc(m, L - 1, d, w_s - 1) if d <= m * (L - 1) else 1
        best = min(best, (L**m * inner) // (w_s**m))
    return best


# ---------------------------------------------------------------------------
# d = 2 fast path: maximum independent set in the distance-1 conflict graph


def _hopcroft_karp(left_adj: list[list[int]], n_left: int, n_right: int):
    """Maximum bipartite matching; returns (size, match_left, match_right)."""
    INF = float("inf")
    match_left = [-1] * n_left
    match_right = [-1] * n_right
    dist = [0.0] * n_left

    def bfs() -> bool:
        queue = []
        for u in range(n_left):
            if match_left[u] == -1:
                dist[u] = 0.0
                queue.append(u)
            else:
                dist[u] = INF
        found = False
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for v in left_adj[u]:
                u2 = match_right[v]
                if u2 == -1:
                    found = True
                elif dist[u2] == INF:
                    dist[u2] = dist[u] + 1
                    queue.append(u2)
        return found

    def dfs(u: int) -> bool:
        for v in left_adj[u]:
            u2 = match_right[v]
            if u2 == -1 or (dist[u2] == dist[u] + 1 and dfs(u2)):
                match_left[u] = v
                match_right[v] = u
                return True
        dist[u] = INF
        return False

    size = 0
    while bfs():
        for u in range(n_left):
            if match_left[u] == -1 and dfs(u):
                size += 1
    return size, match_left, match_right


def _max_code_d2(words: list[int], nbits: int) -> tuple[int, tuple[int, ...]]:
    """Largest subset of `words` with pairwise distance >= 2, with witness.

    Conflicts (distance exactly 1) always connect words of opposite weight
    parity, so the conflict graph is bipartite and a maximum independent set
    comes from a maximum matching via the standard cover construction.
    """
    index = {x: i for i, x in enumerate(words)}
    even = [i for i, x in enumerate(words) if bin(x).count("1") % 2 == 0]
    odd = [i for i, x in enumerate(words) if bin(x).count("1") % 2 == 1]
    odd_pos = {i: j for j, i in enumerate(odd)}

    left_adj: list[list[int]] = []
    for i in even:
        x = words[i]
        row = []
        for b in range(nbits):
            y = x ^ (1 << b)
            j = index.get(y)
            if j is not None:
                row.append(odd_pos[j])
        row.sort()
        left_adj.append(row)

    msize, match_left, match_right = _hopcroft_karp(left_adj, len(even), len(odd))

    # König: alternating reachability from unmatched left vertices.
    in_z_left = [False] * len(even)
    in_z_right = [False] * len(odd)
    queue = [u for u in range(len(even)) if match_left[u] == -1]
    for u in queue:
        in_z_left[u] = True
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        for v in left_adj[u]:
            if not in_z_right[v]:
                in_z_right[v] = True
                u2 = match_right[v]
                if u2 != -1 and not in_z_left[u2]:
                    in_z_left[u2] = True
                    queue.append(u2)

    chosen = [words[even[u]] for u in range(len(even)) if in_z_left[u]]
    chosen += [words[odd[v]] for v in range(len(odd)) if not in_z_right[v]]
    assert len(chosen) == len(words) - msize
    return len(chosen), tuple(sorted(chosen))


# ---------------------------------------------------------------------------
# adjacency construction and the branch-and-bound wrapper


@lru_cache(maxsize=32)
def _space_words(kind: str, m: int, L: int, w_s: int, cap: int) -> tuple[int, ...]:
    params = CodeParams(m, L, 1, w_s)
    return tuple(enumerate_space(params, kind, cap=cap))


def _build_adjacency(words: tuple[int, ...], nbits: int, d: int) -> list[int]:
    """Bitset adjacency: bit j of adj[i] set iff d(words[i], words[j]) >= d."""
    n = len(words)
    if n >= 512:
        return _build_adjacency_numpy(words, nbits, d)
    adj = [0] * n
    for i in range(n):
        wi = words[i]
        for j in range(i + 1, n):
            if ((wi ^ words[j]).bit_count()) >= d:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def _build_adjacency_numpy(words: tuple[int, ...], nbits: int, d: int) -> list[int]:
    """Same result as the plain loop via a chunked Gram-matrix distance."""
    import numpy as np

    n = len(words)
    bits = np.zeros((n, nbits), np.int32)
    for p in range(nbits):
        shift = nbits - 1 - p
        for i, x in enumerate(words):
            bits[i, p] = (x >> shift) & 1
    weights = bits.sum(axis=1)
    adj: list[int] = []
    chunk = max(1, (1 << 24) // max(n, 1))
    for start in range(0, n, chunk):
        stop = min(n, start + chunk)
        gram = bits[start:stop] @ bits.T
        dist = weights[start:stop, None] + weights[None, :] - 2 * gram
        ok = dist >= d
        for local, i in enumerate(range(start, stop)):
            row = ok[local]
            row[i] = False
            packed = np.packbits(row, bitorder="little").tobytes()
            adj.append(int.from_bytes(packed, "little"))
    return adj


def _pick_engine(n_vertices: int, engine: str | None) -> str:
    choice = engine or os.environ.get("SUBBLOCK_CODES_ENGINE", "auto")
    if choice not in ("auto", "python", "numba"):
        raise ParameterError(f"unknown engine {choice!r}")
    if choice == "numba" and not _HAVE_NUMBA:
        raise ParameterError("numba engine requested but numba is unavailable")
    if choice == "auto":
        if _HAVE_NUMBA and n_vertices >= _NUMBA_MIN_VERTICES:
            return "numba"
        return "python"
    return choice


def _search(
    words: tuple[int, ...],
    nbits: int,
    d: int,
    upper: int,
    node_budget: int,
    engine: str | None,
    method: str,
    extra_seed: tuple[int, ...] = (),
) -> OracleResult:
    """Greedy seed, then branch and bound against the proven upper bound."""
    adj = _build_adjacency(words, nbits, d)
    n = len(adj)
    seed = _clique.greedy_clique(adj)
    order = _clique.degree_descending_order(adj)
    alt = _clique.greedy_clique(adj, order)
    if len(alt) > len(seed):
        seed = alt
    if len(extra_seed) > len(seed):
        index = {x: i for i, x in enumerate(words)}
        mapped = [index[x] for x in extra_seed if x in index]
        if len(mapped) == len(extra_seed):
            seed = mapped
    if len(seed) >= upper:
        wit = tuple(sorted(words[v] for v in seed))
        return _exact(len(seed), method + "+greedy-meets-bound", wit)

    rel_adj = _clique.relabel(adj, order)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    rel_seed = [pos[v] for v in seed]

    eng = _pick_engine(n, engine)
    if eng == "numba":
        size, members, nodes, completed = _clique_numba.max_clique_numba(
            rel_adj,
            initial_best=rel_seed,
            node_budget=node_budget,
            stop_at=upper,
            depth_cap=min(n, upper) + 1,
        )
    else:
        res = _clique.max_clique(
            rel_adj, initial_best=rel_seed, node_budget=node_budget, stop_at=upper
        )
        size, members, nodes, completed = res.size, res.members, res.nodes, res.completed

    witness = tuple(sorted(words[order[v]] for v in members))
    label = f"{method}+branch-and-bound[{eng}]"
    if completed:
        return OracleResult(size, size, EXACT, label, witness, nodes)
    return OracleResult(size, upper, BUDGET_EXCEEDED, label, witness, nodes)


# ---------------------------------------------------------------------------
# witness hunting via cyclic symmetry
#
# Strong codes tend to admit automorphisms.  Under a cyclic coordinate
# permutation that preserves the space, words group into orbits, and a set of
# pairwise-compatible orbits is itself a code.  The orbit graph is tiny, so
# an exact clique run on it (plus a first-fit extension over leftover words)
# digs up structured witnesses that plain greedy misses.

_INVARIANT_WORD_LIMIT = 1 << 16
_INVARIANT_NODE_BUDGET = 300_000
_INVARIANT_MAX_ORBITS = 2048


def _apply_perm(x: int, perm: tuple[int, ...]) -> int:
    y = 0
    for i, src in enumerate(perm):
        if (x >> src) & 1:
            y |= 1 << i
    return y


def _seed_generators(kind: str, m: int, L: int, nbits: int) -> list[tuple[int, ...]]:
    """Cyclic coordinate permutations that preserve the given space."""
    gens = []
    if kind in ("ALL", "CWC", "HWC"):
        gens.append(tuple((i + 1) % nbits for i in range(nbits)))
        if nbits >= 4:
            fixed = tuple((i + 1) % (nbits - 1) for i in range(nbits - 1)) + (nbits - 1,)
            gens.append(fixed)
    else:
        if m >= 2:
            gens.append(tuple((i + L) % nbits for i in range(nbits)))
        if L >= 2:
            gens.append(tuple((i // L) * L + ((i % L) + 1) % L for i in range(nbits)))
    return gens


def _invariant_lower(
    kind: str,
    m: int,
    L: int,
    nbits: int,
    d: int,
    words: tuple[int, ...],
    upper: int,
) -> tuple[int, ...]:
    """Best code found as an orbit union of a cyclic symmetry, then extended."""
    if len(words) > _INVARIANT_WORD_LIMIT:
        return ()
    best: tuple[int, ...] = ()
    for g in _seed_generators(kind, m, L, nbits):
        seen: set[int] = set()
        orbits: list[list[int]] = []
        for x in words:
            if x in seen:
                continue
            orb = [x]
            y = _apply_perm(x, g)
            while y != x:
                orb.append(y)
                y = _apply_perm(y, g)
            seen.update(orb)
            orbits.append(orb)
        gsize = max(len(o) for o in orbits)
        if gsize == 1:
            continue
        # full orbits whose internal distances clear d; the action is cyclic,
        # so checking the first word against the rest of its orbit suffices
        nodes = [
            o
            for o in orbits
            if len(o) == gsize and all((o[0] ^ y).bit_count() >= d for y in o[1:])
        ]
        if not nodes or len(nodes) > _INVARIANT_MAX_ORBITS:
            continue
        k = len(nodes)
        adj = [0] * k
        for i in range(k):
            xi = nodes[i][0]
            for j in range(i + 1, k):
                if all((xi ^ y).bit_count() >= d for y in nodes[j]):
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
        res = _clique.max_clique(
            adj,
            initial_best=_clique.greedy_clique(adj),
            node_budget=_INVARIANT_NODE_BUDGET,
            stop_at=-(-upper // gsize),
        )
        code = sorted(x for v in res.members for x in nodes[v])
        for x in words:
            if all((x ^ c).bit_count() >= d for c in code):
                code.append(x)
        if len(code) > len(best):
            best = tuple(sorted(code))
    return best


# ---------------------------------------------------------------------------
# symmetry-reduced search for permutation-invariant spaces
#
# The word spaces handled here (whole space, fixed weight, weight at least w)
# are preserved by every coordinate permutation, and the whole space also by
# translations x -> x ^ t.  Distances are permutation-invariant, so any
# maximum code can be mapped to one whose first few words are canonical orbit
# representatives.  Branching only over representatives shrinks the top of
# the search tree by the orbit sizes; plain branch-and-bound finishes the
# small residual subproblems.  This is what makes the dense odd-distance
# instances (2^8 words and up) provable within a desk-scale node budget.

# Leaf threshold: below this many candidates the coloring-based bound of the
# plain engines out-prunes the orbit argument.
_SYM_LEAF_SIZE = 140
_SYM_MAX_LEVELS = 6


def _refine_classes(classes: list[int], word: int) -> list[int]:
    """Split coordinate classes by the new word's support.

    A class is a bitmask of coordinates that the prefix words cannot tell
    apart; permutations within classes fix every prefix word.
    """
    out = []
    for mask in classes:
        inside = mask & word
        outside = mask & ~word
        if inside:
            out.append(inside)
        if outside:
            out.append(outside)
    return out


def _orbit_groups(cands: list[int], classes: list[int]) -> list[list[int]]:
    """Group candidates by per-class occupancy.

    Words with equal counts of ones in every class are related by a
    class-preserving permutation, so one representative per group suffices.
    Groups are ordered largest first (their exclusion shrinks later branches
    the most), ties by smallest member.
    """
    groups: dict[tuple[int, ...], list[int]] = {}
    for x in cands:
        sig = tuple((x & mask).bit_count() for mask in classes)
        groups.setdefault(sig, []).append(x)
    return sorted(groups.values(), key=lambda g: (-len(g), g[0]))


class _SymClique:
    """Driver state for the orbit-representative prefix search."""

    def __init__(self, nbits: int, d: int, upper: int, node_budget: int, engine: str | None):
        self.nbits = nbits
        self.d = d
        self.upper = upper
        self.budget = node_budget
        self.engine = engine
        self.nodes = 0
        self.exhausted = False
        self.best_size = 0
        self.best_words: tuple[int, ...] = ()

    def _offer(self, words: tuple[int, ...]) -> None:
        if len(words) > self.best_size:
            self.best_size = len(words)
            self.best_words = tuple(sorted(words))

    def _done(self) -> bool:
        return self.exhausted or self.best_size >= self.upper

    def explore(self, prefix: tuple[int, ...], cands: list[int], classes: list[int]) -> None:
        if self._done():
            return
        depth = len(prefix)
        self._offer(prefix)
        if self._done() or not cands:
            return
        groups: list[list[int]] | None = None
        if len(cands) > _SYM_LEAF_SIZE and depth < _SYM_MAX_LEVELS:
            groups = _orbit_groups(cands, classes)
            if 2 * len(groups) > len(cands):
                groups = None  # symmetry largely spent; coloring prunes better
        if groups is None:
            remaining = self.budget - self.nodes
            if remaining <= 0:
                self.exhausted = True
                return
            leaf_upper = min(len(cands), self.upper - depth)
            res = _search(
                tuple(cands), self.nbits, self.d, leaf_upper, remaining, self.engine, "leaf"
            )
            self.nodes += res.nodes
            if res.witness:
                self._offer(prefix + res.witness)
            if res.status != EXACT:
                self.exhausted = True
            return
        excluded: set[int] = set()
        for grp in groups:
            rep = grp[0]
            self.nodes += 1
            if self.nodes > self.budget:
                self.exhausted = True
                return
            branch = [
                x for x in cands if x not in excluded and (x ^ rep).bit_count() >= self.d
            ]
            if depth + 1 + len(branch) > self.best_size:
                self.explore(prefix + (rep,), branch, _refine_classes(classes, rep))
                if self._done():
                    return
            excluded.update(grp)


def _solve_words_symmetric(
    words: tuple[int, ...],
    nbits: int,
    d: int,
    upper: int,
    node_budget: int,
    engine: str | None,
    method: str,
    fix_first: int | None,
    extra_seed: tuple[int, ...] = (),
    initial_classes: list[int] | None = None,
) -> OracleResult:
    """Exact maximum code over a permutation-invariant word set.

    fix_first is a word that some maximum code is guaranteed to contain
    (callers supply it only when the space is transitive under its
    automorphisms); None branches over first-level orbits instead.
    initial_classes restricts the exploited symmetry to permutations within
    the given coordinate groups (e.g. one group per subblock); the default is
    one group spanning all coordinates.
    """
    adj = _build_adjacency(words, nbits, d)
    seed = _clique.greedy_clique(adj)
    alt = _clique.greedy_clique(adj, _clique.degree_descending_order(adj))
    if len(alt) > len(seed):
        seed = alt
    search = _SymClique(nbits, d, upper, node_budget, engine)
    search._offer(tuple(words[v] for v in seed))
    search._offer(extra_seed)
    label = f"{method}+orbit-prefix"
    if search.best_size < upper:
        classes = initial_classes if initial_classes else [(1 << nbits) - 1]
        if fix_first is None:
            search.explore((), list(words), classes)
        else:
            cands = [x for x in words if (x ^ fix_first).bit_count() >= d]
            search.explore((fix_first,), cands, _refine_classes(classes, fix_first))
    else:
        label = f"{method}+greedy-meets-bound"
    if search.exhausted:
        return OracleResult(
            search.best_size, upper, BUDGET_EXCEEDED, label, search.best_words, search.nodes
        )
    return _exact(search.best_size, label, search.best_words, search.nodes)


# ---------------------------------------------------------------------------
# per-family solvers over canonical keys


def _first_word(kind: str, m: int, L: int, w_s: int) -> int:
    """Lexicographically smallest word of the space (packed)."""
    if kind in ("CSCC", "SECC"):
        sub = (1 << w_s) - 1
        x = 0
        for _ in range(m):
            x = (x << L) | sub
        return x
    if kind in ("CWC", "HWC"):
        return (1 << (m * w_s)) - 1
    return 0


def _max_space_distance(kind: str, m: int, L: int, w_s: int) -> int:
    n, w = m * L, m * w_s
    if kind == "UNCONSTRAINED":
        return n
    if kind == "CWC":
        return 2 * min(w, n - w)
    if kind == "HWC":
        return n if 2 * w <= n else 2 * (n - w)
    if kind == "CSCC":
        return 2 * m * min(w_s, L - w_s)
    # SECC
    return m * (L if 2 * w_s <= L else 2 * (L - w_s))


def _witness_if_small(kind: str, m: int, L: int, w_s: int, size: int, cap: int):
    if size > cap:
        return None
    return _space_words(kind, m, L, w_s, cap)


def _solve_a(n: int, d: int, cap: int, budget: int, engine: str | None) -> OracleResult:
    if not 1 <= d <= n:
        raise ParameterError(f"need 1 <= d <= n, got d={d}, n={n}")
    key = ("A", n, d)
    hit = _cache_get(key, budget)
    if hit is not None:
        return hit
    if d == 1:
        size = 1 << n
        wit = tuple(range(size)) if size <= cap else None
        return _cache_put(key, _exact(size, "whole-space", wit), budget)
    if d == n:
        return _cache_put(key, _exact(2, "repetition", (0, (1 << n) - 1)), budget)
    if d % 2 == 0:
        # append an overall parity bit to an (n-1, d-1) code
        inner = _solve_a(n - 1, d - 1, cap, budget, engine)
        res = _map_witness(inner, lambda x: (x << 1) | (x.bit_count() & 1), "parity-extend")
        return _cache_put(key, res, budget)
    size = 1 << n
    if size > cap:
        raise ResourceCapError(
            f"unconstrained space 2^{n} over cap {cap}", required=size, cap=cap
        )
    words = _space_words("ALL", 1, n, 0, cap)
    up = _upper_a(n, d)
    aux = _invariant_lower("ALL", 1, n, n, d, words, up)
    if size > _SYM_LEAF_SIZE:
        # translations make the space transitive: some optimum contains 0
        res = _solve_words_symmetric(words, n, d, up, budget, engine, "A", 0, aux)
    else:
        res = _search(words, n, d, up, budget, engine, "A", aux)
    return _cache_put(key, res, budget)


def _solve_cwc(n: int, d: int, w: int, cap: int, budget: int, engine: str | None) -> OracleResult:
    if not (1 <= d <= n and 0 <= w <= n):
        raise ParameterError(f"invalid CWC parameters n={n}, d={d}, w={w}")
    if 2 * w > n:
        inner = _solve_cwc(n, d, n - w, cap, budget, engine)
        mask = (1 << n) - 1
        return _map_witness(inner, lambda x: x ^ mask, "complement")
    if d % 2 == 1 and d < n:
        d += 1  # within-weight-class distances are even
    key = ("CWC", n, d, w)
    hit = _cache_get(key, budget)
    if hit is not None:
        return hit
    space = binomial(n, w)
    if space == 1:
        return _cache_put(key, _exact(1, "single-word", ((1 << w) - 1,)), budget)
    if d > _max_space_distance("CWC", 1, n, w):
        return _cache_put(key, _exact(1, "distance-unreachable", ((1 << w) - 1,)), budget)
    if d <= 2:
        wit = _witness_if_small("CWC", 1, n, w, space, cap)
        return _cache_put(key, _exact(space, "whole-space", wit), budget)
    if space > cap:
        raise ResourceCapError(f"CWC space {space} over cap {cap}", required=space, cap=cap)
    words = _space_words("CWC", 1, n, w, cap)
    up = _upper_cwc(n, d, w)
    aux = _invariant_lower("CWC", 1, n, n, d, words, up)
    if space > _SYM_LEAF_SIZE:
        # coordinate permutations act transitively on weight-w words
        res = _solve_words_symmetric(
            words, n, d, up, budget, engine, "CWC", (1 << w) - 1, aux
        )
    else:
        res = _search(words, n, d, up, budget, engine, "CWC", aux)
    return _cache_put(key, res, budget)


def _solve_hwc(n: int, d: int, w: int, cap: int, budget: int, engine: str | None) -> OracleResult:
    if not (1 <= d <= n and 0 <= w <= n):
        raise ParameterError(f"invalid HWC parameters n={n}, d={d}, w={w}")
    if w == 0:
        return _solve_a(n, d, cap, budget, engine)
    key = ("HWC", n, d, w)
    hit = _cache_get(key, budget)
    if hit is not None:
        return hit
    space = binomial_tail_sum(n, w)
    if space == 1:
        return _cache_put(key, _exact(1, "single-word", ((1 << n) - 1,)), budget)
    if d > _max_space_distance("HWC", 1, n, w):
        return _cache_put(key, _exact(1, "distance-unreachable", ((1 << w) - 1,)), budget)
    if d == 1:
        wit = _witness_if_small("HWC", 1, n, w, space, cap)
        return _cache_put(key, _exact(space, "whole-space", wit), budget)
    if space > cap:
        raise ResourceCapError(f"HWC space {space} over cap {cap}", required=space, cap=cap)
    words = _space_words("HWC", 1, n, w, cap)
    if d == 2:
        size, wit = _max_code_d2(list(words), n)
        return _cache_put(key, _exact(size, "bipartite-matching", wit), budget)
    up = _upper_hwc(n, d, w)
    aux = _invariant_lower("HWC", 1, n, n, d, words, up)
    if space > _SYM_LEAF_SIZE:
        # permutation-invariant but not transitive: branch over orbits
        res = _solve_words_symmetric(words, n, d, up, budget, engine, "HWC", None, aux)
    else:
        res = _search(words, n, d, up, budget, engine, "HWC", aux)
    return _cache_put(key, res, budget)


def _solve_cscc(m: int, L: int, d: int, w_s: int, cap: int, budget: int, engine: str | None) -> OracleResult:
    params = CodeParams(m, L, d, w_s)  # validates ranges
    if m == 1:
        return _solve_cwc(L, d, w_s, cap, budget, engine)
    if 2 * w_s > L:
        inner = _solve_cscc(m, L, d, L - w_s, cap, budget, engine)
        mask = (1 << (m * L)) - 1
        return _map_witness(inner, lambda x: x ^ mask, "complement")
    if d % 2 == 1 and d < m * L:
        d += 1  # within-space distances are even
    key = ("CSCC", m, L, d, w_s)
    hit = _cache_get(key, budget)
    if hit is not None:
        return hit
    space = space_size(params, "CSCC")
    if space == 1:
        return _cache_put(key, _exact(1, "single-word", (_first_word("CSCC", m, L, w_s),)), budget)
    if d > _max_space_distance("CSCC", m, L, w_s):
        return _cache_put(key, _exact(1, "distance-unreachable", (_first_word("CSCC", m, L, w_s),)), budget)
    if d <= 2:
        wit = _witness_if_small("CSCC", m, L, w_s, space, cap)
        return _cache_put(key, _exact(space, "whole-space", wit), budget)
    if space > cap:
        raise ResourceCapError(f"CSCC space {space} over cap {cap}", required=space, cap=cap)
    words = _space_words("CSCC", m, L, w_s, cap)
    upper = _upper_cscc(m, L, d, w_s)
    if L == 2 and w_s == 1:
        # subblocks 01/10 relabel to single bits, halving every distance, so
        # the unconstrained length-m solver's upper bound transfers
        inner = _solve_a(m, d // 2, cap, budget, engine)
        upper = min(upper, inner.upper)
    aux = _invariant_lower("CSCC", m, L, m * L, d, words, upper)
    if space > _SYM_LEAF_SIZE:
        # within-subblock permutations preserve the space and act
        # transitively on it, so some optimum contains the first word
        blocks = [((1 << L) - 1) << (i * L) for i in range(m)]
        res = _solve_words_symmetric(
            words, m * L, d, upper, budget, engine, "CSCC",
            _first_word("CSCC", m, L, w_s), aux, blocks,
        )
    else:
        res = _search(words, m * L, d, upper, budget, engine, "CSCC", aux)
    return _cache_put(key, res, budget)


def _solve_secc(m: int, L: int, d: int, w_s: int, cap: int, budget: int, engine: str | None) -> OracleResult:
    params = CodeParams(m, L, d, w_s)
    if w_s == 0:
        return _solve_a(m * L, d, cap, budget, engine)
    if m == 1:
        return _solve_hwc(L, d, w_s, cap, budget, engine)
    key = ("SECC", m, L, d, w_s)
    hit = _cache_get(key, budget)
    if hit is not None:
        return hit
    space = space_size(params, "SECC")
    if space == 1:
        return _cache_put(key, _exact(1, "single-word", (_first_word("SECC", m, L, w_s),)), budget)
    if d > _max_space_distance("SECC", m, L, w_s):
        return _cache_put(key, _exact(1, "distance-unreachable", (_first_word("SECC", m, L, w_s),)), budget)
    if d == 1:
        wit = _witness_if_small("SECC", m, L, w_s, space, cap)
        return _cache_put(key, _exact(space, "whole-space", wit), budget)
    if space > cap:
        raise ResourceCapError(f"SECC space {space} over cap {cap}", required=space, cap=cap)
    words = _space_words("SECC", m, L, w_s, cap)
    if d == 2:
        size, wit = _max_code_d2(list(words), m * L)
        return _cache_put(key, _exact(size, "bipartite-matching", wit), budget)
    up = _upper_secc(m, L, d, w_s)
    aux = _invariant_lower("SECC", m, L, m * L, d, words, up)
    if space > _SYM_LEAF_SIZE:
        # within-subblock permutations preserve the space but are not
        # transitive (weight profiles differ): branch over profile orbits
        blocks = [((1 << L) - 1) << (i * L) for i in range(m)]
        res = _solve_words_symmetric(
            words, m * L, d, up, budget, engine, "SECC", None, aux, blocks
        )
    else:
        res = _search(words, m * L, d, up, budget, engine, "SECC", aux)
    return _cache_put(key, res, budget)


# ---------------------------------------------------------------------------
# public surface


def solve(
    params: CodeParams,
    kind: str,
    *,
    cap: int = DEFAULT_SPACE_CAP,
    node_budget: int = DEFAULT_NODE_BUDGET,
    engine: str | None = None,
) -> OracleResult:
    """Exact size (or proven bracket) for the chosen space and distance."""
    k = kind.upper()
    if k == "UNCONSTRAINED" or k == "ALL":
        return _solve_a(params.n, params.d, cap, node_budget, engine)
    if k == "CWC":
        return _solve_cwc(params.n, params.d, params.w, cap, node_budget, engine)
    if k == "HWC":
        return _solve_hwc(params.n, params.d, params.w, cap, node_budget, engine)
    if k == "CSCC":
        return _solve_cscc(params.m, params.L, params.d, params.w_s, cap, node_budget, engine)
    if k == "SECC":
        return _solve_secc(params.m, params.L, params.d, params.w_s, cap, node_budget, engine)
    raise ParameterError(f"unknown oracle kind {kind!r}; expected one of {ORACLE_KINDS}")


def exact_size(
    params: CodeParams,
    kind: str,
    *,
    cap: int = DEFAULT_SPACE_CAP,
    node_budget: int = DEFAULT_NODE_BUDGET,
    engine: str | None = None,
) -> int:
    """Exact optimal size; raises BudgetExceededError if not proven in budget."""
    return solve(params, kind, cap=cap, node_budget=node_budget, engine=engine).size


def verify_code(words, d: int, kind: str, params: CodeParams) -> bool:
    """True iff the words lie in the stated space and pairwise distances >= d."""
    k = kind.upper()
    if k not in ORACLE_KINDS and k != "ALL":
        raise ParameterError(f"unknown kind {kind!r}")
    m, L, w_s = params.m, params.L, params.w_s
    n, w = params.n, params.w
    mask = (1 << L) - 1
    seen = set()
    word_list = list(words)
    for x in word_list:
        if x < 0 or x >= (1 << n):
            return False
        if x in seen:
            return False
        seen.add(x)
        if k == "CWC" and x.bit_count() != w:
            return False
        if k == "HWC" and x.bit_count() < w:
            return False
        if k in ("CSCC", "SECC"):
            for i in range(m):
                sub_w = ((x >> (i * L)) & mask).bit_count()
                if k == "CSCC" and sub_w != w_s:
                    return False
                if k == "SECC" and sub_w < w_s:
                    return False
    for i, x in enumerate(word_list):
        for y in word_list[i + 1 :]:
            if (x ^ y).bit_count() < d:
                return False
    return True


def proven_bracket(
    params: CodeParams,
    kind: str,
    *,
    cap: int = DEFAULT_SPACE_CAP,
    node_budget: int = DEFAULT_NODE_BUDGET,
    engine: str | None = None,
) -> tuple[int, int]:
    """(lower, upper) bracket that is always proven, exact or not."""
    res = solve(params, kind, cap=cap, node_budget=node_budget, engine=engine)
    return res.lower, res.upper
