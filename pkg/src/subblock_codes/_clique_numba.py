"""Exact maximum-clique search, numba engine.

Same branch-and-bound algorithm as the pure-Python engine (greedy coloring
bound, branch from highest color down), but iterative, on a packed
uint64[n, words] adjacency matrix, compiled with numba. Explores the same
tree in the same order, so the two engines agree node for node; this one is
just much faster on the multi-thousand-vertex graphs.

Single-threaded by design: results and node counts are deterministic.
"""

from __future__ import annotations

import numpy as np
from numba import njit

ALL_ONES = np.uint64(0xFFFFFFFFFFFFFFFF)


@njit(cache=True, inline="always")
def _ctz(x: np.uint64) -> int:
    """Index of the lowest set bit (x must be nonzero)."""
    n = 0
    if x & np.uint64(0xFFFFFFFF) == np.uint64(0):
        x >>= np.uint64(32)
        n += 32
    if x & np.uint64(0xFFFF) == np.uint64(0):
        x >>= np.uint64(16)
        n += 16
    if x & np.uint64(0xFF) == np.uint64(0):
        x >>= np.uint64(8)
        n += 8
    if x & np.uint64(0xF) == np.uint64(0):
        x >>= np.uint64(4)
        n += 4
    if x & np.uint64(0x3) == np.uint64(0):
        x >>= np.uint64(2)
        n += 2
    if x & np.uint64(0x1) == np.uint64(0):
        n += 1
    return n


@njit(cache=True, inline="always")
def _color_sort(adj, p_row, order_row, color_row, cur, avail, nwords):
    """Greedy-color the candidate set; fill (vertex, color) ascending by color."""
    cnt = 0
    for k in range(nwords):
        cur[k] = p_row[k]
    color = 0
    while True:
        nonempty = False
        for k in range(nwords):
            if cur[k] != np.uint64(0):
                nonempty = True
                break
        if not nonempty:
            break
        color += 1
        for k in range(nwords):
            avail[k] = cur[k]
        k = 0
        while k < nwords:
            x = avail[k]
            if x == np.uint64(0):
                k += 1
                continue
            b = x & ((~x) + np.uint64(1))
            v = (k << 6) + _ctz(b)
            avail[k] = x ^ b
            cur[k] = cur[k] ^ b
            for j in range(nwords):
                avail[j] &= ~adj[v, j]
            order_row[cnt] = v
            color_row[cnt] = color
            cnt += 1
    return cnt


@njit(cache=True)
def _bbmc(adj, n, nwords, init_best, node_budget, stop_at, depth_cap, best_out):
    """Iterative branch and bound. Returns (best, best_len, nodes, completed).

    best_len is 0 when the incumbent never improved on init_best (the caller
    keeps its own witness in that case). completed=0 means the node budget
    ran out, so `best` is only a lower bound.
    """
    levels = depth_cap + 2
    p_sets = np.zeros((levels, nwords), np.uint64)
    orders = np.zeros((levels, n), np.int32)
    colors = np.zeros((levels, n), np.int32)
    ptrs = np.zeros(levels, np.int64)
    chosen = np.zeros(levels, np.int32)
    cur = np.zeros(nwords, np.uint64)
    avail = np.zeros(nwords, np.uint64)

    for k in range(nwords):
        p_sets[0, k] = ALL_ONES
    extra = nwords * 64 - n
    if extra > 0:
        p_sets[0, nwords - 1] >>= np.uint64(extra)

    best = init_best
    best_len = 0
    nodes = 1
    completed = 1

    cnt = _color_sort(adj, p_sets[0], orders[0], colors[0], cur, avail, nwords)
    ptrs[0] = cnt - 1
    level = 0

    while level >= 0:
        i = ptrs[level]
        if i < 0 or level + colors[level, i] <= best:
            # exhausted, or every remaining candidate color is too small
            level -= 1
            continue
        v = orders[level, i]
        ptrs[level] = i - 1
        word = v >> 6
        bit = np.uint64(1) << np.uint64(v & 63)
        p_sets[level, word] &= ~bit
        empty = True
        for k in range(nwords):
            t = p_sets[level, k] & adj[v, k]
            p_sets[level + 1, k] = t
            if t != np.uint64(0):
                empty = False
        chosen[level] = v
        if empty:
            if level + 1 > best:
                best = level + 1
                best_len = level + 1
                for j in range(best_len):
                    best_out[j] = chosen[j]
                if stop_at > 0 and best >= stop_at:
                    return best, best_len, nodes, 1
        else:
            nodes += 1
            if nodes > node_budget:
                completed = 0
                break
            level += 1
            cnt = _color_sort(
                adj, p_sets[level], orders[level], colors[level], cur, avail, nwords
            )
            ptrs[level] = cnt - 1

    return best, best_len, nodes, completed


def pack_adjacency(adj: list[int], n: int) -> np.ndarray:
    """Python-int bitsets -> uint64[n, ceil(n/64)] matrix."""
    nwords = max(1, (n + 63) // 64)
    out = np.zeros((n, nwords), np.uint64)
    mask = (1 << 64) - 1
    for v in range(n):
        row = adj[v]
        k = 0
        while row:
            out[v, k] = row & mask
            row >>= 64
            k += 1
    return out


def max_clique_numba(
    adj: list[int],
    *,
    initial_best: list[int] | None = None,
    node_budget: int = 10**9,
    stop_at: int | None = None,
    depth_cap: int | None = None,
):
    """Drop-in equivalent of the pure engine's max_clique, numba-compiled.

    Returns (size, members, nodes, completed). depth_cap must be at least
    the maximum possible clique size (any proper-coloring count works).
    """
    n = len(adj)
    seed = list(initial_best or [])
    best = len(seed)
    if n == 0 or (stop_at is not None and best >= stop_at):
        return best, tuple(sorted(seed)), 0, True
    if depth_cap is None:
        depth_cap = n
    packed = pack_adjacency(adj, n)
    nwords = packed.shape[1]
    best_out = np.full(n, -1, np.int32)
    size, best_len, nodes, completed = _bbmc(
        packed,
        n,
        nwords,
        best,
        node_budget,
        0 if stop_at is None else stop_at,
        depth_cap,
        best_out,
    )
    if best_len > 0:
        members = tuple(sorted(int(x) for x in best_out[:best_len]))
    else:
        members = tuple(sorted(seed))
    return int(size), members, int(nodes), bool(completed)
