"""Exact maximum-clique search, pure-Python engine.

Branch and bound in the style of Tomita's MCS / San Segundo's bitset
solvers: candidates are greedily colored, colors bound the residual clique
size, and branching proceeds from the highest color down. Vertex sets are
Python ints used as bitsets, so the same code handles any graph size.

The search is single-threaded and counts tree nodes against a budget, which
makes every outcome (including "ran out of budget") a deterministic
function of the input graph and the budget.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass


@dataclass(frozen=True)
class CliqueSearchResult:
    size: int
    members: tuple[int, ...]
    nodes: int
    completed: bool


def greedy_clique(adj: list[int], order: list[int] | None = None) -> list[int]:
    """First-fit clique: scan vertices, keep any adjacent to all kept so far."""
    chosen_mask = 0
    chosen: list[int] = []
    for v in order if order is not None else range(len(adj)):
        if chosen_mask & ~adj[v] == 0:
            chosen.append(v)
            chosen_mask |= 1 << v
    return chosen


def degree_descending_order(adj: list[int]) -> list[int]:
    """Vertices by degree descending, index ascending on ties."""
    return sorted(range(len(adj)), key=lambda v: (-bin(adj[v]).count("1"), v))


def relabel(adj: list[int], order: list[int]) -> list[int]:
    """Adjacency bitsets renamed so new vertex i is old vertex order[i]."""
    n = len(adj)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    out = [0] * n
    for i, v in enumerate(order):
        mask = adj[v]
        new_mask = 0
        while mask:
            b = mask & -mask
            mask ^= b
            new_mask |= 1 << pos[b.bit_length() - 1]
        out[i] = new_mask
    return out


def _color_sort(p_mask: int, adj: list[int]) -> tuple[list[int], list[int]]:
    """Greedy coloring of the candidate set; returns vertices in ascending
    color order with their color numbers (an upper bound for prefixes)."""
    order: list[int] = []
    colors: list[int] = []
    remaining = p_mask
    color = 0
    while remaining:
        color += 1
        avail = remaining
        while avail:
            b = avail & -avail
            v = b.bit_length() - 1
            remaining ^= b
            avail = (avail ^ b) & ~adj[v]
            order.append(v)
            colors.append(color)
    return order, colors


def max_clique(
    adj: list[int],
    *,
    initial_best: list[int] | None = None,
    node_budget: int = 10**9,
    stop_at: int | None = None,
) -> CliqueSearchResult:
    """Maximum clique of the graph given by adjacency bitsets.

    ``initial_best`` seeds the incumbent (it must be a valid clique);
    ``stop_at`` lets the caller stop as soon as the incumbent matches an
    externally proven upper bound. When the node budget runs out the result
    has completed=False and carries the best clique found so far.
    """
    n = len(adj)
    best_members: list[int] = list(initial_best or [])
    best = len(best_members)
    if n == 0 or (stop_at is not None and best >= stop_at):
        return CliqueSearchResult(best, tuple(sorted(best_members)), 0, True)

    # Recursion depth tracks the incumbent clique size, bounded by n.
    if sys.getrecursionlimit() < n + 200:
        sys.setrecursionlimit(n + 200)

    nodes = 0
    out_of_budget = False
    proven_by_stop = False
    stack: list[int] = []

    def expand(p_mask: int, depth: int) -> None:
        nonlocal best, best_members, nodes, out_of_budget, proven_by_stop
        nodes += 1
        if nodes > node_budget:
            out_of_budget = True
            return
        order, colors = _color_sort(p_mask, adj)
        for i in range(len(order) - 1, -1, -1):
            if out_of_budget or proven_by_stop:
                return
            if depth + colors[i] <= best:
                return
            v = order[i]
            stack.append(v)
            new_p = p_mask & adj[v]
            if new_p:
                expand(new_p, depth + 1)
            elif depth + 1 > best:
                best = depth + 1
                best_members = stack.copy()
                if stop_at is not None and best >= stop_at:
                    proven_by_stop = True
                    stack.pop()
                    return
            stack.pop()
            p_mask &= ~(1 << v)

    expand((1 << n) - 1, 0)
    completed = proven_by_stop or not out_of_budget
    return CliqueSearchResult(best, tuple(sorted(best_members)), nodes, completed)
