"""Transition balls and degrees in the rewrite graph on S_n.

The graph has an edge u -> v exactly when cost(u,v) = 1; the radius-r ball
around u collects the states reachable at cost at most r and has size
r!(r+1)^(n-r) independent of the center.
"""

from __future__ import annotations

import itertools
import math

from .perms import Permutation

__all__ = [
    "ball_size_formula",
    "ball_enumerate",
    "neighbors",
    "infinity_ball_count",
]


def _check_radius(n: int, r: int):
    if not (0 <= r <= n - 1):
        raise ValueError(f"radius {r} out of range for n={n}")


def ball_size_formula(n: int, r: int) -> int:
    """Closed-form ball size r!(r+1)^(n-r)."""
    _check_radius(n, r)
    return math.factorial(r) * (r + 1) ** (n - r)


def _place(cells: tuple, r: int) -> list:
    # Highest-ranked remaining cell can land in one of the first r+1 slots
    # of the target; below r+2 cells every arrangement is within cost r.
    n = len(cells)
    if n <= r + 1:
        return [list(p) for p in itertools.permutations(cells)]
    head = cells[0]
    out = []
    for sub in _place(cells[1:], r):
        for p in range(r + 1):
            out.append(sub[:p] + [head] + sub[p:])
    return out


def ball_enumerate(center: Permutation, radius: int) -> list:
    """All states within the given cost radius, in lexicographic order."""
    _check_radius(center.n, radius)
    found = _place(tuple(center.ranking), radius)
    return sorted(Permutation(v) for v in found)


def neighbors(u: Permutation) -> list:
    """Cost-1 out-neighbors of u, in lexicographic order."""
    if u.n == 1:
        return []
    return [v for v in ball_enumerate(u, 1) if v != u]


def infinity_ball_count(u: Permutation, r: int) -> int:
    """Number of states whose every cell moves at most r ranks in either
    direction, counted by exhaustive placement."""
    _check_radius(u.n, r)
    n = u.n
    # rank i in the new state may hold any cell whose old rank is within r
    old_rank = u.positions()
    used = [False] * (n + 1)

    def count(i: int) -> int:
        if i > n:
            return 1
        total = 0
        for c in range(1, n + 1):
            if not used[c] and abs(i - old_rank[c - 1]) <= r:
                used[c] = True
                total += count(i + 1)
                used[c] = False
        return total

    return count(1)
