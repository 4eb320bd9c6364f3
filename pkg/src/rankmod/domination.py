"""Dominating sets in the rewrite graph: verification, prefix counting and
the size/rate bounds for full assignment codes."""

from __future__ import annotations

import itertools
import math

from . import _kernels
from .perms import Permutation, all_permutations

__all__ = [
    "is_dominating",
    "prefixes",
    "dominated_prefixes",
    "lower_bound",
    "rate_upper_bound",
    "greedy_partition_search",
]


def is_dominating(members, radius: int = 1) -> bool:
    """True iff every state can reach some member at cost <= radius.

    Members cover themselves at cost 0; coverage direction is an edge from
    the outside state into the set.
    """
    members = sorted(set(members))
    if not members:
        raise ValueError("empty candidate set")
    if radius < 1:
        raise ValueError("domination radius must be >= 1")
    n = members[0].n
    if any(m.n != n for m in members):
        raise ValueError("mixed sizes in candidate set")
    all_pos = _kernels.positions_array(all_permutations(n))
    mem_pos = _kernels.positions_array(members)
    return bool((_kernels.min_cost_to_set(all_pos, mem_pos) <= radius).all())


def prefixes(states, k: int) -> set:
    """Length n-k leading segments of the given states, as tuples."""
    states = list(states)
    if not states:
        return set()
    n = states[0].n
    if not (1 <= k <= n - 1):
        raise ValueError(f"k={k} out of range for n={n}")
    return {tuple(s.ranking[: n - k]) for s in states}


def dominated_prefixes(v: Permutation, k: int = 2) -> set:
    """Prefixes whose every completion has an edge of cost <= 1 into v."""
    n = v.n
    if not (1 <= k <= n - 1):
        raise ValueError(f"k={k} out of range for n={n}")
    pv = v.positions()
    out = set()
    for head in itertools.permutations(range(1, n + 1), n - k):
        rest = [c for c in range(1, n + 1) if c not in head]
        ok = True
        for tail in itertools.permutations(rest):
            w = Permutation(head + tail)
            pw = w.positions()
            if max(pv[c] - pw[c] for c in range(n)) > 1:
                ok = False
                break
        if ok:
            out.add(head)
    return out


def lower_bound(n: int) -> int:
    """Minimum size of a dominating set: ceil(n! / (3 * 2^(n-3)))."""
    if n < 3:
        raise ValueError("bound needs n >= 3")
    d = 3 * 2 ** (n - 3)
    return -(-math.factorial(n) // d)


def rate_upper_bound(n: int) -> float:
    """Rate limit for radius-1 full assignment codes, in bits per cell."""
    if n < 3:
        raise ValueError("bound needs n >= 3")
    return 1.0 - math.log2(8 / 3) / n


def greedy_partition_search(n: int, radius: int = 1) -> list:
    """Greedily partition S_n into dominating sets.

    Each set starts from the lexicographically smallest unassigned state and
    grows by the unassigned state covering the most still-uncovered vertices
    (lexicographic tie-break) until it dominates all of S_n.  Leftover states
    that cannot complete a dominating set are merged into the last one.
    """
    if n > 6:
        raise ValueError("greedy search is limited to n <= 6")
    if radius < 1:
        raise ValueError("domination radius must be >= 1")
    perms = all_permutations(n)
    pos = _kernels.positions_array(perms)
    table = _kernels.cost_rows(pos, pos)  # table[w, v] = cost(w -> v)
    m = len(perms)
    covers = [frozenset(w for w in range(m) if table[w, v] <= radius) for v in range(m)]

    pool = set(range(m))
    groups = []
    while pool:
        seed = min(pool)
        group = [seed]
        covered = set(covers[seed])
        pool.discard(seed)
        while len(covered) < m:
            best = None
            best_gain = -1
            for v in sorted(pool):
                gain = len(covers[v] - covered)
                if gain > best_gain:
                    best, best_gain = v, gain
            if best is None or best_gain == 0:
                break
            group.append(best)
            covered |= covers[best]
            pool.discard(best)
        if len(covered) < m:
            # cannot dominate with what is left; fold into the previous set
            if not groups:
                raise RuntimeError(f"no dominating partition found for n={n}, r={radius}")
            groups[-1].extend(group)
        else:
            groups.append(group)
    return [sorted(perms[v] for v in g) for g in groups]
