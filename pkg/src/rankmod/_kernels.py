"""Hot numeric kernels: rewrite-cost tables over batches of permutations.

Two interchangeable backends: numba @njit loops (default) and vectorized
numpy.  Set RANKMOD_NO_NUMBA=1 to force the numpy path; the active backend
is reported in IMPLEMENTATION.

All kernel inputs are rank-position arrays: row w has w[cell] = 0-based rank
of that cell.  The cost of moving from state u to state v is the maximum
rank increase over cells, max_c (rank_v(c) - rank_u(c)).
"""

from __future__ import annotations

import os

import numpy as np

_FORCE_NUMPY = os.environ.get("RANKMOD_NO_NUMBA", "").lower() in ("1", "true", "yes")


def _cost_rows_numpy(pos_from: np.ndarray, pos_to: np.ndarray) -> np.ndarray:
    """(m,k) table of costs from each source row to each target row."""
    pos_from = np.asarray(pos_from, dtype=np.int64)
    pos_to = np.asarray(pos_to, dtype=np.int64)
    m = pos_from.shape[0]
    k = pos_to.shape[0]
    out = np.empty((m, k), dtype=np.int64)
    # row-at-a-time to keep the broadcast buffer small
    for i in range(m):
        out[i] = (pos_to - pos_from[i]).max(axis=1)
    return out


def _min_cost_to_set_numpy(pos_from: np.ndarray, pos_targets: np.ndarray) -> np.ndarray:
    """(m,) minimum cost from each source row into a set of target rows."""
    pos_from = np.asarray(pos_from, dtype=np.int64)
    pos_targets = np.asarray(pos_targets, dtype=np.int64)
    m = pos_from.shape[0]
    out = np.empty(m, dtype=np.int64)
    for i in range(m):
        out[i] = (pos_targets - pos_from[i]).max(axis=1).min()
    return out


def _cost_rows_loops(pos_from, pos_to):
    m, n = pos_from.shape
    k = pos_to.shape[0]
    out = np.empty((m, k), dtype=np.int64)
    for i in range(m):
        for j in range(k):
            best = pos_to[j, 0] - pos_from[i, 0]
            for c in range(1, n):
                d = pos_to[j, c] - pos_from[i, c]
                if d > best:
                    best = d
            out[i, j] = best
    return out


def _min_cost_to_set_loops(pos_from, pos_targets):
    m, n = pos_from.shape
    k = pos_targets.shape[0]
    out = np.empty(m, dtype=np.int64)
    for i in range(m):
        lo = n  # cost never exceeds n-1
        for j in range(k):
            best = pos_targets[j, 0] - pos_from[i, 0]
            for c in range(1, n):
                d = pos_targets[j, c] - pos_from[i, c]
                if d > best:
                    best = d
            if best < lo:
                lo = best
        out[i] = lo
    return out


if not _FORCE_NUMPY:
    try:
        import numba as nb
    except ImportError:
        _FORCE_NUMPY = True

if _FORCE_NUMPY:
    IMPLEMENTATION = "numpy"
    cost_rows = _cost_rows_numpy
    min_cost_to_set = _min_cost_to_set_numpy
else:
    IMPLEMENTATION = "numba"
    cost_rows = nb.njit(cache=True)(_cost_rows_loops)
    min_cost_to_set = nb.njit(cache=True)(_min_cost_to_set_loops)


def positions_array(perms) -> np.ndarray:
    """Stack rank-position rows for a sequence of Permutation objects."""
    return np.array([p.positions() for p in perms], dtype=np.int64) - 1
