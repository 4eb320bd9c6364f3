"""Virtual-level rewrite model: push plans, level evolution and rewrite cost.

For a current state u the cells u(1..n) carry virtual levels n..1.  A push-up
op raises one cell just above a set of other cells; the cost of a rewrite is
the resulting increase of the maximum virtual level.  The closed form
cost(u,v) = max_c (rank_v(c) - rank_u(c)) agrees with replaying the level
recursion; both routes are kept and cross-checked in the tests.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .perms import Permutation

__all__ = [
    "PushUpOp",
    "PushPlan",
    "initial_levels",
    "apply_op",
    "replay_plan",
    "induced_ranking",
    "minimal_push_up_plan",
    "push_to_top_plan",
    "cost_by_levels",
    "cost",
    "cost_table",
    "push_to_top_cost",
]

_OP_RE = re.compile(r"^\s*push\s+(\d+)\s+above\s+\{\s*(\d+(?:\s*,\s*\d+)*)\s*\}\s*$")


@dataclass(frozen=True)
class PushUpOp:
    """One programming step: raise `cell` just above the cells in `above`."""

    cell: int
    above: frozenset

    def __post_init__(self):
        if not self.above:
            raise ValueError("push-up needs a nonempty reference set")
        if self.cell in self.above:
            raise ValueError(f"cell {self.cell} cannot be pushed above itself")

    def __str__(self):
        return f"push {self.cell} above {{{','.join(str(c) for c in sorted(self.above))}}}"


@dataclass(frozen=True)
class PushPlan:
    """Ordered sequence of push-up ops."""

    ops: tuple

    def __len__(self):
        return len(self.ops)

    def __iter__(self):
        return iter(self.ops)

    def __str__(self):
        return "\n".join(str(op) for op in self.ops)

    @classmethod
    def parse(cls, text: str) -> "PushPlan":
        ops = []
        for line in text.splitlines():
            if not line.strip():
                continue
            m = _OP_RE.match(line)
            if not m:
                raise ValueError(f"malformed plan line: {line!r}")
            above = frozenset(int(x) for x in m.group(2).split(","))
            ops.append(PushUpOp(int(m.group(1)), above))
        return cls(tuple(ops))


def initial_levels(u: Permutation) -> tuple:
    """Levels n..1 assigned to u(1..n): entry c-1 is the level of cell c."""
    n = u.n
    lv = [0] * n
    for i in range(1, n + 1):
        lv[u.cell_at_rank(i) - 1] = n + 1 - i
    return tuple(lv)


def apply_op(levels: tuple, op: PushUpOp, forbid_lowering: bool = False) -> tuple:
    """Set the pushed cell's level to 1 + max over its reference set."""
    n = len(levels)
    if not (1 <= op.cell <= n) or any(not (1 <= c <= n) for c in op.above):
        raise ValueError(f"op {op} out of range for {n} cells")
    new = 1 + max(levels[c - 1] for c in op.above)
    if forbid_lowering and new < levels[op.cell - 1]:
        raise ValueError(f"op {op} would lower cell {op.cell} from {levels[op.cell - 1]} to {new}")
    out = list(levels)
    out[op.cell - 1] = new
    return tuple(out)


def replay_plan(u: Permutation, plan: PushPlan, forbid_lowering: bool = True) -> tuple:
    """Final levels after running a plan from the initial levels of u."""
    lv = initial_levels(u)
    for op in plan:
        lv = apply_op(lv, op, forbid_lowering=forbid_lowering)
    return lv


def induced_ranking(levels: tuple) -> Permutation:
    """Ranking read off strictly ordered levels; ties are rejected."""
    if len(set(levels)) != len(levels):
        raise ValueError(f"levels are not strictly ordered: {levels}")
    cells = sorted(range(1, len(levels) + 1), key=lambda c: -levels[c - 1])
    return Permutation(cells)


def _check_sizes(u: Permutation, v: Permutation):
    if u.n != v.n:
        raise ValueError(f"size mismatch: {u.n} vs {v.n}")


def minimal_push_up_plan(u: Permutation, v: Permutation) -> PushPlan:
    """Raise v(i) just above v(i+1), for i = n-1..1, skipping no-op steps."""
    _check_sizes(u, v)
    lv = list(initial_levels(u))
    ops = []
    for i in range(v.n - 1, 0, -1):
        cell = v.cell_at_rank(i)
        ref = v.cell_at_rank(i + 1)
        if lv[cell - 1] <= lv[ref - 1]:
            lv[cell - 1] = lv[ref - 1] + 1
            ops.append(PushUpOp(cell, frozenset({ref})))
    return PushPlan(tuple(ops))


def push_to_top_plan(u: Permutation, v: Permutation) -> PushPlan:
    """Push v(k), v(k-1), ..., v(1) above all other cells, where v(k+1..n) is
    the longest suffix of v appearing in u in order."""
    _check_sizes(u, v)
    n = u.n
    # longest suffix of v that is an in-order subsequence of u
    k = n
    pos = n + 1
    while k >= 1 and u.rank_of(v.cell_at_rank(k)) < pos:
        pos = u.rank_of(v.cell_at_rank(k))
        k -= 1
    all_cells = frozenset(range(1, n + 1))
    ops = tuple(
        PushUpOp(v.cell_at_rank(i), all_cells - {v.cell_at_rank(i)})
        for i in range(k, 0, -1)
    )
    return PushPlan(ops)


def cost_by_levels(u: Permutation, v: Permutation) -> int:
    """Two-loop virtual-level procedure: final top level minus n."""
    _check_sizes(u, v)
    n = u.n
    lv = list(initial_levels(u))
    for i in range(n - 1, 0, -1):
        a = v.cell_at_rank(i)
        b = v.cell_at_rank(i + 1)
        lv[a - 1] = max(lv[b - 1] + 1, lv[a - 1])
    return lv[v.cell_at_rank(1) - 1] - n


def cost(u: Permutation, v: Permutation) -> int:
    """Closed-form rewrite cost: maximum rank increase over the cells."""
    _check_sizes(u, v)
    pu = u.positions()
    pv = v.positions()
    return max(pv[c] - pu[c] for c in range(u.n))


def cost_table(sources, targets) -> np.ndarray:
    """Cost from every source to every target, as an (m,k) int array."""
    return _kernels.cost_rows(
        _kernels.positions_array(sources), _kernels.positions_array(targets)
    )


def push_to_top_cost(u: Permutation, v: Permutation) -> int:
    """Number of push-to-top operations needed to rewrite u into v."""
    return len(push_to_top_plan(u, v))
