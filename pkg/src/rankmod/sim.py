"""Rewrite-trace simulator: replay symbol streams against a code and compare
the minimal-push-up and push-to-top programming schemes.

Both schemes move to the same encoder-chosen target state; they differ only
in the charged cost (max rank increase vs number of full pushes).  Wear is
accumulated as n + sum of per-rewrite costs.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

import numpy as np

from .codes import RewriteCode, decode, encode
from .cost import (
    cost,
    induced_ranking,
    minimal_push_up_plan,
    push_to_top_plan,
    replay_plan,
)
from .perms import Permutation

__all__ = ["TraceStats", "run_trace", "compare_schemes", "SchemeComparison"]

SCHEMES = ("minpush", "pushtop")


@dataclass
class TraceStats:
    n: int
    scheme: str
    rewrites: int = 0
    total_cost: int = 0
    per_rewrite_costs: list = field(default_factory=list)
    rewrites_within_budget: int = 0
    final_state: Permutation | None = None
    max_virtual_level: int = 0

    @property
    def mean_cost(self) -> float:
        return self.total_cost / self.rewrites if self.rewrites else 0.0


def _step_cost(u: Permutation, v: Permutation, scheme: str, verify: bool) -> int:
    if scheme == "minpush":
        c = cost(u, v)
        if verify:
            plan = minimal_push_up_plan(u, v)
            levels = replay_plan(u, plan)
            assert induced_ranking(levels) == v
            assert max(levels) == u.n + c
        return c
    if scheme == "pushtop":
        plan = push_to_top_plan(u, v)
        if verify:
            levels = replay_plan(u, plan)
            assert induced_ranking(levels) == v
            assert max(levels) == u.n + len(plan)
        return len(plan)
    raise ValueError(f"unknown scheme {scheme!r}")


def run_trace(
    code: RewriteCode,
    start: Permutation,
    symbols,
    scheme: str,
    budget: int | None = None,
    rebase: bool = False,
    verify: bool = True,
) -> TraceStats:
    """Encode each symbol in turn, accumulating per-rewrite costs.

    With a budget, the trace stops before any rewrite that would lift the
    maximum virtual level beyond n + budget.  With rebase, levels are
    renumbered after every rewrite and the reported maximum level reflects
    the single most expensive step instead of the accumulated total.
    """
    if scheme not in SCHEMES:
        raise ValueError(f"unknown scheme {scheme!r}")
    u = start
    stats = TraceStats(n=code.n, scheme=scheme)
    for sym in symbols:
        res = encode(code, u, sym)
        c = _step_cost(u, res.new_state, scheme, verify)
        if budget is not None and stats.total_cost + c > budget and not rebase:
            break
        if budget is not None and rebase and c > budget:
            break
        stats.rewrites += 1
        stats.total_cost += c
        stats.per_rewrite_costs.append(c)
        u = res.new_state
    stats.final_state = u
    stats.rewrites_within_budget = stats.rewrites
    if rebase:
        stats.max_virtual_level = code.n + max(stats.per_rewrite_costs, default=0)
    else:
        stats.max_virtual_level = code.n + stats.total_cost
    return stats


def _random_state(rng, n: int) -> Permutation:
    return Permutation(rng.permutation(n) + 1)


def _random_symbols(rng, code: RewriteCode, start: Permutation, length: int) -> list:
    # a rewrite always changes the stored symbol
    out = []
    cur = decode(code, start)
    for _ in range(length):
        step = int(rng.integers(1, code.q))
        cur = (cur - 1 + step) % code.q + 1
        out.append(cur)
    return out


@dataclass
class SchemeComparison:
    trials: int
    trace_length: int
    seed: int
    budget: int | None
    rows: list  # dict per (scheme, trial)

    def mean_cost(self, scheme: str) -> float:
        rows = [r for r in self.rows if r["scheme"] == scheme]
        total = sum(r["total_cost"] for r in rows)
        rewrites = sum(r["rewrites"] for r in rows)
        return total / rewrites if rewrites else 0.0

    def mean_rewrites(self, scheme: str) -> float:
        rows = [r for r in self.rows if r["scheme"] == scheme]
        return sum(r["rewrites_within_budget"] for r in rows) / len(rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        fields = [
            "scheme",
            "trial",
            "rewrites",
            "total_cost",
            "mean_cost",
            "max_virtual_level",
            "rewrites_within_budget",
        ]
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        for r in self.rows:
            w.writerow({k: r[k] for k in fields})
        return buf.getvalue()

    def to_table(self) -> str:
        lines = [f"{'scheme':<8} {'mean cost':>10} {'mean rewrites':>14}"]
        for scheme in SCHEMES:
            lines.append(
                f"{scheme:<8} {self.mean_cost(scheme):>10.4f} "
                f"{self.mean_rewrites(scheme):>14.2f}"
            )
        return "\n".join(lines)


def compare_schemes(
    code: RewriteCode,
    trials: int,
    trace_length: int,
    seed: int,
    budget: int | None = None,
) -> SchemeComparison:
    """Seeded Monte-Carlo comparison of both schemes on identical traces."""
    if trials < 1 or trace_length < 1:
        raise ValueError("trials and trace length must be >= 1")
    rows = []
    children = np.random.SeedSequence(seed).spawn(trials)
    for trial, ss in enumerate(children):
        rng = np.random.default_rng(ss)
        start = _random_state(rng, code.n)
        symbols = _random_symbols(rng, code, start, trace_length)
        for scheme in SCHEMES:
            st = run_trace(code, start, symbols, scheme, budget=budget, verify=False)
            rows.append(
                {
                    "scheme": scheme,
                    "trial": trial,
                    "rewrites": st.rewrites,
                    "total_cost": st.total_cost,
                    "mean_cost": round(st.mean_cost, 6),
                    "max_virtual_level": st.max_virtual_level,
                    "rewrites_within_budget": st.rewrites_within_budget,
                }
            )
    return SchemeComparison(trials, trace_length, seed, budget, rows)
