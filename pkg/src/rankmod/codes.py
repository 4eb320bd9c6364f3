"""Full assignment rewrite codes: the n=4 and n=5 constructions, their
generalization to radius n-4, and encode/decode over the resulting classes.

A code partitions S_n into classes that each dominate the rewrite graph at
the code's radius; writing a symbol moves to the cheapest state of that
symbol's class.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from . import _kernels
from .domination import is_dominating, lower_bound, rate_upper_bound
from .perms import (
    Cycles,
    Permutation,
    all_permutations,
    apply_positions,
    orbit,
    parity,
    parse,
    swap_last_two,
)

__all__ = [
    "RewriteCode",
    "EncodeResult",
    "CodeReport",
    "build_n4",
    "build_n5",
    "build_general",
    "decode",
    "encode",
    "rate",
    "verify_code",
    "code_to_json",
    "code_from_json",
]

_CYCLE_N4 = Cycles([(1, 2, 3, 4)])
_CYCLE_N5 = Cycles([(1, 2, 4, 3, 5)])


@dataclass(frozen=True)
class EncodeResult:
    new_state: Permutation
    incurred_cost: int


class RewriteCode:
    """Partition of S_n into dominating classes, with symbols 1..q assigned
    by lexicographic order of each class's smallest member."""

    def __init__(self, n: int, radius: int, classes):
        classes = [tuple(sorted(c)) for c in classes]
        classes.sort(key=lambda c: c[0])
        self.n = n
        self.radius = radius
        self.classes = tuple(classes)
        self._symbol_of = {}
        for label, cls in enumerate(self.classes, start=1):
            for state in cls:
                if state in self._symbol_of:
                    raise ValueError(f"state {state} appears in two classes")
                self._symbol_of[state] = label
        self._class_pos = [_kernels.positions_array(c) for c in self.classes]

    @property
    def q(self) -> int:
        return len(self.classes)

    @property
    def symbols(self) -> range:
        return range(1, self.q + 1)

    def class_of(self, symbol: int) -> tuple:
        if symbol not in self.symbols:
            raise KeyError(f"unknown symbol {symbol}")
        return self.classes[symbol - 1]

    def symbol_of(self, state: Permutation) -> int:
        try:
            return self._symbol_of[state]
        except KeyError:
            raise KeyError(f"state {state} is not assigned by this code") from None


def build_n4() -> RewriteCode:
    """Six classes of four states, the value-application orbits of the
    4-cycle (1,2,3,4) on S_4."""
    seen = set()
    classes = []
    for u in all_permutations(4):
        if u in seen:
            continue
        cls = orbit(_CYCLE_N4, u)
        seen |= cls
        classes.append(cls)
    return RewriteCode(4, 1, classes)


def build_n5() -> RewriteCode:
    """Twelve classes of ten states: each class is a rank-rearrangement orbit
    of the 5-cycle on an even permutation, together with the last-two-rank
    swaps of its members.  Only the position action of the 5-cycle yields
    dominating classes; the value action does not.
    """
    seen = set()
    classes = []
    for u in all_permutations(5):
        if u in seen or parity(u) != "even":
            continue
        evens = orbit(_CYCLE_N5, u, action=apply_positions)
        cls = evens | {swap_last_two(v) for v in evens}
        seen |= cls
        classes.append(cls)
    return RewriteCode(5, 1, classes)


def build_general(n: int) -> RewriteCode:
    """Radius n-4 code: states sharing their first n-5 entries are grouped,
    then split by the n=5 classes of their rank-relabelled last five entries."""
    if n < 5:
        raise ValueError("general construction needs n >= 5")
    base = build_n5()
    buckets = {}
    for u in all_permutations(n):
        head = u.ranking[: n - 5]
        tail = u.ranking[n - 5 :]
        order = sorted(tail)
        relabelled = Permutation(order.index(c) + 1 for c in tail)
        key = (head, base.symbol_of(relabelled))
        buckets.setdefault(key, []).append(u)
    return RewriteCode(n, n - 4, buckets.values())


def decode(code: RewriteCode, state: Permutation) -> int:
    """Symbol stored by a state."""
    if state.n != code.n:
        raise ValueError(f"size mismatch: {state.n} vs {code.n}")
    return code.symbol_of(state)


def encode(code: RewriteCode, current: Permutation, target: int) -> EncodeResult:
    """Cheapest move into the target symbol's class, lexicographic tie-break."""
    if current.n != code.n:
        raise ValueError(f"size mismatch: {current.n} vs {code.n}")
    cls = code.class_of(target)
    pos = _kernels.positions_array([current])
    costs = _kernels.cost_rows(pos, code._class_pos[target - 1])[0]
    best = int(costs.argmin())  # classes are sorted, so argmin is the lex tie-break
    return EncodeResult(cls[best], int(costs[best]))


def rate(code: RewriteCode) -> float:
    """log2(q)/n bits per cell."""
    return math.log2(code.q) / code.n


@dataclass
class CodeReport:
    n: int
    radius: int
    q: int
    partition_ok: bool
    class_sizes: dict
    classes_dominating: list
    rate: float
    size_lower_bound: int
    rate_upper_bound: float | None
    optimal_full_assignment: bool

    @property
    def all_dominating(self) -> bool:
        return all(self.classes_dominating)

    @property
    def ok(self) -> bool:
        return self.partition_ok and self.all_dominating

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "radius": self.radius,
            "q": self.q,
            "partition_ok": self.partition_ok,
            "class_sizes": {str(k): v for k, v in self.class_sizes.items()},
            "classes_dominating": self.classes_dominating,
            "rate": self.rate,
            "size_lower_bound": self.size_lower_bound,
            "rate_upper_bound": self.rate_upper_bound,
            "optimal_full_assignment": self.optimal_full_assignment,
            "ok": self.ok,
        }


def verify_code(code: RewriteCode) -> CodeReport:
    """Check partition validity, per-class domination, and the size bound."""
    states = [s for cls in code.classes for s in cls]
    partition_ok = (
        len(states) == math.factorial(code.n) and len(set(states)) == len(states)
    )
    sizes = {}
    for cls in code.classes:
        sizes[len(cls)] = sizes.get(len(cls), 0) + 1
    dominating = [is_dominating(cls, radius=code.radius) for cls in code.classes]
    bound = lower_bound(code.n)
    rub = rate_upper_bound(code.n) if code.radius == 1 else None
    optimal = (
        partition_ok
        and all(dominating)
        and code.radius == 1
        and set(sizes) == {bound}
    )
    return CodeReport(
        n=code.n,
        radius=code.radius,
        q=code.q,
        partition_ok=partition_ok,
        class_sizes=sizes,
        classes_dominating=dominating,
        rate=rate(code),
        size_lower_bound=bound,
        rate_upper_bound=rub,
        optimal_full_assignment=optimal,
    )


def code_to_json(code: RewriteCode) -> str:
    doc = {
        "n": code.n,
        "radius": code.radius,
        "classes": [[str(s) for s in cls] for cls in code.classes],
    }
    return json.dumps(doc, indent=2)


def code_from_json(text: str) -> RewriteCode:
    doc = json.loads(text)
    classes = [[parse(s, doc["n"]) for s in cls] for cls in doc["classes"]]
    return RewriteCode(doc["n"], doc["radius"], classes)
