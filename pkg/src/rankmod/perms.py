"""Permutations as cell rankings, plus cycle-notation group elements.

A state of n cells is the permutation [u1,...,un] where u1 is the cell with
the highest charge and un the lowest.  All external text is 1-based.
"""

from __future__ import annotations

import itertools
import re

__all__ = [
    "Permutation",
    "Cycles",
    "parse",
    "parse_cycles",
    "inverse",
    "apply_values",
    "apply_positions",
    "swap_last_two",
    "parity",
    "orbit",
]

_PERM_RE = re.compile(r"^\s*\[\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\]\s*$")
_CYCLE_RE = re.compile(r"\(\s*([^()]*?)\s*\)")


class Permutation:
    """Ranking of n cells: entry at rank i (1-based) is the cell holding rank i."""

    __slots__ = ("_ranking", "_rank_of")

    def __init__(self, ranking):
        r = tuple(int(x) for x in ranking)
        n = len(r)
        if n == 0:
            raise ValueError("empty permutation")
        if sorted(r) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection on 1..{n}: {list(r)}")
        self._ranking = r
        inv = [0] * n
        for i, c in enumerate(r):
            inv[c - 1] = i + 1
        self._rank_of = tuple(inv)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @property
    def n(self) -> int:
        return len(self._ranking)

    @property
    def ranking(self) -> tuple:
        return self._ranking

    def cell_at_rank(self, rank: int) -> int:
        """Cell holding the given rank (1 = highest charge)."""
        return self._ranking[rank - 1]

    def rank_of(self, cell: int) -> int:
        """Rank held by the given cell."""
        return self._rank_of[cell - 1]

    def positions(self) -> tuple:
        """Tuple p with p[cell-1] = rank of that cell."""
        return self._rank_of

    def __iter__(self):
        return iter(self._ranking)

    def __len__(self):
        return len(self._ranking)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._ranking == other._ranking

    def __lt__(self, other):
        return self._ranking < other._ranking

    def __le__(self, other):
        return self._ranking <= other._ranking

    def __hash__(self):
        return hash(self._ranking)

    def __str__(self):
        return "[" + ",".join(str(c) for c in self._ranking) + "]"

    def __repr__(self):
        return f"Permutation({list(self._ranking)})"


class Cycles:
    """A group element written in cycle notation, e.g. (1,2,4,3,5) or (4,5)(1,2)."""

    __slots__ = ("_cycles",)

    def __init__(self, cycles):
        cys = tuple(tuple(int(x) for x in c) for c in cycles)
        seen = set()
        for c in cys:
            for x in c:
                if x < 1:
                    raise ValueError(f"cycle index out of range: {x}")
                if x in seen:
                    raise ValueError(f"cycles are not disjoint at {x}")
                seen.add(x)
        self._cycles = tuple(c for c in cys if len(c) > 1)

    @property
    def cycles(self) -> tuple:
        return self._cycles

    def min_size(self) -> int:
        return max((max(c) for c in self._cycles), default=1)

    def mapping(self, n: int) -> tuple:
        """Value map as a tuple m with m[x-1] = image of x, for x in 1..n."""
        if n < self.min_size():
            raise ValueError(f"cycles need at least {self.min_size()} elements, got n={n}")
        m = list(range(1, n + 1))
        for c in self._cycles:
            for i, x in enumerate(c):
                m[x - 1] = c[(i + 1) % len(c)]
        return tuple(m)

    def to_permutation(self, n: int) -> Permutation:
        return Permutation(self.mapping(n))

    def __str__(self):
        if not self._cycles:
            return "()"
        return "".join("(" + ",".join(str(x) for x in c) + ")" for c in self._cycles)

    def __repr__(self):
        return f"Cycles({[list(c) for c in self._cycles]})"


def parse(text: str, n: int | None = None) -> Permutation:
    """Parse a bracketed ranking like "[2,1,3,4]"; validates against n if given."""
    m = _PERM_RE.match(text)
    if not m:
        raise ValueError(f"malformed permutation text: {text!r}")
    u = Permutation(int(x) for x in m.group(1).split(","))
    if n is not None and u.n != n:
        raise ValueError(f"expected {n} entries, got {u.n}")
    return u


def parse_cycles(text: str) -> Cycles:
    """Parse cycle notation, allowing juxtaposed cycles like "(4,5)(1,2)"."""
    body = text.strip()
    if not body:
        raise ValueError("empty cycle text")
    spans = _CYCLE_RE.findall(body)
    if not spans or _CYCLE_RE.sub("", body).strip():
        raise ValueError(f"malformed cycle text: {text!r}")
    cycles = []
    for s in spans:
        if not s:
            continue
        cycles.append([int(x) for x in s.split(",")])
    return Cycles(cycles)


def inverse(u: Permutation) -> Permutation:
    """Rank-lookup permutation: result's entry for cell c is the rank of c in u."""
    return Permutation(u.positions())


def _value_map(g, n: int) -> tuple:
    if isinstance(g, Cycles):
        return g.mapping(n)
    if isinstance(g, Permutation):
        if g.n != n:
            raise ValueError(f"size mismatch: {g.n} vs {n}")
        return g.ranking
    raise TypeError(f"expected Cycles or Permutation, got {type(g).__name__}")


def apply_values(g, u: Permutation) -> Permutation:
    """Relabel the values of u through g: result(i) = g(u(i))."""
    m = _value_map(g, u.n)
    return Permutation(m[c - 1] for c in u)


def apply_positions(g, u: Permutation) -> Permutation:
    """Rearrange the ranks of u through g: result(i) = u(g(i))."""
    m = _value_map(g, u.n)
    return Permutation(u.ranking[m[i] - 1] for i in range(u.n))


def swap_last_two(u: Permutation) -> Permutation:
    """Exchange the entries at the last two ranks."""
    if u.n < 2:
        raise ValueError("need at least 2 cells")
    r = list(u.ranking)
    r[-1], r[-2] = r[-2], r[-1]
    return Permutation(r)


def parity(u: Permutation) -> str:
    """'even' or 'odd' according to the inversion count of the ranking."""
    inv = 0
    r = u.ranking
    for i in range(u.n):
        for j in range(i + 1, u.n):
            if r[i] > r[j]:
                inv += 1
    return "even" if inv % 2 == 0 else "odd"


def orbit(g, h: Permutation, action=apply_values) -> set:
    """Closure of h under repeated application of g (value action by default)."""
    out = {h}
    cur = action(g, h)
    while cur not in out:
        out.add(cur)
        cur = action(g, cur)
    return out


def all_permutations(n: int):
    """All of S_n in lexicographic order."""
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
