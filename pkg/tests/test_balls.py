import math

import pytest

from rankmod.balls import (
    ball_enumerate,
    ball_size_formula,
    infinity_ball_count,
    neighbors,
)
from rankmod.cost import cost
from rankmod.perms import Permutation, all_permutations, parse


def filter_ball(u, r):
    """Independent oracle: scan all of S_n by closed-form cost."""
    return sorted(v for v in all_permutations(u.n) if cost(u, v) <= r)


def test_formula_values():
    assert ball_size_formula(5, 2) == 54
    assert ball_size_formula(7, 0) == 1
    for r in range(0, 5):
        assert ball_size_formula(r + 1, r) == math.factorial(r + 1)
    with pytest.raises(ValueError):
        ball_size_formula(4, 4)
    with pytest.raises(ValueError):
        ball_size_formula(4, -1)


def test_radius_zero_is_center():
    u = parse("[3,1,4,2]")
    assert ball_enumerate(u, 0) == [u]


def test_small_ball_contents():
    got = ball_enumerate(Permutation.identity(3), 1)
    assert got == [parse(s) for s in ("[1,2,3]", "[1,3,2]", "[2,1,3]", "[3,1,2]")]
    assert got == filter_ball(Permutation.identity(3), 1)


@pytest.mark.parametrize("n", range(2, 7))
def test_ball_matches_filter_oracle(n):
    for u in all_permutations(n) if n <= 4 else [Permutation.identity(n), parse("[" + ",".join(map(str, range(n, 0, -1))) + "]")]:
        for r in range(n):
            assert ball_enumerate(u, r) == filter_ball(u, r)


@pytest.mark.parametrize("n", range(2, 6))
def test_ball_size_center_independent(n):
    for u in all_permutations(n):
        for r in range(n):
            assert len(ball_enumerate(u, r)) == ball_size_formula(n, r)


def test_neighbors():
    assert len(neighbors(parse("[2,4,1,3]"))) == 7
    assert neighbors(Permutation.identity(1)) == []
    u = Permutation.identity(3)
    assert neighbors(u) == [v for v in filter_ball(u, 1) if v != u]


def test_one_sided_not_two_sided():
    # the cost ball is one-sided in rank displacement: some members move a
    # cell more than r ranks upward
    u = Permutation.identity(4)
    ball = ball_enumerate(u, 1)
    two_sided = [
        v
        for v in all_permutations(4)
        if all(abs(v.rank_of(c) - u.rank_of(c)) <= 1 for c in range(1, 5))
    ]
    assert not set(ball) <= set(two_sided)
    # one-sided characterization is exact
    for v in all_permutations(4):
        one_sided = all(v.rank_of(c) - u.rank_of(c) <= 1 for c in range(1, 5))
        assert one_sided == (v in ball)


def infnorm_filter(u, r):
    return sum(
        1
        for v in all_permutations(u.n)
        if all(abs(v.rank_of(c) - u.rank_of(c)) <= r for c in range(1, u.n + 1))
    )


def test_infinity_ball_examples():
    assert infinity_ball_count(Permutation.identity(4), 1) == 5
    assert infinity_ball_count(parse("[3,1,2]"), 0) == 1
    assert infinity_ball_count(Permutation.identity(5), 1) == 8


@pytest.mark.parametrize("n", range(1, 7))
def test_infinity_ball_matches_filter(n):
    for u in [Permutation.identity(n)] + all_permutations(n)[:5]:
        for r in range(n):
            assert infinity_ball_count(u, r) == infnorm_filter(u, r)
