import itertools

import pytest

from rankmod.cost import (
    PushPlan,
    PushUpOp,
    apply_op,
    cost,
    cost_by_levels,
    cost_table,
    induced_ranking,
    initial_levels,
    minimal_push_up_plan,
    push_to_top_cost,
    push_to_top_plan,
    replay_plan,
)
from rankmod.perms import Permutation, all_permutations, parse

U = parse("[2,1,3,4]")
V = parse("[2,1,4,3]")


def test_initial_levels():
    assert initial_levels(U) == (3, 4, 2, 1)
    assert initial_levels(Permutation.identity(3)) == (3, 2, 1)
    assert initial_levels(parse("[4,1,2,3]")) == (3, 2, 1, 4)


def test_apply_op_worked_steps():
    lv = (3, 4, 2, 1)
    assert apply_op(lv, PushUpOp(4, frozenset({3}))) == (3, 4, 2, 3)
    assert apply_op(lv, PushUpOp(4, frozenset({1, 2, 3}))) == (3, 4, 2, 5)


def test_apply_op_literal_rule_and_validation():
    lv = (3, 4, 2, 1)
    # rule applied literally even when it lowers the cell
    assert apply_op(lv, PushUpOp(2, frozenset({3}))) == (3, 3, 2, 1)
    with pytest.raises(ValueError):
        apply_op(lv, PushUpOp(2, frozenset({3})), forbid_lowering=True)
    with pytest.raises(ValueError):
        apply_op(lv, PushUpOp(5, frozenset({1})))


def test_minimal_push_up_plan_worked_example():
    plan = minimal_push_up_plan(U, V)
    assert [(op.cell, set(op.above)) for op in plan] == [(4, {3}), (1, {4}), (2, {1})]
    levels = replay_plan(U, plan)
    assert levels == (4, 5, 2, 3)
    assert induced_ranking(levels) == V


def test_minimal_push_up_plan_trivial_and_skip():
    assert len(minimal_push_up_plan(U, U)) == 0
    # two pushes suffice when one cell is already high enough
    plan = minimal_push_up_plan(parse("[1,2,3,4]"), V)
    assert [op.cell for op in plan] == [4, 2]


def test_push_to_top_plan_examples():
    plan = push_to_top_plan(U, V)
    assert [op.cell for op in plan] == [4, 1, 2]
    assert all(len(op.above) == 3 for op in plan)
    assert len(push_to_top_plan(U, U)) == 0
    assert len(push_to_top_plan(parse("[1,2,3,4]"), V)) == 3
    assert [op.cell for op in push_to_top_plan(parse("[1,2,3,4]"), parse("[4,1,2,3]"))] == [4]


def test_push_to_top_trajectory():
    levels = replay_plan(U, push_to_top_plan(U, V))
    assert levels == (6, 7, 2, 5)
    assert induced_ranking(levels) == V


def test_cost_examples():
    assert cost(U, V) == 1
    assert cost_by_levels(U, V) == 1
    assert cost(parse("[4,3,2,1]"), parse("[1,2,3,4]")) == 3
    assert cost(U, U) == 0
    assert cost(parse("[1,2,3,4]"), V) == 1
    assert push_to_top_cost(U, V) == 3
    assert push_to_top_cost(U, U) == 0
    assert push_to_top_cost(parse("[1,2,3,4]"), parse("[4,1,2,3]")) == 1


def test_size_mismatch_rejected():
    for fn in (cost, cost_by_levels, minimal_push_up_plan, push_to_top_plan):
        with pytest.raises(ValueError):
            fn(parse("[1,2]"), parse("[1,2,3]"))


@pytest.mark.parametrize("n", range(2, 6))
def test_closed_form_matches_level_procedure(n):
    perms = all_permutations(n)
    for u in perms:
        for v in perms:
            assert cost(u, v) == cost_by_levels(u, v)


@pytest.mark.parametrize("n", range(2, 6))
def test_replay_consistency(n):
    perms = all_permutations(n)
    for u in perms:
        for v in perms:
            plan = minimal_push_up_plan(u, v)
            levels = replay_plan(u, plan)
            assert induced_ranking(levels) == v
            assert max(levels) == n + cost(u, v)


@pytest.mark.parametrize("n", range(2, 6))
def test_push_to_top_dominates_minpush(n):
    perms = all_permutations(n)
    for u in perms:
        for v in perms:
            p = push_to_top_plan(u, v)
            c = cost(u, v)
            assert len(p) >= c
            if len(p):
                levels = replay_plan(u, p)
                assert induced_ranking(levels) == v
                assert max(levels) == n + len(p)


def test_cost_range_and_zero_iff_equal():
    perms = all_permutations(4)
    for u in perms:
        for v in perms:
            c = cost(u, v)
            assert 0 <= c <= 3
            assert (c == 0) == (u == v)


def test_cost_table_matches_scalar():
    perms = all_permutations(4)
    table = cost_table(perms, perms)
    for i, u in enumerate(perms):
        for j, v in enumerate(perms):
            assert table[i, j] == cost(u, v)


def test_plan_text_roundtrip():
    plan = minimal_push_up_plan(U, V)
    text = str(plan)
    assert text.splitlines()[0] == "push 4 above {3}"
    assert PushPlan.parse(text) == plan
    with pytest.raises(ValueError):
        PushPlan.parse("shove 4 over 3")


def test_bad_ops_rejected():
    with pytest.raises(ValueError):
        PushUpOp(1, frozenset())
    with pytest.raises(ValueError):
        PushUpOp(1, frozenset({1, 2}))
