"""Rank-modulation rewriting: minimal-push-up costs, transition balls,
dominating sets, full assignment rewrite codes and a trace simulator."""

from ._kernels import IMPLEMENTATION
from .balls import ball_enumerate, ball_size_formula, infinity_ball_count, neighbors
from .codes import (
    EncodeResult,
    RewriteCode,
    build_general,
    build_n4,
    build_n5,
    code_from_json,
    code_to_json,
    decode,
    encode,
    rate,
    verify_code,
)
from .cost import (
    PushPlan,
    PushUpOp,
    cost,
    cost_by_levels,
    cost_table,
    initial_levels,
    minimal_push_up_plan,
    push_to_top_cost,
    push_to_top_plan,
)
from .domination import (
    dominated_prefixes,
    greedy_partition_search,
    is_dominating,
    lower_bound,
    prefixes,
    rate_upper_bound,
)
from .perms import (
    Cycles,
    Permutation,
    all_permutations,
    apply_values,
    inverse,
    orbit,
    parity,
    parse,
    parse_cycles,
    swap_last_two,
)
from .sim import TraceStats, compare_schemes, run_trace

__version__ = "0.1.0"
