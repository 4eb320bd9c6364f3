import os
import subprocess
import sys

import numpy as np

from rankmod import _kernels
from rankmod.cost import cost
from rankmod.perms import all_permutations


def test_backend_selected():
    assert _kernels.IMPLEMENTATION in ("numba", "numpy")


def test_loop_and_numpy_paths_agree():
    rng = np.random.default_rng(0)
    perms = [rng.permutation(6) for _ in range(40)]
    pos = np.array([np.argsort(p) for p in perms], dtype=np.int64)
    a = _kernels._cost_rows_numpy(pos, pos)
    b = _kernels._cost_rows_loops(pos, pos)
    assert (a == b).all()
    am = _kernels._min_cost_to_set_numpy(pos, pos[:7])
    bm = _kernels._min_cost_to_set_loops(pos, pos[:7])
    assert (am == bm).all()
    assert (am == a[:, :7].min(axis=1)).all()


def test_active_backend_matches_scalar_cost():
    perms = all_permutations(4)
    pos = _kernels.positions_array(perms)
    table = _kernels.cost_rows(pos, pos)
    for i, u in enumerate(perms):
        for j, v in enumerate(perms):
            assert table[i, j] == cost(u, v)


def test_env_flag_forces_numpy_backend():
    out = subprocess.run(
        [sys.executable, "-c", "from rankmod import _kernels; print(_kernels.IMPLEMENTATION)"],
        env={**os.environ, "RANKMOD_NO_NUMBA": "1"},
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "numpy"
