"""Counting generator assignments that satisfy every relator.

Two interchangeable kernels share one input layout:

* ``mul``        (N, N) multiplication table of the target group, identity at 0
* ``inv``        (N,)   inverse table
* ``rel_letters`` flat signed letters; ``+v`` / ``-v`` is variable ``v - 1`` or its inverse
* ``rel_ptr``    relator ``r`` occupies ``rel_letters[rel_ptr[r]:rel_ptr[r + 1]]``
* ``chk_rel``    relators to test once variable ``d`` is assigned are
                 ``chk_rel[chk_ptr[d]:chk_ptr[d + 1]]``

The numba kernel is a depth-first search; the numpy kernel expands one
variable at a time for a whole block of partial assignments.  Setting
``TORUSLINK_DISABLE_NUMBA=1`` selects the numpy kernel even when numba is
installed.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f


ENV_FLAG = "TORUSLINK_DISABLE_NUMBA"


def numba_enabled() -> bool:
    return HAVE_NUMBA and os.environ.get(ENV_FLAG, "").strip().lower() not in ("1", "true", "yes")


@njit(cache=True, nogil=True)
def count_dfs(mul, inv, n_vars, rel_letters, rel_ptr, chk_rel, chk_ptr):
    N = mul.shape[0]
    assign = np.zeros(n_vars, dtype=np.int64)
    choice = np.full(n_vars, -1, dtype=np.int64)
    count = 0
    d = 0
    while d >= 0:
        choice[d] += 1
        if choice[d] >= N:
            choice[d] = -1
            d -= 1
            continue
        assign[d] = choice[d]
        ok = True
        for c in range(chk_ptr[d], chk_ptr[d + 1]):
            r = chk_rel[c]
            acc = 0
            for t in range(rel_ptr[r], rel_ptr[r + 1]):
                x = rel_letters[t]
                if x > 0:
                    g = assign[x - 1]
                else:
                    g = inv[assign[-x - 1]]
                acc = mul[acc, g]
            if acc != 0:
                ok = False
                break
        if not ok:
            continue
        if d == n_vars - 1:
            count += 1
        else:
            d += 1
    return count


def count_blocks(mul, inv, n_vars, rel_letters, rel_ptr, chk_rel, chk_ptr, block_rows=1 << 18):
    N = mul.shape[0]
    cand = np.arange(N, dtype=np.int64)

    def survivors(rows: np.ndarray, d: int) -> np.ndarray:
        keep = np.ones(rows.shape[0], dtype=bool)
        for c in range(chk_ptr[d], chk_ptr[d + 1]):
            r = chk_rel[c]
            acc = np.zeros(rows.shape[0], dtype=np.int64)
            for x in rel_letters[rel_ptr[r]:rel_ptr[r + 1]]:
                g = rows[:, x - 1] if x > 0 else inv[rows[:, -x - 1]]
                acc = mul[acc, g]
            keep &= acc == 0
        return rows[keep]

    def expand(partial: np.ndarray, d: int) -> int:
        if d == n_vars:
            return partial.shape[0]
        step = max(1, block_rows // N)
        total = 0
        for s in range(0, partial.shape[0], step):
            block = partial[s:s + step]
            rows = np.empty((block.shape[0] * N, d + 1), dtype=np.int64)
            rows[:, :d] = np.repeat(block, N, axis=0)
            rows[:, d] = np.tile(cand, block.shape[0])
            total += expand(survivors(rows, d), d + 1)
        return total

    if n_vars == 0:
        return 1
    return expand(np.zeros((1, 0), dtype=np.int64), 0)


def count_assignments(mul, inv, n_vars, rel_letters, rel_ptr, chk_rel, chk_ptr, use_numba=None) -> int:
    if n_vars == 0:
        return 1
    if use_numba is None:
        use_numba = numba_enabled()
    kernel = count_dfs if use_numba else count_blocks
    return int(kernel(mul, inv, n_vars, rel_letters, rel_ptr, chk_rel, chk_ptr))
