"""Homomorphism counts into symmetric groups.

``|Hom(G, S_k)|`` for small ``k`` is an isomorphism invariant of ``G``.
Equal fingerprints are evidence that two presentations define the same
group, never a proof.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations

import numpy as np

from ..errors import DegreeTooLarge
from ..presentations import GroupPresentation
from ._kernels import count_assignments

DEFAULT_MAX_DEGREE = 5


@dataclass(frozen=True)
class HomFingerprint:
    counts: dict[int, int] = field(default_factory=dict)

    def as_list(self) -> list[int]:
        return [self.counts[k] for k in sorted(self.counts)]

    def __hash__(self):
        return hash(tuple(sorted(self.counts.items())))


@lru_cache(maxsize=None)
def symmetric_group_tables(k: int) -> tuple[np.ndarray, np.ndarray]:
    """Multiplication and inverse tables of S_k; element 0 is the identity."""
    perms = list(permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    N = len(perms)
    mul = np.empty((N, N), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            mul[i, j] = index[tuple(p[q[x]] for x in range(k))]
    inv = np.empty(N, dtype=np.int64)
    for i, p in enumerate(perms):
        r = [0] * k
        for x, y in enumerate(p):
            r[y] = x
        inv[i] = index[tuple(r)]
    mul.setflags(write=False)
    inv.setflags(write=False)
    return mul, inv


def search_order(G: GroupPresentation) -> list[int]:
    """Order the constrained generators (0-based) for the search.

    Greedy: next take the generator that completes the most relators,
    then the one occurring in the most relators.  Generators absent from
    every relator are left out; each contributes a free factor.
    """
    supports = [frozenset(abs(x) - 1 for x in r) for r in G.relations]
    occurrence = [0] * len(G.generators)
    for s in supports:
        for g in s:
            occurrence[g] += 1
    remaining = {g for g in range(len(G.generators)) if occurrence[g]}
    chosen: list[int] = []
    placed: set[int] = set()
    while remaining:
        def score(g):
            completes = sum(1 for s in supports if g in s and s <= placed | {g})
            return (completes, occurrence[g], -g)

        g = max(remaining, key=score)
        chosen.append(g)
        placed.add(g)
        remaining.remove(g)
    return chosen


def _layout(G: GroupPresentation, order: list[int]):
    pos = {g: i for i, g in enumerate(order)}
    letters: list[int] = []
    ptr = [0]
    depth_of = []
    for r in G.relations:
        letters.extend(pos[abs(x) - 1] + 1 if x > 0 else -(pos[abs(x) - 1] + 1) for x in r)
        ptr.append(len(letters))
        depth_of.append(max(pos[abs(x) - 1] for x in r))
    chk_rel: list[int] = []
    chk_ptr = [0]
    for d in range(len(order)):
        # shorter relators first: cheaper to reject on
        rs = sorted((r for r, dd in enumerate(depth_of) if dd == d), key=lambda r: ptr[r + 1] - ptr[r])
        chk_rel.extend(rs)
        chk_ptr.append(len(chk_rel))
    as_arr = lambda v: np.asarray(v, dtype=np.int64)
    return as_arr(letters), as_arr(ptr), as_arr(chk_rel), as_arr(chk_ptr)


def hom_count(G: GroupPresentation, k: int, max_degree: int = DEFAULT_MAX_DEGREE, use_numba=None) -> int:
    """Number of homomorphisms from ``G`` to the symmetric group ``S_k``."""
    if k < 1:
        raise ValueError(f"degree must be positive, got {k}")
    if k > max_degree:
        raise DegreeTooLarge(f"degree {k} exceeds the cap {max_degree}")
    mul, inv = symmetric_group_tables(k)
    order = search_order(G)
    free = len(G.generators) - len(order)
    constrained = count_assignments(mul, inv, len(order), *_layout(G, order), use_numba=use_numba)
    return constrained * mul.shape[0] ** free


def fingerprint(G: GroupPresentation, kmax: int = 4, max_degree: int = DEFAULT_MAX_DEGREE) -> HomFingerprint:
    if kmax > max_degree:
        raise DegreeTooLarge(f"degree {kmax} exceeds the cap {max_degree}")
    return HomFingerprint({k: hom_count(G, k, max_degree) for k in range(1, kmax + 1)})
