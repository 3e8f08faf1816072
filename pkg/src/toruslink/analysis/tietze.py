"""Tietze simplification of group presentations."""

from __future__ import annotations

from ..errors import UnknownGenerator
from ..presentations import GroupPresentation
from ..words import Letters, invert_letters, reduce_letters


def cyclic_reduce(letters: Letters) -> Letters:
    w = reduce_letters(letters)
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return w[i:j + 1]


def cyclic_key(letters: Letters) -> Letters:
    """Smallest rotation of the word or its inverse; equal keys mean equal normal closures."""
    w = cyclic_reduce(letters)
    if not w:
        return w
    candidates = []
    for v in (w, invert_letters(w)):
        candidates.extend(v[i:] + v[:i] for i in range(len(v)))
    return min(candidates, key=lambda v: tuple((abs(x), x < 0) for x in v))


def substitute(G: GroupPresentation, label: str, replacement: Letters = ()) -> GroupPresentation:
    """Replace generator ``label`` by ``replacement`` everywhere and drop it.

    ``replacement`` is written over ``G``'s generators and must not mention
    ``label`` itself.
    """
    try:
        k = G.generators.index(label) + 1
    except ValueError:
        raise UnknownGenerator(label) from None
    if any(abs(x) == k for x in replacement):
        raise ValueError(f"replacement for {label} refers to {label}")
    inv = invert_letters(replacement)

    def renumber(x: int) -> int:
        return x if abs(x) < k else (x - 1 if x > 0 else x + 1)

    rels = []
    for r in G.relations:
        out: list[int] = []
        for x in r:
            if x == k:
                out.extend(replacement)
            elif x == -k:
                out.extend(inv)
            else:
                out.append(x)
        rels.append(tuple(renumber(x) for x in reduce_letters(out)))
    gens = G.generators[:k - 1] + G.generators[k:]
    return GroupPresentation(gens, tuple(rels))


def _tidy(G: GroupPresentation) -> GroupPresentation:
    seen = set()
    rels = []
    for r in G.relations:
        w = cyclic_reduce(r)
        key = cyclic_key(w)
        if w and key not in seen:
            seen.add(key)
            rels.append(w)
    return GroupPresentation(G.generators, tuple(rels))


def _find_elimination(G: GroupPresentation):
    """Pick (relator, generator index) with the generator occurring once in it.

    Shortest relator first; ties go to the generator listed last, so the
    earlier (usually more meaningful) generators survive.
    """
    best = None
    for ri, r in enumerate(G.relations):
        counts: dict[int, int] = {}
        for x in r:
            counts[abs(x)] = counts.get(abs(x), 0) + 1
        once = [g for g, c in counts.items() if c == 1]
        if not once:
            continue
        cand = (len(r), -max(once), ri)
        if best is None or cand < best:
            best = cand
    if best is None:
        return None
    return best[2], -best[1]


def tietze_simplify(G: GroupPresentation, budget: int = 1000) -> GroupPresentation:
    """Best-effort simplification; the result presents an isomorphic group.

    Moves: cyclic reduction, removal of trivial and duplicate relators
    (duplicates up to rotation and inversion), and elimination of a
    generator that occurs exactly once in some relator.
    """
    G = _tidy(G)
    for _ in range(budget):
        found = _find_elimination(G)
        if found is None:
            break
        ri, g = found
        r = G.relations[ri]
        pos = next(i for i, x in enumerate(r) if abs(x) == g)
        # rotate so the generator leads: g^e * rest = 1
        rotated = r[pos:] + r[:pos]
        rest = rotated[1:]
        solution = invert_letters(rest) if rotated[0] > 0 else rest
        others = G.relations[:ri] + G.relations[ri + 1:]
        G = _tidy(substitute(GroupPresentation(G.generators, others), G.generators[g - 1], solution))
    return G
