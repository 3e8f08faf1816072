"""Abelianization through the Smith normal form of the exponent-sum matrix."""

from __future__ import annotations

from dataclasses import dataclass

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from ..presentations import GroupPresentation


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        t = tuple(int(d) for d in self.torsion)
        if any(d < 2 for d in t):
            raise ValueError(f"torsion coefficients must be >= 2, got {t}")
        if any(t[i + 1] % t[i] for i in range(len(t) - 1)):
            raise ValueError(f"torsion coefficients {t} do not form a divisibility chain")
        object.__setattr__(self, "torsion", t)

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z_{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def exponent_matrix(G: GroupPresentation) -> list[list[int]]:
    rows = []
    for r in G.relations:
        row = [0] * len(G.generators)
        for x in r:
            row[abs(x) - 1] += 1 if x > 0 else -1
        rows.append(row)
    return rows


def abelianize(G: GroupPresentation) -> AbelianInvariants:
    ngens = len(G.generators)
    rows = [row for row in exponent_matrix(G) if any(row)]
    if not rows or ngens == 0:
        return AbelianInvariants(ngens)
    factors = [abs(int(d)) for d in invariant_factors(Matrix(rows), domain=ZZ)]
    nonzero = [d for d in factors if d != 0]
    return AbelianInvariants(ngens - len(nonzero), tuple(sorted(d for d in nonzero if d > 1)))
