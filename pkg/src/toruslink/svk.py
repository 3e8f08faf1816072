"""Object group of a union from the groupoid pushout of its pieces.

Given presentations of the fundamental groupoids of ``A``, ``B`` and the
(totally disconnected) intersection ``C`` over one shared object set, the
group at the base object is the free product of the retracted object
groups of ``A`` and ``B`` with a free group on ``f_y`` (``y`` not the
base), modulo one relator ``r(i g) f_y s(j g)^-1 f_y^-1`` per generating
loop ``g`` of ``C`` at ``y``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConnectorInvalid, NonFreeIntersection, ObjectSetMismatch, UnsupportedShape
from .presentations import (
    GroupoidPresentation,
    GroupPresentation,
    Retraction,
    RetractionMap,
    is_totally_disconnected,
)
from .words import GroupoidMorphism, Word, apply_morphism, invert_letters, reduce_letters


@dataclass(frozen=True)
class PushoutInput:
    piA: GroupoidPresentation
    piB: GroupoidPresentation
    piC: GroupoidPresentation
    i: GroupoidMorphism
    j: GroupoidMorphism
    rA: Retraction
    rB: Retraction
    base: int = 0

    def check(self) -> None:
        sizes = {self.piA.n_objects, self.piB.n_objects, self.piC.n_objects}
        if len(sizes) != 1:
            raise ObjectSetMismatch(f"object sets differ: {sorted(sizes)}")
        if not is_totally_disconnected(self.piC):
            raise UnsupportedShape("intersection groupoid must be totally disconnected")
        if self.piC.relations:
            raise NonFreeIntersection("intersection groupoid must be freely generated")
        if self.i.domain != self.piC or self.j.domain != self.piC:
            raise ObjectSetMismatch("i and j must be defined on piC")
        if self.i.codomain != self.piA or self.j.codomain != self.piB:
            raise ObjectSetMismatch("i must land in piA and j in piB")
        if self.rA.base != self.base or self.rB.base != self.base:
            raise ConnectorInvalid("retractions must be based at the pushout base")


def make_f_generators(n_objects: int, base: int = 0, prefix: str = "f") -> GroupPresentation:
    """Free group on ``f_y`` for every object but the base (``f_base`` is the identity)."""
    if not 0 <= base < n_objects:
        raise ObjectSetMismatch(f"base x{base} not among {n_objects} objects")
    return GroupPresentation(tuple(f"{prefix}{y}" for y in range(n_objects) if y != base))


def _namespaced(parts: list[tuple[str, tuple[str, ...]]]) -> list[tuple[str, ...]]:
    counts: dict[str, int] = {}
    for _, labels in parts:
        for label in labels:
            counts[label] = counts.get(label, 0) + 1
    return [
        tuple(f"{tag}_{label}" if counts[label] > 1 else label for label in labels)
        for tag, labels in parts
    ]


def pushout(data: PushoutInput) -> GroupPresentation:
    data.check()
    mapA = RetractionMap(data.piA, data.rA)
    mapB = RetractionMap(data.piB, data.rB)
    gA, gB = mapA.presentation, mapB.presentation
    F = make_f_generators(data.piC.n_objects, data.base)

    labelsA, labelsB, labelsF = _namespaced(
        [("A", gA.generators), ("B", gB.generators), ("F", F.generators)]
    )
    offB = len(labelsA)
    offF = offB + len(labelsB)

    def shift(letters, off):
        return tuple(x + off if x > 0 else x - off for x in letters)

    f_letter = {}
    for y in range(data.piC.n_objects):
        if y != data.base:
            f_letter[y] = offF + 1 + len(f_letter)

    relators = list(gA.relations)
    relators += [shift(r, offB) for r in gB.relations]
    for idx, gamma in enumerate(data.piC.generators):
        y = gamma.source
        loop = Word((idx + 1,), y, y)
        left = mapA.apply(apply_morphism(data.i, loop))
        right = shift(mapB.apply(apply_morphism(data.j, loop)), offB)
        f = (f_letter[y],) if y in f_letter else ()
        relators.append(reduce_letters(left + f + invert_letters(right) + invert_letters(f)))

    return GroupPresentation(labelsA + labelsB + labelsF, tuple(relators))
