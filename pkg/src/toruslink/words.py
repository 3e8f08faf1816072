"""Words in freely generated groupoids.

A letter is a signed, 1-based index into a generator table: ``+i`` stands
for generator ``i - 1`` and ``-i`` for its inverse.  Words are written in
the usual function order, so ``(a2, a1)`` means "first ``a1``, then
``a2``": the rightmost letter is traversed first.

All values here are immutable and every constructor returns freely
reduced words, so equality of two ``Word`` objects is equality in the
free groupoid.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Sequence

from .errors import CompositionMismatch, DanglingEndpoint, UnmappedGenerator

if TYPE_CHECKING:
    from .presentations import GroupoidPresentation

Letters = tuple[int, ...]


@dataclass(frozen=True)
class Generator:
    label: str
    source: int
    target: int

    @property
    def is_loop(self) -> bool:
        return self.source == self.target


def reduce_letters(letters: Iterable[int]) -> Letters:
    """Cancel adjacent ``x x^-1`` pairs until none remain."""
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def invert_letters(letters: Sequence[int]) -> Letters:
    return tuple(-x for x in reversed(letters))


def power_letters(letters: Sequence[int], exponent: int) -> Letters:
    base = tuple(letters) if exponent >= 0 else invert_letters(letters)
    return reduce_letters(base * abs(exponent))


def letter_endpoints(gens: Sequence[Generator], letter: int) -> tuple[int, int]:
    """Return ``(source, target)`` of a signed letter."""
    if letter == 0 or abs(letter) > len(gens):
        raise UnmappedGenerator(f"letter {letter} outside generator table of size {len(gens)}")
    g = gens[abs(letter) - 1]
    return (g.source, g.target) if letter > 0 else (g.target, g.source)


@dataclass(frozen=True)
class Word:
    letters: Letters
    source: int
    target: int

    def __post_init__(self):
        if not self.letters and self.source != self.target:
            raise CompositionMismatch("the empty word is an identity and must be a loop")

    @property
    def is_identity(self) -> bool:
        return not self.letters

    @property
    def is_loop(self) -> bool:
        return self.source == self.target

    def __len__(self) -> int:
        return len(self.letters)


def identity(obj: int) -> Word:
    return Word((), obj, obj)


def make_word(gens: Sequence[Generator], letters: Iterable[int], source: int | None = None) -> Word:
    """Build a freely reduced word, checking that consecutive letters compose.

    ``source`` is required for the empty word and otherwise checked against
    the first letter traversed (the rightmost).
    """
    letters = tuple(letters)
    if not letters:
        if source is None:
            raise CompositionMismatch("an empty word needs an explicit object")
        return identity(source)
    ends = [letter_endpoints(gens, x) for x in letters]
    for i in range(len(ends) - 1):
        # ends[i + 1] is traversed right before ends[i]
        if ends[i + 1][1] != ends[i][0]:
            raise CompositionMismatch(
                f"letter {letters[i + 1]} ends at x{ends[i + 1][1]} but "
                f"letter {letters[i]} starts at x{ends[i][0]}"
            )
    src, tgt = ends[-1][0], ends[0][1]
    if source is not None and source != src:
        raise CompositionMismatch(f"word starts at x{src}, expected x{source}")
    return Word(reduce_letters(letters), src, tgt)


def free_reduce(w: Word) -> Word:
    return Word(reduce_letters(w.letters), w.source, w.target)


def compose(w1: Word, w2: Word) -> Word:
    """Return ``w1 . w2``: traverse ``w2`` first, then ``w1``."""
    if w2.target != w1.source:
        raise CompositionMismatch(
            f"cannot compose: second word ends at x{w2.target}, first starts at x{w1.source}"
        )
    return Word(reduce_letters(w1.letters + w2.letters), w2.source, w1.target)


def compose_all(*words: Word) -> Word:
    """Compose left to right in function order: ``compose_all(a, b, c) = a.b.c``."""
    if not words:
        raise ValueError("compose_all needs at least one word")
    result = words[-1]
    for w in reversed(words[:-1]):
        result = compose(w, result)
    return result


def invert(w: Word) -> Word:
    return Word(invert_letters(w.letters), w.target, w.source)


def power(w: Word, exponent: int) -> Word:
    """``w^e`` for a loop ``w``; negative exponents invert first."""
    if exponent != 0 and not w.is_loop:
        raise CompositionMismatch("only loops can be raised to a power")
    if exponent == 0:
        return identity(w.source)
    return Word(power_letters(w.letters, exponent), w.source, w.target)


@dataclass(frozen=True)
class GroupoidMorphism:
    """Object-fixing morphism determined by the images of the domain generators."""

    domain: GroupoidPresentation
    codomain: GroupoidPresentation
    image: tuple[Word, ...]

    def __post_init__(self):
        gens = self.domain.generators
        if len(self.image) != len(gens):
            missing = [g.label for g in gens[len(self.image):]]
            raise UnmappedGenerator(f"no image for generators {missing}")
        if self.domain.n_objects != self.codomain.n_objects:
            raise DanglingEndpoint("domain and codomain must share the object set")
        for g, w in zip(gens, self.image):
            if (w.source, w.target) != (g.source, g.target):
                raise CompositionMismatch(
                    f"image of {g.label} runs x{w.source}->x{w.target}, "
                    f"expected x{g.source}->x{g.target}"
                )

    @classmethod
    def from_labels(cls, domain, codomain, images: dict[str, Word]) -> GroupoidMorphism:
        try:
            return cls(domain, codomain, tuple(images[g.label] for g in domain.generators))
        except KeyError as exc:
            raise UnmappedGenerator(f"no image for generator {exc.args[0]!r}") from None


def apply_morphism(m: GroupoidMorphism, w: Word) -> Word:
    """Substitute each letter by its image and reduce."""
    n = len(m.image)
    out: list[int] = []
    for x in w.letters:
        if x == 0 or abs(x) > n:
            raise UnmappedGenerator(f"letter {x} has no image under the morphism")
        img = m.image[abs(x) - 1]
        out.extend(img.letters if x > 0 else invert_letters(img.letters))
    return Word(reduce_letters(out), w.source, w.target)
