"""Groupoid and group presentations, and retraction to an object group."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import (
    CompositionMismatch,
    ConnectorInvalid,
    DanglingEndpoint,
    NotConnected,
    RelationNotLoop,
    UnknownGenerator,
    UnsupportedShape,
)
from .textio import format_algebra, format_letters, format_presentation, parse_letters
from .words import (
    Generator,
    Letters,
    Word,
    compose,
    identity,
    invert,
    make_word,
    reduce_letters,
)


def _dedupe(items: Iterable) -> tuple:
    seen = set()
    out = []
    for item in items:
        if item not in seen:
            seen.add(item)
            out.append(item)
    return tuple(out)


@dataclass(frozen=True)
class GroupoidPresentation:
    """Generator graph on objects ``0 .. n_objects-1`` plus relation loops.

    Relations are reduced on construction; identities and duplicates are
    dropped.
    """

    n_objects: int
    generators: tuple[Generator, ...]
    relations: tuple[Word, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        rels = (Word(reduce_letters(r.letters), r.source, r.target) for r in self.relations)
        object.__setattr__(self, "relations", _dedupe(r for r in rels if not r.is_identity))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(g.label for g in self.generators)

    def index(self, label: str) -> int:
        for i, g in enumerate(self.generators):
            if g.label == label:
                return i
        raise UnknownGenerator(label)

    def word(self, text: str, source: int | None = None) -> Word:
        """Parse ``text`` (e.g. ``"at2*at1"``) into a composable word."""
        letters = parse_letters(text, self.labels)
        return make_word(self.generators, letters, source)

    def with_relations(self, relations: Iterable[Word]) -> GroupoidPresentation:
        return GroupoidPresentation(self.n_objects, self.generators, self.relations + tuple(relations))


@dataclass(frozen=True)
class GroupPresentation:
    """A finitely presented group; relators are tuples of signed letters."""

    generators: tuple[str, ...]
    relations: tuple[Letters, ...] = ()

    def __post_init__(self):
        gens = tuple(self.generators)
        if len(set(gens)) != len(gens):
            raise ValueError(f"duplicate generator labels in {gens}")
        object.__setattr__(self, "generators", gens)
        rels = (reduce_letters(r) for r in self.relations)
        rels = _dedupe(r for r in rels if r)
        for r in rels:
            if any(x == 0 or abs(x) > len(gens) for x in r):
                raise UnknownGenerator(f"relator {r} refers outside {len(gens)} generators")
        object.__setattr__(self, "relations", rels)

    @classmethod
    def from_strings(cls, generators: Sequence[str], relations: Sequence[str] = ()) -> GroupPresentation:
        gens = tuple(generators)
        return cls(gens, tuple(parse_letters(r, gens) for r in relations))

    def relator_strings(self) -> list[str]:
        return [format_letters(r, self.generators) for r in self.relations]

    def __str__(self) -> str:
        return format_presentation(self.generators, self.relations)

    def to_algebra(self) -> str:
        return format_algebra(self.generators, self.relations)

    def index(self, label: str) -> int:
        try:
            return self.generators.index(label)
        except ValueError:
            raise UnknownGenerator(label) from None

    def rename(self, mapping: Mapping[str, str]) -> GroupPresentation:
        return GroupPresentation(tuple(mapping.get(g, g) for g in self.generators), self.relations)

    def canonical_key(self) -> tuple[tuple[str, ...], tuple[str, ...]]:
        """Generators sorted by label and relators sorted as strings.

        Two presentations with equal keys have the same generators and the
        same relator words, irrespective of listing order.
        """
        return tuple(sorted(self.generators)), tuple(sorted(self.relator_strings()))


@dataclass(frozen=True)
class Retraction:
    """Connectors from ``base`` to every object; the base connector is the identity."""

    base: int
    connectors: Mapping[int, Word] = field(default_factory=dict)


def validate(G: GroupoidPresentation) -> None:
    """Raise if ``G`` breaks a structural invariant; return ``None`` otherwise."""
    labels = [g.label for g in G.generators]
    if len(set(labels)) != len(labels):
        raise ValueError(f"duplicate generator labels {labels}")
    for g in G.generators:
        for end in (g.source, g.target):
            if not 0 <= end < G.n_objects:
                raise DanglingEndpoint(f"generator {g.label} touches x{end} outside {G.n_objects} objects")
    for rel in G.relations:
        shown = format_letters(rel.letters, labels) if all(0 < abs(x) <= len(labels) for x in rel.letters) else rel.letters
        if not rel.is_loop:
            raise RelationNotLoop(f"relation {shown} runs x{rel.source}->x{rel.target}")
        try:
            checked = make_word(G.generators, rel.letters, rel.source)
        except CompositionMismatch as exc:
            raise RelationNotLoop(f"relation {shown} is not a composable word: {exc}") from None
        if checked.target != rel.target:
            raise RelationNotLoop(f"relation {shown} does not close up at x{rel.source}")


def _components(G: GroupoidPresentation) -> list[int]:
    parent = list(range(G.n_objects))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in G.generators:
        parent[find(g.source)] = find(g.target)
    return [find(x) for x in range(G.n_objects)]


def is_connected(G: GroupoidPresentation) -> bool:
    return len(set(_components(G))) <= 1


def is_totally_disconnected(G: GroupoidPresentation) -> bool:
    return all(g.is_loop for g in G.generators)


def tree_retraction(G: GroupoidPresentation, base: int = 0) -> Retraction:
    """Retraction along a breadth-first spanning tree rooted at ``base``."""
    adj: dict[int, list[tuple[int, int]]] = {x: [] for x in range(G.n_objects)}
    for i, g in enumerate(G.generators):
        if not g.is_loop:
            adj[g.source].append((i + 1, g.target))
            adj[g.target].append((-(i + 1), g.source))
    connectors = {base: identity(base)}
    queue = deque([base])
    while queue:
        x = queue.popleft()
        for letter, y in adj[x]:
            if y not in connectors:
                step = Word((letter,), x, y)
                connectors[y] = compose(step, connectors[x])
                queue.append(y)
    if len(connectors) != G.n_objects:
        raise NotConnected("generator graph does not reach every object")
    return Retraction(base, connectors)


class RetractionMap:
    """The retraction ``g -> c(z)^-1 g c(y)`` of a connected presentation.

    Each groupoid generator ``g`` gives one group generator standing for
    the loop ``c(target)^-1 g c(source)``.  Generators whose loop is
    trivial, or that a connector pins to the identity, are eliminated; any
    connector relation that survives is kept as a relator so arbitrary
    connector choices still present the object group correctly.
    """

    def __init__(self, G: GroupoidPresentation, R: Retraction):
        if not is_connected(G):
            raise NotConnected("cannot retract a disconnected groupoid")
        _check_retraction(G, R)
        self.groupoid = G
        self.retraction = R
        gens = G.generators
        conn = R.connectors

        killed: set[int] = set()
        for j, g in enumerate(gens):
            loop = compose(invert(conn[g.target]), compose(Word((j + 1,), g.source, g.target), conn[g.source]))
            if loop.is_identity:
                killed.add(j)

        pending = {y: conn[y].letters for y in range(G.n_objects) if y != R.base}
        changed = True
        while changed:
            changed = False
            for y in list(pending):
                rel = self._drop(pending[y], killed)
                if not rel:
                    del pending[y]
                elif len(rel) == 1:
                    killed.add(abs(rel[0]) - 1)
                    del pending[y]
                    changed = True

        self._killed = frozenset(killed)
        kept = [j for j in range(len(gens)) if j not in killed]
        self._reindex = {j: i + 1 for i, j in enumerate(kept)}
        relators = [self._rewrite(pending[y]) for y in sorted(pending)]
        relators += [self.apply(rho) for rho in G.relations]
        self.presentation = GroupPresentation(tuple(gens[j].label for j in kept), tuple(relators))

    @staticmethod
    def _drop(letters: Letters, killed: set[int]) -> Letters:
        return reduce_letters(x for x in letters if abs(x) - 1 not in killed)

    def _rewrite(self, letters: Letters) -> Letters:
        out = []
        for x in letters:
            j = abs(x) - 1
            if j not in self._killed:
                i = self._reindex[j]
                out.append(i if x > 0 else -i)
        return reduce_letters(out)

    def apply(self, w: Word) -> Letters:
        """Image of a groupoid word in the object group at the base."""
        conn = self.retraction.connectors
        loop = conn[w.target].letters
        letters = tuple(-x for x in reversed(loop)) + w.letters + conn[w.source].letters
        return self._rewrite(letters)


def _check_retraction(G: GroupoidPresentation, R: Retraction) -> None:
    if not 0 <= R.base < G.n_objects:
        raise ConnectorInvalid(f"base x{R.base} is not an object")
    for y in range(G.n_objects):
        c = R.connectors.get(y)
        if c is None:
            raise ConnectorInvalid(f"no connector for x{y}")
        if (c.source, c.target) != (R.base, y):
            raise ConnectorInvalid(f"connector for x{y} runs x{c.source}->x{c.target}")
        try:
            make_word(G.generators, c.letters, c.source)
        except CompositionMismatch as exc:
            raise ConnectorInvalid(f"connector for x{y} is not composable: {exc}") from None
    if not R.connectors[R.base].is_identity:
        raise ConnectorInvalid("connector at the base must be the identity")


def retract(G: GroupoidPresentation, R: Retraction) -> GroupPresentation:
    return RetractionMap(G, R).presentation


def object_group_generators(G: GroupoidPresentation, x: int) -> tuple[Word, ...]:
    """Free generators of the object group at ``x`` for the two simple graph shapes.

    Handles a single directed cycle through every object and graphs made
    only of loops; anything else needs :func:`retract`.
    """
    if G.relations:
        raise UnsupportedShape("only free presentations are supported")
    if not 0 <= x < G.n_objects:
        raise DanglingEndpoint(f"x{x} is not an object")
    if is_totally_disconnected(G):
        return tuple(Word((i + 1,), x, x) for i, g in enumerate(G.generators) if g.source == x)
    outgoing: dict[int, int] = {}
    incoming: dict[int, int] = {}
    for i, g in enumerate(G.generators):
        if g.is_loop or g.source in outgoing or g.target in incoming:
            raise UnsupportedShape("graph is neither a single cycle nor a set of loops")
        outgoing[g.source] = i
        incoming[g.target] = i
    if len(outgoing) != G.n_objects or not is_connected(G):
        raise UnsupportedShape("graph is not a single cycle through all objects")
    word = identity(x)
    y = x
    while True:
        i = outgoing[y]
        g = G.generators[i]
        word = compose(Word((i + 1,), g.source, g.target), word)
        y = g.target
        if y == x:
            return (word,)
