"""Groupoid data and knot group presentations for torus links.

Three families are covered: torus links ``K^n_{p,q}``, torus links
together with the core circles of the two solid tori (``S1_A`` inside,
``S1_B`` outside), and nested torus links, innermost level first.  Every
family has a closed-form presentation and an independent route through
the pushout engine; the two are compared in the tests.

Generator labels: ``a``/``b`` for the core loops of the two sides,
``dA``/``dB`` for loops linking the unknots, ``f1 .. f{n-1}`` for the
pushout connectors.  Nested links tag everything with the level:
``a1, b1, a2, ...`` and ``f{level}_{k}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence, Union

from .analysis.tietze import substitute
from .errors import InvalidParams
from .presentations import GroupoidPresentation, GroupPresentation, Retraction
from .svk import PushoutInput, pushout
from .words import Generator, GroupoidMorphism, Word, identity, invert_letters, power_letters


@dataclass(frozen=True)
class TorusLinkParams:
    n: int
    p: int
    q: int

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParams(f"need at least one component, got n={self.n}")
        if self.p == 0 and self.q == 0:
            raise InvalidParams("(p, q) = (0, 0) is not a torus link")
        if gcd(self.p, self.q) != 1:
            raise InvalidParams(f"gcd({self.p}, {self.q}) = {gcd(self.p, self.q)}, must be 1")


ParamsLike = Union[TorusLinkParams, Sequence[int]]


def as_params(params: ParamsLike) -> TorusLinkParams:
    if isinstance(params, TorusLinkParams):
        return params
    n, p, q = params
    return TorusLinkParams(int(n), int(p), int(q))


@dataclass(frozen=True)
class LinkSpec:
    levels: tuple[TorusLinkParams, ...]
    exterior_unknot: bool = False
    interior_unknot: bool = False

    def __post_init__(self):
        levels = tuple(as_params(level) for level in self.levels)
        object.__setattr__(self, "levels", levels)
        if not levels:
            raise InvalidParams("a link needs at least one level")
        if self.interior_unknot and len(levels) > 1:
            raise InvalidParams("the interior unknot is only supported for a single level")

    @property
    def m(self) -> int:
        return len(self.levels)

    @property
    def components(self) -> int:
        return sum(lv.n for lv in self.levels) + self.exterior_unknot + self.interior_unknot


# -- groupoid data -----------------------------------------------------------


def _cycle_generators(n: int, prefix: str) -> list[Generator]:
    """``prefix{k}`` runs x_{k-1} -> x_k, indices mod n, for k = 1..n."""
    return [Generator(f"{prefix}{k}", k - 1, k % n) for k in range(1, n + 1)]


def _cycle_loop(n: int, k: int, offset: int = 0) -> tuple[int, ...]:
    """Letters of the once-around loop at x_k: t_k t_{k-1} ... t_{k+1}.

    ``offset`` is the position of ``t_1`` in the generator table.
    """
    return tuple(offset + ((k - s - 1) % n) + 1 for s in range(n))


def _cycle_connectors(n: int, offset: int = 0) -> dict[int, Word]:
    conn = {0: identity(0)}
    for k in range(1, n):
        conn[k] = Word(tuple(offset + j for j in range(k, 0, -1)), 0, k)
    return conn


def _side(n: int, prefix: str, unknot: str | None) -> GroupoidPresentation:
    gens = _cycle_generators(n, prefix)
    rels = []
    if unknot is not None:
        gens.append(Generator(unknot, 0, 0))
        core = _cycle_loop(n, 0)
        d = len(gens)
        rels.append(Word(core + (d,) + invert_letters(core) + (-d,), 0, 0))
    return GroupoidPresentation(n, tuple(gens), tuple(rels))


def _intersection(n: int) -> GroupoidPresentation:
    return GroupoidPresentation(n, tuple(Generator(f"g{k}", k, k) for k in range(n)))


def _winding_morphism(piC, side, n: int, winding: int, offset: int = 0) -> GroupoidMorphism:
    image = tuple(Word(power_letters(_cycle_loop(n, k, offset), winding), k, k) for k in range(n))
    return GroupoidMorphism(piC, side, image)


def _build(params: ParamsLike, unknots: bool) -> PushoutInput:
    P = as_params(params)
    n = P.n
    piA = _side(n, "at", "dA" if unknots else None)
    piB = _side(n, "bt", "dB" if unknots else None)
    piC = _intersection(n)
    return PushoutInput(
        piA=piA,
        piB=piB,
        piC=piC,
        i=_winding_morphism(piC, piA, n, P.p),
        j=_winding_morphism(piC, piB, n, P.q),
        rA=Retraction(0, _cycle_connectors(n)),
        rB=Retraction(0, _cycle_connectors(n)),
        base=0,
    )


def build_link_groupoids(params: ParamsLike) -> PushoutInput:
    """Cycle graphs for both sides, n disjoint loops for the intersection."""
    return _build(params, unknots=False)


def build_unknot_groupoids(params: ParamsLike) -> PushoutInput:
    """As :func:`build_link_groupoids`, each side a torus groupoid with an extra loop."""
    return _build(params, unknots=True)


def _engine_names(n: int) -> dict[str, str]:
    return {f"at{n}": "a", f"bt{n}": "b"}


def torus_link_group_engine(params: ParamsLike) -> GroupPresentation:
    P = as_params(params)
    return pushout(build_link_groupoids(P)).rename(_engine_names(P.n))


def link_with_unknots_group_engine(params: ParamsLike) -> GroupPresentation:
    P = as_params(params)
    return pushout(build_unknot_groupoids(P)).rename(_engine_names(P.n))


# -- closed forms ------------------------------------------------------------


def _link_relators(a: int, b: int, fs: Sequence[int], p: int, q: int) -> list[tuple[int, ...]]:
    ap = power_letters((a,), p)
    bq = power_letters((b,), -q)
    rels = [ap + bq]
    rels += [ap + (f,) + bq + (-f,) for f in fs]
    return rels


def _commutator(x: int, y: int) -> tuple[int, ...]:
    return (x, y, -x, -y)


def torus_link_group(params: ParamsLike) -> GroupPresentation:
    P = as_params(params)
    gens = ("a", "b") + tuple(f"f{k}" for k in range(1, P.n))
    return GroupPresentation(gens, tuple(_link_relators(1, 2, range(3, P.n + 2), P.p, P.q)))


def link_with_unknots_group(params: ParamsLike) -> GroupPresentation:
    P = as_params(params)
    gens = ("a", "dA", "b", "dB") + tuple(f"f{k}" for k in range(1, P.n))
    rels = [_commutator(1, 2), _commutator(3, 4)]
    rels += _link_relators(1, 3, range(5, P.n + 4), P.p, P.q)
    return GroupPresentation(gens, tuple(rels))


def fill_unknot(G: GroupPresentation, gen: str) -> GroupPresentation:
    """Set ``gen`` to the identity and eliminate it."""
    return substitute(G, gen, ())


def _nested_spec(spec: LinkSpec) -> LinkSpec:
    if not isinstance(spec, LinkSpec):
        raise TypeError("expected a LinkSpec")
    if not spec.exterior_unknot:
        raise InvalidParams("nested groups are computed with the exterior unknot; fill a{m+1} afterwards")
    if spec.interior_unknot:
        raise InvalidParams("nested groups do not carry an interior unknot")
    return spec


def nested_link_group(spec: LinkSpec) -> GroupPresentation:
    spec = _nested_spec(spec)
    m = spec.m
    gens: list[str] = []
    for a in range(1, m + 1):
        gens += [f"a{a}", f"b{a}"]
    gens.append(f"a{m + 1}")
    idx = {g: i + 1 for i, g in enumerate(gens)}
    for a, lv in enumerate(spec.levels, start=1):
        for k in range(1, lv.n):
            idx[f"f{a}_{k}"] = len(idx) + 1
            gens.append(f"f{a}_{k}")
    rels = []
    for a, lv in enumerate(spec.levels, start=1):
        fs = [idx[f"f{a}_{k}"] for k in range(1, lv.n)]
        rels += _link_relators(idx[f"a{a}"], idx[f"b{a}"], fs, lv.p, lv.q)
        rels.append(_commutator(idx[f"b{a}"], idx[f"a{a + 1}"]))
    return GroupPresentation(tuple(gens), tuple(rels))


def _level_names(level: int, n: int) -> dict[str, str]:
    names = {f"f{k}": f"f{level}_{k}" for k in range(1, n)}
    names[f"bt{level}_{n}"] = f"b{level}"
    names["dB"] = f"a{level + 1}"
    return names


def nested_link_group_engine(spec: LinkSpec) -> GroupPresentation:
    """Build the nested group one level at a time through the pushout engine.

    Level 1 is the torus link with both unknots, the interior one filled.
    Level ``m`` glues a fresh cycle graph onto the previous group, which
    sits as loops at x_0 with the extra relator ``(at_n ... at_1) a_m^-1``.
    The retained cycle generator stays in the output as ``at{m}``.
    """
    spec = _nested_spec(spec)
    first = spec.levels[0]
    G = fill_unknot(link_with_unknots_group_engine(first), "dA")
    names = {f"f{k}": f"f1_{k}" for k in range(1, first.n)}
    names.update({"a": "a1", "b": "b1", "dB": "a2"})
    G = G.rename(names)
    for level, lv in enumerate(spec.levels[1:], start=2):
        G = pushout(_inductive_step(G, level, lv)).rename(
            {**_level_names(level, lv.n), f"at{level}_{lv.n}": f"at{level}"}
        )
    return G


def _inductive_step(prev: GroupPresentation, level: int, P: TorusLinkParams) -> PushoutInput:
    n = P.n
    g0 = len(prev.generators)
    gens = [Generator(label, 0, 0) for label in prev.generators]
    gens += _cycle_generators(n, f"at{level}_")
    rels = [Word(r, 0, 0) for r in prev.relations]
    core = _cycle_loop(n, 0, g0)
    rels.append(Word(core + (-(prev.index(f"a{level}") + 1),), 0, 0))
    piA = GroupoidPresentation(n, tuple(gens), tuple(rels))

    # the B side is the torus groupoid with the exterior unknot loop
    bgens = _cycle_generators(n, f"bt{level}_") + [Generator("dB", 0, 0)]
    bcore = _cycle_loop(n, 0)
    piB = GroupoidPresentation(n, tuple(bgens), (Word(bcore + (n + 1,) + invert_letters(bcore) + (-(n + 1),), 0, 0),))
    piC = _intersection(n)
    return PushoutInput(
        piA=piA,
        piB=piB,
        piC=piC,
        i=_winding_morphism(piC, piA, n, P.p, offset=g0),
        j=_winding_morphism(piC, piB, n, P.q),
        rA=Retraction(0, _cycle_connectors(n, offset=g0)),
        rB=Retraction(0, _cycle_connectors(n)),
        base=0,
    )


# -- dispatch ----------------------------------------------------------------


def link_group(spec: LinkSpec, method: str = "closed") -> GroupPresentation:
    """Knot group of the link described by ``spec`` via ``method`` ("closed" or "engine")."""
    if method not in ("closed", "engine"):
        raise ValueError(f"unknown method {method!r}")
    engine = method == "engine"
    if spec.m == 1 and not spec.exterior_unknot:
        lv = spec.levels[0]
        if not spec.interior_unknot:
            return torus_link_group_engine(lv) if engine else torus_link_group(lv)
        G = link_with_unknots_group_engine(lv) if engine else link_with_unknots_group(lv)
        return fill_unknot(G, "dB")
    if spec.m == 1 and spec.interior_unknot:
        lv = spec.levels[0]
        return link_with_unknots_group_engine(lv) if engine else link_with_unknots_group(lv)
    full = LinkSpec(spec.levels, exterior_unknot=True)
    G = nested_link_group_engine(full) if engine else nested_link_group(full)
    return G if spec.exterior_unknot else fill_unknot(G, f"a{spec.m + 1}")
