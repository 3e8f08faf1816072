"""Specs and presentations shared by several test modules."""

from toruslink import GroupPresentation, Retraction, link_group
from toruslink.presentations import tree_retraction
from toruslink.words import Word, compose, identity, invert
from toruslink.cli import parse_spec

SPECS = [
    "1:2,3",
    "1:1,0",
    "2:1,1",
    "3:1,3",
    "2:2,3",
    "1:1,6+extA+extB",
    "2:1,1+extA+extB",
    "1:2,3+extB",
    "2:1,1+extB",
    "1:2,3+extA",
    "1:2,3/1:1,1+extB",
    "1:2,3/2:1,1+extB",
    "1:1,0/1:1,0/1:1,0+extB",
    "1:2,3/1:1,1",
]

EXTERIOR_SPECS = [s for s in SPECS if s.endswith("+extB")]


def corpus_presentations():
    """(name, presentation) pairs: every spec by both methods plus hand-written groups."""
    out = []
    for text in SPECS:
        spec = parse_spec(text)
        for method in ("closed", "engine"):
            out.append((f"{text}[{method}]", link_group(spec, method)))
    out += [
        ("trivial", GroupPresentation(())),
        ("Z", GroupPresentation(("a",))),
        ("Z2", GroupPresentation.from_strings(["a", "f"], ["a*f*a^-1*f^-1"])),
        ("Z+Z_4", GroupPresentation.from_strings(["g", "d"], ["g^4", "g*d*g^-1*d^-1"])),
        ("S3", GroupPresentation.from_strings(["s", "t"], ["s^2", "t^3", "s*t*s^-1*t"])),
        ("free2", GroupPresentation(("x", "y"))),
    ]
    return out


def two_torus_pushout_input():
    """The 2-torus as a union of two annuli meeting in two strips."""
    from toruslink import GroupoidMorphism, GroupoidPresentation, PushoutInput, Retraction
    from toruslink.words import Generator, identity

    piA = GroupoidPresentation(2, (Generator("alpha", 0, 1), Generator("dA", 0, 0)))
    piB = GroupoidPresentation(2, (Generator("beta", 0, 1), Generator("dB", 0, 0)))
    piC = GroupoidPresentation(2, (Generator("g0", 0, 0), Generator("g1", 1, 1)))
    i = GroupoidMorphism(piC, piA, (piA.word("dA"), piA.word("alpha*dA*alpha^-1")))
    j = GroupoidMorphism(piC, piB, (piB.word("dB"), piB.word("beta*dB*beta^-1")))
    rA = Retraction(0, {0: identity(0), 1: piA.word("alpha")})
    rB = Retraction(0, {0: identity(0), 1: piB.word("beta")})
    return PushoutInput(piA, piB, piC, i, j, rA, rB, 0)


def random_connectors(G, base, rng, steps=8):
    """Connectors from random walks, closed off along a tree path."""
    tree = tree_retraction(G, base).connectors
    moves = {x: [] for x in range(G.n_objects)}
    for i, g in enumerate(G.generators):
        moves[g.source].append((i + 1, g.target))
        moves[g.target].append((-(i + 1), g.source))
    conn = {base: identity(base)}
    for y in range(G.n_objects):
        if y == base:
            continue
        walk = identity(base)
        for _ in range(rng.randrange(steps)):
            letter, z = rng.choice(moves[walk.target])
            walk = compose(Word((letter,), walk.target, z), walk)
        # walk ends somewhere; go back to base along the tree, then out to y
        back = invert(tree[walk.target])
        conn[y] = compose(tree[y], compose(back, walk))
    return Retraction(base, conn)
