import pytest

from toruslink import (
    GroupPresentation,
    LinkSpec,
    abelianize,
    fill_unknot,
    fingerprint,
    hom_count,
    link_group,
    link_with_unknots_group,
    link_with_unknots_group_engine,
    nested_link_group,
    nested_link_group_engine,
    tietze_simplify,
    torus_link_group,
    torus_link_group_engine,
)
from toruslink.errors import InvalidParams
from toruslink.links import TorusLinkParams, build_link_groupoids, build_unknot_groupoids
from toruslink.presentations import validate


def test_params_validation():
    TorusLinkParams(1, 1, 0)
    TorusLinkParams(3, -2, 5)
    for bad in [(2, 2, 4), (0, 1, 1), (1, 0, 0), (2, 3, 6)]:
        with pytest.raises(InvalidParams):
            build_link_groupoids(bad)


def test_link_spec():
    spec = LinkSpec(((2, 1, 1), (3, 2, 3)), exterior_unknot=True)
    assert spec.m == 2 and spec.components == 6
    assert LinkSpec(((1, 2, 3),), True, True).components == 3
    with pytest.raises(InvalidParams):
        LinkSpec(())
    with pytest.raises(InvalidParams):
        LinkSpec(((1, 2, 3), (1, 1, 1)), interior_unknot=True)


def test_builder_shapes():
    data = build_link_groupoids((3, 2, 3))
    for G in (data.piA, data.piB, data.piC):
        validate(G)
        assert G.n_objects == 3
    assert data.piA.labels == ("at1", "at2", "at3")
    assert data.piB.labels == ("bt1", "bt2", "bt3")
    assert all(g.source == g.target for g in data.piC.generators)
    assert data.i.image[1] == data.piA.word("(at1*at3*at2)^2", 1)
    assert data.j.image[0] == data.piB.word("(bt3*bt2*bt1)^3", 0)
    data.check()


def test_unknot_builder_has_commuting_loops():
    data = build_unknot_groupoids((2, 1, 1))
    assert "dA" in data.piA.labels and "dB" in data.piB.labels
    assert len(data.piA.relations) == 1 and len(data.piB.relations) == 1


def test_trefoil():
    G = torus_link_group((1, 2, 3))
    assert G == GroupPresentation.from_strings(["a", "b"], ["a^2*b^-3"])
    assert [hom_count(G, k) for k in (1, 2, 3)] == [1, 2, 12]


def test_hopf_link():
    G = torus_link_group((2, 1, 1))
    assert G == GroupPresentation.from_strings(["a", "b", "f1"], ["a*b^-1", "a*f1*b^-1*f1^-1"])
    assert abelianize(G).free_rank == 2 and abelianize(G).torsion == ()
    assert hom_count(G, 3) == 18


def test_unknot_is_integers():
    G = torus_link_group((1, 1, 0))
    assert abelianize(G).free_rank == 1
    assert tietze_simplify(G) == GroupPresentation(("b",))
    assert fingerprint(G, 4).as_list() == [1, 2, 6, 24]


@pytest.mark.parametrize("params", [(1, 2, 3), (2, 1, 1), (3, 2, 3), (1, 1, 0), (3, -2, 5), (4, 0, 1)])
def test_engine_matches_closed_form(params):
    assert torus_link_group_engine(params).canonical_key() == torus_link_group(params).canonical_key()
    assert link_with_unknots_group_engine(params).canonical_key() == link_with_unknots_group(params).canonical_key()


@pytest.mark.parametrize("params", [(1, 2, 3), (2, 1, 1), (3, 1, 2)])
def test_filling_both_unknots_recovers_torus_link(params):
    G = fill_unknot(fill_unknot(link_with_unknots_group(params), "dA"), "dB")
    T = torus_link_group(params)
    assert abelianize(G) == abelianize(T)
    assert fingerprint(G, 4) == fingerprint(T, 4)


def test_fill_unknot_removes_generator():
    G = fill_unknot(link_with_unknots_group((2, 1, 1)), "dA")
    assert "dA" not in G.generators
    assert G.relator_strings()[0] == "b*dB*b^-1*dB^-1"


def test_single_nested_level_is_link_with_exterior_unknot():
    spec = LinkSpec(((3, 2, 1),), exterior_unknot=True)
    G = nested_link_group(spec)
    expected = GroupPresentation.from_strings(
        ["a1", "b1", "a2", "f1_1", "f1_2"],
        ["a1^2*b1^-1", "a1^2*f1_1*b1^-1*f1_1^-1", "a1^2*f1_2*b1^-1*f1_2^-1", "b1*a2*b1^-1*a2^-1"],
    )
    assert G == expected
    renamed = fill_unknot(link_with_unknots_group((3, 2, 1)), "dA").rename(
        {"a": "a1", "b": "b1", "dB": "a2", "f1": "f1_1", "f2": "f1_2"}
    )
    assert G.canonical_key() == renamed.canonical_key()


def test_nested_requires_exterior_unknot():
    with pytest.raises(InvalidParams):
        nested_link_group(LinkSpec(((1, 2, 3), (1, 1, 1))))


def test_nested_engine_matches_closed_form():
    spec = LinkSpec(((1, 2, 3), (2, 1, 1)), exterior_unknot=True)
    E = nested_link_group_engine(spec)
    C = nested_link_group(spec)
    assert abelianize(E) == abelianize(C)
    assert fingerprint(E, 3) == fingerprint(C, 3)


@pytest.mark.parametrize(
    "spec",
    [
        LinkSpec(((2, 1, 1),)),
        LinkSpec(((3, 2, 3),), exterior_unknot=True),
        LinkSpec(((1, 2, 3),), interior_unknot=True),
        LinkSpec(((1, 2, 3),), True, True),
        LinkSpec(((2, 1, 1), (1, 2, 3)), exterior_unknot=True),
        LinkSpec(((2, 1, 1), (1, 2, 3))),
    ],
)
def test_component_count_is_abelian_rank(spec):
    for method in ("closed", "engine"):
        ab = abelianize(link_group(spec, method))
        assert ab.free_rank == spec.components
        assert ab.torsion == ()
