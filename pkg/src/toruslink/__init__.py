"""Knot groups of torus links, linked unknots and nested torus links.

Presentations are computed from fundamental groupoids with several base
points glued by the groupoid Seifert-van Kampen pushout, and checked
against closed forms with isomorphism invariants (abelianization and
homomorphism counts into small symmetric groups).
"""

from .analysis import (
    AbelianInvariants,
    HomFingerprint,
    abelianize,
    fingerprint,
    hom_count,
    tietze_simplify,
)
from .links import (
    LinkSpec,
    TorusLinkParams,
    build_link_groupoids,
    build_unknot_groupoids,
    fill_unknot,
    link_group,
    link_with_unknots_group,
    link_with_unknots_group_engine,
    nested_link_group,
    nested_link_group_engine,
    torus_link_group,
    torus_link_group_engine,
)
from .presentations import (
    GroupoidPresentation,
    GroupPresentation,
    Retraction,
    is_connected,
    object_group_generators,
    retract,
    tree_retraction,
    validate,
)
from .svk import PushoutInput, make_f_generators, pushout
from .words import (
    Generator,
    GroupoidMorphism,
    Word,
    apply_morphism,
    compose,
    free_reduce,
    identity,
    invert,
    make_word,
    power,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianInvariants",
    "abelianize",
    "apply_morphism",
    "build_link_groupoids",
    "build_unknot_groupoids",
    "compose",
    "fill_unknot",
    "fingerprint",
    "free_reduce",
    "Generator",
    "GroupoidMorphism",
    "GroupoidPresentation",
    "GroupPresentation",
    "hom_count",
    "HomFingerprint",
    "identity",
    "invert",
    "is_connected",
    "link_group",
    "link_with_unknots_group",
    "link_with_unknots_group_engine",
    "LinkSpec",
    "make_f_generators",
    "make_word",
    "nested_link_group",
    "nested_link_group_engine",
    "object_group_generators",
    "power",
    "pushout",
    "PushoutInput",
    "retract",
    "Retraction",
    "tietze_simplify",
    "torus_link_group",
    "torus_link_group_engine",
    "TorusLinkParams",
    "tree_retraction",
    "validate",
    "Word",
]
