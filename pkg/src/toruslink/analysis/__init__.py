from .abelian import AbelianInvariants, abelianize, exponent_matrix
from .homcount import HomFingerprint, fingerprint, hom_count, symmetric_group_tables
from .tietze import cyclic_reduce, substitute, tietze_simplify

__all__ = [
    "AbelianInvariants",
    "HomFingerprint",
    "abelianize",
    "cyclic_reduce",
    "exponent_matrix",
    "fingerprint",
    "hom_count",
    "substitute",
    "symmetric_group_tables",
    "tietze_simplify",
]
