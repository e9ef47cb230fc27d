"""Gorenstein-projective modules over monomial algebras, computed from paths."""

from .algebra import (
    MonomialAlgebra,
    MonomialPresentation,
    algebra_from_words,
    build_algebra,
    is_nonzero,
    left_min_annihilators,
    right_min_annihilators,
    truncated_algebra,
)
from .classify import (
    GPClassification,
    Verdict,
    find_overlaps,
    is_gp_cyclic,
    is_perfect_pair,
    perfect_pairs,
    perfect_paths,
    stable_category_shape,
    stable_hom_dim,
)
from .errors import MonomialError
from .nakayama import kupisch_algebra, nakayama_data, perfect_paths_nakayama
from .oracle import gp_oracle, stable_hom_dim_oracle
from .presentation import format_presentation, parse
from .quadratic import gorenstein_report, perfect_arrows, relation_quiver
from .quiver import Path, Quiver, concat, is_subpath

__version__ = "0.1.0"

__all__ = [
    "GPClassification",
    "MonomialAlgebra",
    "MonomialError",
    "MonomialPresentation",
    "Path",
    "Quiver",
    "Verdict",
    "algebra_from_words",
    "build_algebra",
    "concat",
    "find_overlaps",
    "format_presentation",
    "gorenstein_report",
    "gp_oracle",
    "is_gp_cyclic",
    "is_nonzero",
    "is_perfect_pair",
    "is_subpath",
    "kupisch_algebra",
    "left_min_annihilators",
    "nakayama_data",
    "parse",
    "perfect_arrows",
    "perfect_pairs",
    "perfect_paths",
    "perfect_paths_nakayama",
    "relation_quiver",
    "right_min_annihilators",
    "stable_category_shape",
    "stable_hom_dim",
    "stable_hom_dim_oracle",
    "truncated_algebra",
]
