"""Finite commutative BCK-algebras from rooted trees: subalgebras and covers
of finitely generated varieties."""

__version__ = "0.1.0"

from .builders import chain, glued
from .core import (
    CbckAlgebra,
    RootedTree,
    build_algebra,
    from_parent_list,
    meet,
    monus,
    parse_tree,
    verify_axioms,
)
from .covers import cov_set, covers_of_si, covers_of_variety
from .iso import canonical_form, is_isomorphic
from .varieties import Variety, cover_oracle, join, variety_of

__all__ = [
    "CbckAlgebra",
    "RootedTree",
    "Variety",
    "build_algebra",
    "canonical_form",
    "chain",
    "cov_set",
    "cover_oracle",
    "covers_of_si",
    "covers_of_variety",
    "from_parent_list",
    "glued",
    "is_isomorphic",
    "join",
    "meet",
    "monus",
    "parse_tree",
    "variety_of",
    "verify_axioms",
]
