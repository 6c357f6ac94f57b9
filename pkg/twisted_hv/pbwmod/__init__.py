"""Graded vacuum and highest-weight modules with PBW bases."""

from .basis import enumerate_basis, graded_dim
from .derivation import d_action, d_bar, d_power
from .spec import (
    RANK_TWO_KINDS,
    MissingBoundError,
    ModuleKind,
    ModuleMismatchError,
    ModuleSpec,
    StraighteningError,
)
from .straighten import act, act_element, apply_word, cache_info
from .vector import EMPTY, Monomial, PBWVector, is_canonical, monomial_degree, monomial_to_text

__all__ = [
    # Specs
    "RANK_TWO_KINDS",
    "MissingBoundError",
    "ModuleKind",
    "ModuleMismatchError",
    "ModuleSpec",
    "StraighteningError",
    # Vectors
    "EMPTY",
    "Monomial",
    "PBWVector",
    "is_canonical",
    "monomial_degree",
    "monomial_to_text",
    # Action
    "act",
    "act_element",
    "apply_word",
    "cache_info",
    # Bases
    "enumerate_basis",
    "graded_dim",
    # Derivation
    "d_action",
    "d_bar",
    "d_power",
]
