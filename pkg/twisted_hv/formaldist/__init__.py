"""Finite-window formal distribution calculus."""

from .delta import delta_coefficient, delta_derivative_window, delta_partner
from .fields import (
    GeneratingFunction,
    field_E_affine,
    field_E_torus,
    field_I,
    field_I_bar,
    field_I_hat,
    field_I_tilde,
    field_L,
    field_L_bar,
    field_L_hat,
    field_L_tilde,
    field_T_affine,
    field_T_torus,
)
from .identities import (
    FAMILIES,
    FAMILY_ALIASES,
    RANK_ONE_FAMILIES,
    RANK_TWO_FAMILIES,
    Defect,
    DeltaTerm,
    IdentityId,
    IdentitySides,
    UnknownIdentityError,
    canonical_family,
    commutator_table,
    expand_identity_sides,
    identity_sides,
    verify_identity,
)
from .locality import InconclusiveWindowError, locality_order
from .window import BiLaurentWindow, InvalidWindowError, WindowBounds

__all__ = [
    # Windows
    "BiLaurentWindow",
    "InvalidWindowError",
    "WindowBounds",
    # Delta functions
    "delta_coefficient",
    "delta_derivative_window",
    "delta_partner",
    # Generating functions
    "GeneratingFunction",
    "field_L",
    "field_I",
    "field_L_tilde",
    "field_I_tilde",
    "field_L_hat",
    "field_I_hat",
    "field_L_bar",
    "field_I_bar",
    "field_T_torus",
    "field_E_torus",
    "field_T_affine",
    "field_E_affine",
    # Identities
    "FAMILIES",
    "FAMILY_ALIASES",
    "RANK_ONE_FAMILIES",
    "RANK_TWO_FAMILIES",
    "Defect",
    "DeltaTerm",
    "IdentityId",
    "IdentitySides",
    "UnknownIdentityError",
    "canonical_family",
    "commutator_table",
    "expand_identity_sides",
    "identity_sides",
    "verify_identity",
    # Locality
    "InconclusiveWindowError",
    "locality_order",
]
