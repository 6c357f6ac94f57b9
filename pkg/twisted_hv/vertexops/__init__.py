"""Fields on truncated modules, the state-field map and e-products."""

from .eproduct import InsufficientOrderError, ZSeries, e_coefficient, e_product
from .fields import (
    GENERATOR_NAMES,
    TruncatedField,
    TruncatedModule,
    UntrustedWindowError,
    derivative_field,
    euler_field,
    generator_field,
    identity_field,
    linear_combination,
    scaled_identity,
    split_by_degree,
)
from .products import (
    LocalityError,
    borcherds_defect,
    check_locality,
    field_nth_product,
    mode_action,
    normal_ordered,
    state_field,
    vacuum_spec_for,
)

__all__ = [
    # Fields
    "GENERATOR_NAMES",
    "TruncatedField",
    "TruncatedModule",
    "UntrustedWindowError",
    "derivative_field",
    "euler_field",
    "generator_field",
    "identity_field",
    "linear_combination",
    "scaled_identity",
    "split_by_degree",
    # Products and the state-field map
    "LocalityError",
    "borcherds_defect",
    "check_locality",
    "field_nth_product",
    "mode_action",
    "normal_ordered",
    "state_field",
    "vacuum_spec_for",
    # e-products
    "InsufficientOrderError",
    "ZSeries",
    "e_coefficient",
    "e_product",
]
