"""Zhu algebra, contravariant forms, unitarity, conformal vectors and singular vectors."""

from .conformal import (
    ConformalName,
    ConformalVector,
    central_charge,
    central_charge_report,
    closed_form_central_charge,
    commutant_defect,
    conformal_vector,
    omega_prime_l1,
    virasoro_defect,
)
from .counting import c2_quotient_dim, tensor_dim_check
from .errors import AsymmetricGramError, NonVacuumError, PreconditionError
from .gram import (
    DegreeVerdict,
    GramMatrix,
    Positivity,
    classify_symmetric,
    contravariance_defect,
    form,
    gram_matrix,
    gram_rank,
    is_positive,
    positivity_scan,
)
from .phi import phi_automorphism_defect, phi_involution
from .singular import cpq, cpq_degree, embed_via_omega_tilde, singular_vector_search
from .unitarity import (
    UnitarityCase,
    UnitarityVerdict,
    discrete_central_charge,
    discrete_series_index,
    discrete_weight,
    discrete_weights,
    minimal_model_grid,
    unitarity_classify,
)
from .zhu import (
    ZHU_RING,
    ZHU_X,
    ZHU_Y,
    ZhuPoly,
    o_relation,
    zhu_poly_to_json,
    zhu_product,
    zhu_reduce,
    zhu_relation_defect,
)

__all__ = [
    # Errors
    "AsymmetricGramError",
    "NonVacuumError",
    "PreconditionError",
    # Zhu algebra
    "ZHU_RING",
    "ZHU_X",
    "ZHU_Y",
    "ZhuPoly",
    "o_relation",
    "zhu_poly_to_json",
    "zhu_product",
    "zhu_reduce",
    "zhu_relation_defect",
    # Contravariant form
    "DegreeVerdict",
    "GramMatrix",
    "Positivity",
    "classify_symmetric",
    "contravariance_defect",
    "form",
    "gram_matrix",
    "gram_rank",
    "is_positive",
    "positivity_scan",
    # Unitarity
    "UnitarityCase",
    "UnitarityVerdict",
    "discrete_central_charge",
    "discrete_series_index",
    "discrete_weight",
    "discrete_weights",
    "minimal_model_grid",
    "unitarity_classify",
    # Conformal vectors
    "ConformalName",
    "ConformalVector",
    "central_charge",
    "central_charge_report",
    "closed_form_central_charge",
    "commutant_defect",
    "conformal_vector",
    "omega_prime_l1",
    "virasoro_defect",
    # Singular vectors and counting
    "c2_quotient_dim",
    "cpq",
    "cpq_degree",
    "embed_via_omega_tilde",
    "singular_vector_search",
    "tensor_dim_check",
    # Involution
    "phi_automorphism_defect",
    "phi_involution",
]
