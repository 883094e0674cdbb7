"""
The cut-number-one family.

This package provides:
- FamilyParams and the dictionary order on generator pairs
- The relation matrix from the case table and from the model relations
- Structural checks (decomposition, quadratic form) and commutator identities
- Nonsingularity and F/F_4 certificates, and seeded sweeps
"""

from cutnumber.core.family.certify import (
    ModelDeterminant,
    WCoverContext,
    f4_obstruction_certificate,
    model_determinant_check,
    nonsingularity_certificate,
    sweep,
    w_cover_context,
)
from cutnumber.core.family.identities import (
    a_at_one,
    mu_word,
    quadratic_form_check,
    s_at_one,
    symbolic_quadratic_form_check,
    verify_decomposition,
    verify_freerel,
    verify_muij2_reduction,
)
from cutnumber.core.family.params import (
    FamilyParams,
    PairIndex,
    pair_count,
    pair_permutation,
    pair_position,
    pairs,
    random_params,
    relabel,
)
from cutnumber.core.family.relations import (
    CaseEntry,
    case_table,
    format_case_table,
    jacobi_coefficients,
    longitude_coefficients,
    model_group_presentation,
    model_relation_matrix,
    relation_matrix,
    relation_matrix_mod_j2,
    symbolic_slope_matrix,
)

__all__ = [
    "FamilyParams",
    "PairIndex",
    "pairs",
    "pair_count",
    "pair_position",
    "pair_permutation",
    "relabel",
    "random_params",
    "CaseEntry",
    "case_table",
    "relation_matrix",
    "relation_matrix_mod_j2",
    "symbolic_slope_matrix",
    "format_case_table",
    "longitude_coefficients",
    "jacobi_coefficients",
    "model_relation_matrix",
    "model_group_presentation",
    "verify_decomposition",
    "a_at_one",
    "s_at_one",
    "quadratic_form_check",
    "symbolic_quadratic_form_check",
    "mu_word",
    "verify_muij2_reduction",
    "verify_freerel",
    "WCoverContext",
    "ModelDeterminant",
    "w_cover_context",
    "model_determinant_check",
    "nonsingularity_certificate",
    "f4_obstruction_certificate",
    "sweep",
]
