"""
Free metabelian and free nilpotent quotients.
"""

from cutnumber.core.quotients.metabelian import (
    MetabelianImage,
    equal_mod_second_derived,
    in_second_derived,
    jacobi_word,
    magnus_image,
    verify_all_jacobi,
    verify_jacobi,
)
from cutnumber.core.quotients.nilpotent import (
    F4_GUARD_DEGREE,
    F4_TRUNCATION,
    LcsWeight,
    MagnusSeries,
    ModuleSummary,
    equal_mod_lcs,
    free_nilpotent_alexander,
    lcs_weight,
    magnus_series,
)

__all__ = [
    "MetabelianImage",
    "MagnusSeries",
    "LcsWeight",
    "ModuleSummary",
    "magnus_image",
    "equal_mod_second_derived",
    "in_second_derived",
    "jacobi_word",
    "verify_jacobi",
    "verify_all_jacobi",
    "magnus_series",
    "lcs_weight",
    "equal_mod_lcs",
    "free_nilpotent_alexander",
    "F4_TRUNCATION",
    "F4_GUARD_DEGREE",
]
