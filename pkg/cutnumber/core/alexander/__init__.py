"""
Alexander modules of infinite cyclic covers.

This package provides:
- Presentation and PhiMap, with the presentation file format
- The Fox (Alexander) matrix of a presentation and the rank of H1 of a cover
- Corank obstructions packaged as rank certificates
"""

from cutnumber.core.alexander.cover import (
    alexander_matrix,
    corank_obstruction,
    cut_number_bounds,
    free_cover_rank_check,
    fundamental_identity_check,
    h1_rank_of_cover,
    sample_primitive_phis,
    specialized_matrix,
)
from cutnumber.core.alexander.presentation import (
    PhiMap,
    Presentation,
    free_abelian_presentation,
    free_group_presentation,
    load_presentation,
    parse_presentation,
)

__all__ = [
    "Presentation",
    "PhiMap",
    "parse_presentation",
    "load_presentation",
    "free_group_presentation",
    "free_abelian_presentation",
    "alexander_matrix",
    "specialized_matrix",
    "h1_rank_of_cover",
    "fundamental_identity_check",
    "free_cover_rank_check",
    "sample_primitive_phis",
    "cut_number_bounds",
    "corank_obstruction",
]
