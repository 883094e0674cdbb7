"""
Exact ring arithmetic for the cutnumber package.

This package provides:
- LaurentPoly, sparse integer Laurent polynomials in any number of variables
- JetAtOne, classes of univariate polynomials modulo (t - 1)^2
- PolyMatrix with exact determinant and rank over the fraction field
- Integer Bareiss determinant and rank
"""

from cutnumber.core.ring.elimination import integer_det, integer_rank
from cutnumber.core.ring.jet import JetAtOne, jet_at_one
from cutnumber.core.ring.laurent import (
    INFINITE_VALUATION,
    LaurentPoly,
    add,
    divide_exact,
    j_valuation,
    mul,
    one_minus_t_power,
    specialize,
    t_power_minus_one,
)
from cutnumber.core.ring.matrix import PolyMatrix, det, rank_over_fraction_field

__all__ = [
    "LaurentPoly",
    "JetAtOne",
    "PolyMatrix",
    "INFINITE_VALUATION",
    "add",
    "mul",
    "specialize",
    "jet_at_one",
    "j_valuation",
    "divide_exact",
    "det",
    "rank_over_fraction_field",
    "integer_det",
    "integer_rank",
    "t_power_minus_one",
    "one_minus_t_power",
]
