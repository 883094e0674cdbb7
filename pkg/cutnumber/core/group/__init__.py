"""
Free group calculus for the cutnumber package.

This package provides:
- Alphabet, Gen and Word, freely reduced words with commutator and conjugation helpers
- GroupRingElt and the Fox derivative, plus abelianization to Laurent polynomials
- The word grammar used by presentation files and the command line
"""

from cutnumber.core.group.fox import (
    GroupRingElt,
    abelian_fox_gradient,
    abelianize_derivative,
    fox_derivative,
    fundamental_identity_holds,
)
from cutnumber.core.group.parser import format_word, is_identifier, parse_word
from cutnumber.core.group.word import (
    Alphabet,
    Gen,
    Letter,
    Word,
    commutator,
    conjugate,
    inv,
    left_normed_commutator,
    mul,
    power,
    random_commutator_word,
    random_second_derived_word,
    random_word,
    verify_commutator_expansion,
)

__all__ = [
    "Alphabet",
    "Gen",
    "Letter",
    "Word",
    "GroupRingElt",
    "mul",
    "inv",
    "power",
    "commutator",
    "conjugate",
    "left_normed_commutator",
    "verify_commutator_expansion",
    "fox_derivative",
    "abelianize_derivative",
    "abelian_fox_gradient",
    "fundamental_identity_holds",
    "parse_word",
    "format_word",
    "is_identifier",
    "random_word",
    "random_commutator_word",
    "random_second_derived_word",
]
