"""
Shared helpers for the test suite: seeded generators, random ring elements and a sympy oracle.
"""

import random
from typing import Sequence

import sympy

from cutnumber.core.alexander import Presentation
from cutnumber.core.group import Word
from cutnumber.core.ring import LaurentPoly, PolyMatrix

T = sympy.Symbol("t")


def make_rng(seed: int) -> random.Random:
    return random.Random(seed)


def random_laurent(
    rng: random.Random, arity: int = 1, terms: int = 3, degree: int = 3, bound: int = 4
) -> LaurentPoly:
    """Draw a random Laurent polynomial with small exponents and coefficients."""
    data = {}
    for _ in range(terms):
        exponent = tuple(rng.randint(-degree, degree) for _ in range(arity))
        data[exponent] = data.get(exponent, 0) + rng.randint(-bound, bound)
    return LaurentPoly(arity, data)


def random_poly_matrix(rng: random.Random, size: int, terms: int = 2) -> PolyMatrix:
    rows = [[random_laurent(rng, 1, terms, 2, 3) for _ in range(size)] for _ in range(size)]
    return PolyMatrix.from_rows(rows, arity=1, cols=size)


def to_sympy(p: LaurentPoly) -> sympy.Expr:
    """Univariate Laurent polynomial as a sympy expression in ``t``."""
    return sum((c * T ** e[0] for e, c in p.items()), sympy.Integer(0))


def sympy_equal(a: sympy.Expr, b: sympy.Expr) -> bool:
    return sympy.simplify(sympy.together(a - b)) == 0


def sympy_det(matrix: PolyMatrix) -> sympy.Expr:
    return sympy.Matrix(
        [[to_sympy(e) for e in matrix.row(i)] for i in range(matrix.rows)]
    ).det(method="berkowitz")


def add_consequence(presentation: Presentation, rng: random.Random) -> Presentation:
    """Tietze move: append a conjugate of a product of existing relators."""
    alphabet = presentation.alphabet
    relator: Word = alphabet.identity()
    for r in presentation.relators:
        if rng.random() < 0.5:
            relator = relator * r
    x = alphabet.generators()
    g = x[rng.randrange(len(x))]
    return presentation.with_relator(g * relator * g.inverse())


def same_letters(a: Sequence[Word], b: Sequence[Word]) -> bool:
    """Compare words letter by letter, ignoring generator names."""
    return [w.letters for w in a] == [w.letters for w in b]
