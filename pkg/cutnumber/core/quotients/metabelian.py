"""
The free metabelian group F/F'' through the Magnus embedding.

A word ``w`` maps to ``(alpha, d)`` where ``alpha`` is its exponent-sum vector and ``d_i`` is
the abelianized Fox derivative ``dw/dx_i``. The kernel of this map on F is exactly F''.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Tuple

from cutnumber.core.group import Alphabet, Word, abelian_fox_gradient, commutator
from cutnumber.core.ring import LaurentPoly
from cutnumber.utils.errors import AlphabetMismatchError, GeneratorIndexError
from cutnumber.utils.logger import get_logger

logger = get_logger("quotients.metabelian")


@dataclass(frozen=True)
class MetabelianImage:
    """Image of a word in the Magnus embedding of F/F''."""

    abelianization: Tuple[int, ...]
    derivatives: Tuple[LaurentPoly, ...]

    @property
    def rank(self) -> int:
        return len(self.abelianization)

    def _unit(self) -> LaurentPoly:
        return LaurentPoly.monomial(self.abelianization)

    def is_trivial(self) -> bool:
        return not any(self.abelianization) and all(d.is_zero() for d in self.derivatives)

    def __mul__(self, other: "MetabelianImage") -> "MetabelianImage":
        unit = self._unit()
        return MetabelianImage(
            tuple(a + b for a, b in zip(self.abelianization, other.abelianization)),
            tuple(du + unit * dv for du, dv in zip(self.derivatives, other.derivatives)),
        )

    def inverse(self) -> "MetabelianImage":
        unit = LaurentPoly.monomial(tuple(-a for a in self.abelianization))
        return MetabelianImage(
            tuple(-a for a in self.abelianization),
            tuple(-(unit * d) for d in self.derivatives),
        )

    def fundamental_identity_holds(self) -> bool:
        """Check ``sum_i d_i (x_i - 1) = x^alpha - 1``."""
        m = self.rank
        total = LaurentPoly.zero(m)
        for i, d in enumerate(self.derivatives):
            total = total + d * (LaurentPoly.variable(i, m) - 1)
        return total == self._unit() - 1

    def to_json(self) -> Dict[str, Any]:
        return {
            "abelianization": list(self.abelianization),
            "derivatives": [d.to_json() for d in self.derivatives],
        }

    def __str__(self) -> str:
        parts = ", ".join(d.format() for d in self.derivatives)
        return f"({list(self.abelianization)}; {parts})"


def magnus_image(w: Word) -> MetabelianImage:
    """
    Map a word into the Magnus embedding of F/F''.

    Args:
        w: Word over a non-empty alphabet

    Returns:
        The image ``(alpha, d)``
    """
    return MetabelianImage(w.abelianization(), tuple(abelian_fox_gradient(w)))


def equal_mod_second_derived(u: Word, v: Word) -> bool:
    """
    Decide whether two words agree in F/F''.

    Args:
        u, v: Words over the same alphabet

    Returns:
        True when their Magnus images coincide

    Raises:
        AlphabetMismatchError: If the alphabets differ
    """
    if u.alphabet != v.alphabet:
        raise AlphabetMismatchError("Cannot compare words over different alphabets")
    return magnus_image(u) == magnus_image(v)


def in_second_derived(w: Word) -> bool:
    """Check whether a word lies in F''."""
    return magnus_image(w).is_trivial()


def jacobi_word(alphabet: Alphabet, i: int, j: int, k: int) -> Word:
    """
    Get ``[x_i,[x_j,x_k]] [x_j,[x_k,x_i]] [x_k,[x_i,x_j]]`` for 0-based indices.
    """
    x = alphabet.generators()
    return (
        commutator(x[i], commutator(x[j], x[k]))
        * commutator(x[j], commutator(x[k], x[i]))
        * commutator(x[k], commutator(x[i], x[j]))
    )


def verify_jacobi(i: int, j: int, k: int, m: int) -> bool:
    """
    Check the Jacobi relation for generators ``i < j < k`` (1-based) of F(m) modulo F''.

    Args:
        i, j, k: Generator indices with ``1 <= i < j < k <= m``
        m: Rank of the free group

    Returns:
        True when the Jacobi product is trivial in F/F''

    Raises:
        GeneratorIndexError: If the indices are out of range or not increasing
    """
    if not 1 <= i < j < k <= m:
        raise GeneratorIndexError(
            f"Jacobi indices must satisfy 1 <= i < j < k <= m, got ({i}, {j}, {k}) with m={m}",
            indices=[i, j, k],
            m=m,
        )
    word = jacobi_word(Alphabet.standard(m), i - 1, j - 1, k - 1)
    result = in_second_derived(word)
    logger.debug(f"Jacobi ({i}, {j}, {k}) in F({m}): {result}")
    return result


def verify_all_jacobi(m: int) -> List[Tuple[int, int, int]]:
    """
    Check every Jacobi triple of F(m).

    Args:
        m: Rank of the free group

    Returns:
        The triples (1-based) whose relation fails; empty when all hold
    """
    failures = []
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            for k in range(j + 1, m + 1):
                if not verify_jacobi(i, j, k, m):
                    failures.append((i, j, k))
    return failures
