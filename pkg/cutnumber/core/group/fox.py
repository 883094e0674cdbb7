"""
Fox free differential calculus.

Derivatives live in the integral group ring Z[F]; abelianizing pushes them to the Laurent ring
Z[x_1^{±1}, ..., x_m^{±1}] = Z[F/F'].
"""

from types import MappingProxyType
from typing import Dict, List, Mapping, Optional

from cutnumber.core.group.word import Alphabet, Word
from cutnumber.core.ring import LaurentPoly
from cutnumber.utils.errors import AlphabetMismatchError, InvalidParametersError


class GroupRingElt:
    """
    Finite integer combination of words; zero coefficients are never stored.

    Only the operations Fox calculus needs are provided.
    """

    __slots__ = ("_alphabet", "_terms")

    def __init__(self, alphabet: Alphabet, terms: Optional[Mapping[Word, int]] = None) -> None:
        self._alphabet = alphabet
        clean: Dict[Word, int] = {}
        for word, coefficient in (terms or {}).items():
            if word.alphabet != alphabet:
                raise AlphabetMismatchError("Group ring term over a foreign alphabet")
            if coefficient:
                clean[word] = clean.get(word, 0) + int(coefficient)
        self._terms = {w: c for w, c in clean.items() if c}

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "GroupRingElt":
        return cls(alphabet)

    @classmethod
    def of(cls, word: Word, coefficient: int = 1) -> "GroupRingElt":
        return cls(word.alphabet, {word: coefficient})

    @property
    def alphabet(self) -> Alphabet:
        return self._alphabet

    @property
    def terms(self) -> Mapping[Word, int]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: "GroupRingElt") -> None:
        if self._alphabet != other._alphabet:
            raise AlphabetMismatchError("Group ring elements over different alphabets")

    def __add__(self, other: "GroupRingElt") -> "GroupRingElt":
        self._check(other)
        terms = dict(self._terms)
        for word, coefficient in other._terms.items():
            terms[word] = terms.get(word, 0) + coefficient
        return GroupRingElt(self._alphabet, terms)

    def __neg__(self) -> "GroupRingElt":
        return GroupRingElt(self._alphabet, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "GroupRingElt") -> "GroupRingElt":
        return self + (-other)

    def right_multiply(self, word: Word) -> "GroupRingElt":
        """Get ``self * word``."""
        terms: Dict[Word, int] = {}
        for w, c in self._terms.items():
            key = w * word
            terms[key] = terms.get(key, 0) + c
        return GroupRingElt(self._alphabet, terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupRingElt):
            return NotImplemented
        return self._alphabet == other._alphabet and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self._alphabet, frozenset(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for word, c in sorted(self._terms.items()):
            body = str(word)
            term = body if abs(c) == 1 else f"{abs(c)}*({body})"
            if not pieces:
                pieces.append(term if c > 0 else f"-{term}")
            else:
                pieces.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"GroupRingElt({str(self)!r})"


def fox_derivative(w: Word, i: int) -> GroupRingElt:
    """
    Compute the Fox derivative of a word with respect to generator ``i``.

    A letter ``x_i`` at position k contributes ``+prefix`` (the word before it); a letter
    ``x_i^-1`` contributes ``-prefix * x_i^-1``.

    Args:
        w: Reduced word
        i: Generator index

    Returns:
        The derivative in Z[F]

    Raises:
        GeneratorIndexError: If ``i`` lies outside the alphabet
    """
    alphabet = w.alphabet
    alphabet.check_index(i)
    terms: Dict[Word, int] = {}
    letters = w.letters
    for k, (index, sign) in enumerate(letters):
        if index != i:
            continue
        if sign > 0:
            key, c = w.prefix(k), 1
        else:
            key, c = w.prefix(k + 1), -1
        terms[key] = terms.get(key, 0) + c
    return GroupRingElt(alphabet, terms)


def abelianize_derivative(d: GroupRingElt) -> LaurentPoly:
    """
    Push a group ring element to the Laurent ring: each word goes to its exponent monomial.

    Args:
        d: Element of Z[F] over a non-empty alphabet

    Returns:
        Laurent polynomial of arity equal to the alphabet size
    """
    size = len(d.alphabet)
    if size == 0:
        raise InvalidParametersError("Cannot abelianize over an empty alphabet")
    terms: Dict[tuple, int] = {}
    for word, c in d.terms.items():
        key = word.abelianization()
        terms[key] = terms.get(key, 0) + c
    return LaurentPoly(size, terms)


def abelian_fox_gradient(w: Word) -> List[LaurentPoly]:
    """
    Compute every abelianized Fox derivative of a word in one pass.

    Args:
        w: Word over a non-empty alphabet

    Returns:
        List whose entry ``i`` is the abelianized ``dw/dx_i``
    """
    size = len(w.alphabet)
    if size == 0:
        raise InvalidParametersError("Cannot abelianize over an empty alphabet")
    accumulators: List[Dict[tuple, int]] = [{} for _ in range(size)]
    position = [0] * size
    for index, sign in w.letters:
        if sign > 0:
            key = tuple(position)
            position[index] += 1
            bucket = accumulators[index]
            bucket[key] = bucket.get(key, 0) + 1
        else:
            position[index] -= 1
            key = tuple(position)
            bucket = accumulators[index]
            bucket[key] = bucket.get(key, 0) - 1
    return [LaurentPoly(size, terms) for terms in accumulators]


def fundamental_identity_holds(w: Word) -> bool:
    """
    Check ``sum_i (dw/dx_i) (x_i - 1) = w - 1`` in Z[F].

    Args:
        w: Any word

    Returns:
        True when the identity holds
    """
    alphabet = w.alphabet
    total = GroupRingElt.zero(alphabet)
    for i, x in enumerate(alphabet.generators()):
        d = fox_derivative(w, i)
        total = total + d.right_multiply(x) - d
    expected = GroupRingElt.of(w) - GroupRingElt.of(alphabet.identity())
    return total == expected
