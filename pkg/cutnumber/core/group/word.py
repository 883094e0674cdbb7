"""
Freely reduced words in a free group on an explicit alphabet.

Conventions: ``[a, b] = a b a^-1 b^-1`` and the conjugate of ``a`` by ``b`` is ``b a b^-1``.
"""

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from cutnumber.utils.errors import (
    AlphabetMismatchError,
    GeneratorIndexError,
    InvalidParametersError,
)

Letter = Tuple[int, int]


@dataclass(frozen=True)
class Gen:
    """A generator of an alphabet: its 0-based index and display name."""

    index: int
    name: Optional[str] = None

    def __str__(self) -> str:
        return self.name if self.name is not None else f"x{self.index + 1}"


@dataclass(frozen=True)
class Alphabet:
    """An ordered set of generator names; generator ``i`` has index ``i``."""

    names: Tuple[str, ...]

    def __post_init__(self) -> None:
        if len(set(self.names)) != len(self.names):
            raise InvalidParametersError(f"Duplicate generator names in {list(self.names)}")

    @classmethod
    def standard(cls, size: int, prefix: str = "x") -> "Alphabet":
        """
        Get the alphabet ``x1, ..., x<size>``.

        Args:
            size: Number of generators
            prefix: Name prefix

        Returns:
            The alphabet
        """
        if size < 0:
            raise InvalidParametersError(f"Alphabet size must be non-negative, got {size}")
        return cls(tuple(f"{prefix}{i + 1}" for i in range(size)))

    @classmethod
    def from_names(cls, names: Iterable[str]) -> "Alphabet":
        return cls(tuple(names))

    @property
    def size(self) -> int:
        return len(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def gens(self) -> List[Gen]:
        return [Gen(i, name) for i, name in enumerate(self.names)]

    def index(self, name: str) -> int:
        """Get the index of a generator name."""
        try:
            return self.names.index(name)
        except ValueError:
            raise GeneratorIndexError(f"Unknown generator {name!r}", generator=name) from None

    def check_index(self, index: int) -> None:
        if not 0 <= index < len(self.names):
            raise GeneratorIndexError(
                f"Generator index {index} outside alphabet of size {len(self.names)}",
                index=index,
            )

    def gen(self, index: int, power: int = 1) -> "Word":
        """Get the word ``x_index^power``."""
        self.check_index(index)
        sign = 1 if power > 0 else -1
        return Word._raw(self, tuple((index, sign) for _ in range(abs(power))))

    def generators(self) -> List["Word"]:
        """Get every generator as a one-letter word."""
        return [self.gen(i) for i in range(len(self.names))]

    def identity(self) -> "Word":
        return Word._raw(self, ())


def _reduce(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    stack: List[Letter] = []
    for index, sign in letters:
        if stack and stack[-1][0] == index and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((index, sign))
    return tuple(stack)


class Word:
    """
    Immutable freely reduced word over an alphabet.

    Letters are ``(generator index, sign)`` pairs with sign ``+1`` or ``-1``. Combining
    words over different alphabets raises ``AlphabetMismatchError``.
    """

    __slots__ = ("_alphabet", "_letters")

    def __init__(self, alphabet: Alphabet, letters: Iterable[Letter] = ()) -> None:
        """
        Initialize a word, reducing it freely.

        Args:
            alphabet: Alphabet the word lives over
            letters: Sequence of ``(index, sign)`` pairs

        Raises:
            GeneratorIndexError: If an index lies outside the alphabet
            InvalidParametersError: If a sign is not ``+1`` or ``-1``
        """
        checked = []
        for index, sign in letters:
            alphabet.check_index(index)
            if sign not in (1, -1):
                raise InvalidParametersError(f"Letter sign must be +1 or -1, got {sign}")
            checked.append((index, sign))
        self._alphabet = alphabet
        self._letters = _reduce(checked)

    @classmethod
    def _raw(cls, alphabet: Alphabet, letters: Tuple[Letter, ...]) -> "Word":
        word = cls.__new__(cls)
        word._alphabet = alphabet
        word._letters = letters
        return word

    @property
    def alphabet(self) -> Alphabet:
        return self._alphabet

    @property
    def letters(self) -> Tuple[Letter, ...]:
        return self._letters

    def __len__(self) -> int:
        return len(self._letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self._letters)

    def is_identity(self) -> bool:
        return not self._letters

    def _check(self, other: "Word") -> None:
        if self._alphabet != other._alphabet:
            raise AlphabetMismatchError(
                f"Alphabet mismatch: {list(self._alphabet.names)} vs {list(other._alphabet.names)}"
            )

    def __mul__(self, other: "Word") -> "Word":
        self._check(other)
        left = list(self._letters)
        right = other._letters
        k = 0
        while left and k < len(right) and left[-1] == (right[k][0], -right[k][1]):
            left.pop()
            k += 1
        return Word._raw(self._alphabet, tuple(left) + right[k:])

    def inverse(self) -> "Word":
        return Word._raw(self._alphabet, tuple((g, -s) for g, s in reversed(self._letters)))

    __invert__ = inverse

    def __pow__(self, k: int) -> "Word":
        base = self if k >= 0 else self.inverse()
        result = self._alphabet.identity()
        for _ in range(abs(k)):
            result = result * base
        return result

    def prefix(self, length: int) -> "Word":
        """Get the word formed by the first ``length`` letters."""
        return Word._raw(self._alphabet, self._letters[:length])

    def abelianization(self) -> Tuple[int, ...]:
        """Get the exponent-sum vector of the word."""
        counts = [0] * len(self._alphabet)
        for index, sign in self._letters:
            counts[index] += sign
        return tuple(counts)

    def exponent_sum(self, weights: Sequence[int]) -> int:
        """Get the image of the word under the character ``x_i -> weights[i]``."""
        return sum(weights[index] * sign for index, sign in self._letters)

    def substitute(self, images: Sequence["Word"]) -> "Word":
        """
        Apply the homomorphism sending generator ``i`` to ``images[i]``.

        Args:
            images: One word per generator, all over a common target alphabet

        Returns:
            The image word
        """
        if len(images) != len(self._alphabet):
            raise InvalidParametersError(
                f"{len(images)} images for an alphabet of size {len(self._alphabet)}"
            )
        if not images:
            return self
        result = images[0].alphabet.identity()
        for index, sign in self._letters:
            result = result * (images[index] if sign > 0 else images[index].inverse())
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self._alphabet == other._alphabet and self._letters == other._letters

    def __hash__(self) -> int:
        return hash((self._alphabet, self._letters))

    def __lt__(self, other: "Word") -> bool:
        return (len(self), self._letters) < (len(other), other._letters)

    def __str__(self) -> str:
        from cutnumber.core.group.parser import format_word

        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"


def mul(u: Word, v: Word) -> Word:
    """Freely reduced product ``u v``."""
    return u * v


def inv(u: Word) -> Word:
    """Inverse word."""
    return u.inverse()


def power(u: Word, k: int) -> Word:
    """``u^k`` for any integer ``k``."""
    return u ** k


def commutator(a: Word, b: Word) -> Word:
    """Get ``[a, b] = a b a^-1 b^-1``."""
    return a * b * a.inverse() * b.inverse()


def conjugate(a: Word, b: Word) -> Word:
    """Get ``b a b^-1``."""
    return b * a * b.inverse()


def left_normed_commutator(words: Sequence[Word]) -> Word:
    """Get ``[w_1, [w_2, [..., w_k]]]`` (right-nested)."""
    if not words:
        raise InvalidParametersError("Empty commutator")
    result = words[-1]
    for w in reversed(words[:-1]):
        result = commutator(w, result)
    return result


def verify_commutator_expansion(a: Word, b: Word, c: Word) -> bool:
    """
    Check ``[a, bc] = [a, b] [a, c]^b`` in the free group.

    Args:
        a, b, c: Words over one alphabet

    Returns:
        True when both sides reduce to the same word
    """
    return commutator(a, b * c) == commutator(a, b) * conjugate(commutator(a, c), b)


def random_word(alphabet: Alphabet, length: int, rng: random.Random) -> Word:
    """
    Draw a random reduced word of at most ``length`` letters.

    Args:
        alphabet: Alphabet to draw from
        length: Number of letters drawn before reduction
        rng: Seeded random generator

    Returns:
        The reduced word
    """
    if len(alphabet) == 0:
        return alphabet.identity()
    letters = [(rng.randrange(len(alphabet)), rng.choice((1, -1))) for _ in range(length)]
    return Word(alphabet, letters)


def random_commutator_word(
    alphabet: Alphabet, rng: random.Random, factors: int = 2, length: int = 3
) -> Word:
    """
    Draw a random element of the commutator subgroup as a product of commutators.

    Args:
        alphabet: Alphabet to draw from
        rng: Seeded random generator
        factors: Number of commutator factors
        length: Length of each commutator argument

    Returns:
        A word with zero abelianization
    """
    result = alphabet.identity()
    for _ in range(factors):
        result = result * commutator(
            random_word(alphabet, length, rng), random_word(alphabet, length, rng)
        )
    return result


def random_second_derived_word(
    alphabet: Alphabet, rng: random.Random, factors: int = 2, length: int = 2
) -> Word:
    """
    Draw a random element of the second derived subgroup ``[F', F']``.

    Args:
        alphabet: Alphabet to draw from
        rng: Seeded random generator
        factors: Number of commutator factors
        length: Length of the arguments of the inner commutators

    Returns:
        A product of commutators of elements of the commutator subgroup
    """
    result = alphabet.identity()
    for _ in range(factors):
        u = random_commutator_word(alphabet, rng, 1, length)
        v = random_commutator_word(alphabet, rng, 1, length)
        result = result * conjugate(commutator(u, v), random_word(alphabet, length, rng))
    return result
