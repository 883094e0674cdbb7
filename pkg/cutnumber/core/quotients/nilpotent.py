"""
Free nilpotent quotients F/F_k through the truncated Magnus expansion.

The expansion sends ``x_i`` to ``1 + X_i`` in the ring of non-commuting power series; a word
lies in F_k exactly when its expansion is ``1`` plus terms of degree at least ``k``.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from cutnumber.core.alexander.presentation import PhiLike, as_phi
from cutnumber.core.group import Alphabet, Word, commutator
from cutnumber.core.ring import integer_rank
from cutnumber.utils.errors import (
    AlphabetMismatchError,
    InvalidParametersError,
    UnsupportedParametersError,
)
from cutnumber.utils.logger import get_logger

logger = get_logger("quotients.nilpotent")

Monomial = Tuple[int, ...]

# F/F_4 work: degree 3 decides the quotient, degree 4 separates "trivial mod F_4" from trivial.
F4_TRUNCATION = 3
F4_GUARD_DEGREE = 4

MAX_SUPPORTED_CLASS = 8


class MagnusSeries:
    """
    Non-commutative power series in ``X_1 .. X_m`` truncated above degree ``D``.

    Monomials are tuples of generator indices; only non-zero coefficients are stored.
    """

    __slots__ = ("_size", "_degree", "_coefficients")

    def __init__(
        self, size: int, degree: int, coefficients: Optional[Dict[Monomial, int]] = None
    ) -> None:
        if degree < 1:
            raise InvalidParametersError(f"Truncation degree must be at least 1, got {degree}")
        self._size = size
        self._degree = degree
        self._coefficients = {
            k: v for k, v in (coefficients or {}).items() if v and len(k) <= degree
        }

    @classmethod
    def one(cls, size: int, degree: int) -> "MagnusSeries":
        return cls(size, degree, {(): 1})

    @property
    def size(self) -> int:
        return self._size

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def coefficients(self) -> Dict[Monomial, int]:
        return dict(self._coefficients)

    def coefficient(self, monomial: Sequence[int]) -> int:
        return self._coefficients.get(tuple(monomial), 0)

    def homogeneous_part(self, k: int) -> Dict[Monomial, int]:
        """Get the degree ``k`` terms."""
        return {m: c for m, c in self._coefficients.items() if len(m) == k}

    def lowest_nonconstant_degree(self) -> Optional[int]:
        """Get the lowest ``k >= 1`` with a non-zero degree ``k`` term, if any."""
        degrees = [len(m) for m in self._coefficients if m]
        return min(degrees) if degrees else None

    def is_one(self) -> bool:
        return self._coefficients == {(): 1}

    def _check(self, other: "MagnusSeries") -> None:
        if (self._size, self._degree) != (other._size, other._degree):
            raise AlphabetMismatchError(
                f"Series over ({self._size}, D={self._degree}) "
                f"and ({other._size}, D={other._degree})"
            )

    def __mul__(self, other: "MagnusSeries") -> "MagnusSeries":
        self._check(other)
        result: Dict[Monomial, int] = {}
        for m1, c1 in self._coefficients.items():
            room = self._degree - len(m1)
            for m2, c2 in other._coefficients.items():
                if len(m2) > room:
                    continue
                key = m1 + m2
                result[key] = result.get(key, 0) + c1 * c2
        return MagnusSeries(self._size, self._degree, result)

    def times_letter(self, index: int, sign: int) -> "MagnusSeries":
        """Right-multiply by the expansion of ``x_index^sign``."""
        result = dict(self._coefficients)
        for monomial, c in self._coefficients.items():
            room = self._degree - len(monomial)
            if sign > 0:
                if room >= 1:
                    key = monomial + (index,)
                    result[key] = result.get(key, 0) + c
                continue
            # x^-1 = 1 - X + X^2 - ...
            for power in range(1, room + 1):
                key = monomial + (index,) * power
                result[key] = result.get(key, 0) + (c if power % 2 == 0 else -c)
        return MagnusSeries(self._size, self._degree, result)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MagnusSeries):
            return NotImplemented
        return (
            self._size == other._size
            and self._degree == other._degree
            and self._coefficients == other._coefficients
        )

    def __hash__(self) -> int:
        return hash((self._size, self._degree, frozenset(self._coefficients.items())))

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        if names is None:
            names = [f"X{i + 1}" for i in range(self._size)]
        if not self._coefficients:
            return "0"
        pieces: List[str] = []
        for monomial, c in sorted(self._coefficients.items(), key=lambda kv: (len(kv[0]), kv[0])):
            body = "".join(names[i] for i in monomial)
            if not body:
                term = str(abs(c))
            elif abs(c) == 1:
                term = body
            else:
                term = f"{abs(c)}{body}"
            if not pieces:
                pieces.append(term if c > 0 else f"-{term}")
            else:
                pieces.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"MagnusSeries(D={self._degree}, {self.format()!r})"


def magnus_series(w: Word, degree: int) -> MagnusSeries:
    """
    Expand a word in the truncated Magnus expansion.

    Args:
        w: Word
        degree: Truncation degree ``D >= 1``

    Returns:
        The series modulo terms of degree above ``D``
    """
    series = MagnusSeries.one(len(w.alphabet), degree)
    for index, sign in w.letters:
        series = series.times_letter(index, sign)
    return series


@dataclass(frozen=True)
class LcsWeight:
    """Position of a word in the lower central series, as far as the truncation can see."""

    weight: Optional[int]
    bound: int
    identity: bool = False

    @property
    def at_least_bound(self) -> bool:
        """True when the word lies in F_{bound+1} but is not the identity."""
        return self.weight is None and not self.identity

    def __str__(self) -> str:
        if self.identity:
            return "identity"
        if self.weight is None:
            return f">={self.bound + 1}"
        return str(self.weight)

    def to_json(self) -> Any:
        return str(self) if self.weight is None else self.weight


def lcs_weight(w: Word, max_k: int) -> LcsWeight:
    """
    Get the largest ``k <= max_k`` with ``w`` in F_k.

    Args:
        w: Word
        max_k: Largest weight to resolve (``>= 1``)

    Returns:
        The weight, or a marker for ``>= max_k + 1`` or the identity
    """
    if max_k < 1:
        raise InvalidParametersError(f"max_k must be at least 1, got {max_k}")
    if w.is_identity():
        return LcsWeight(None, max_k, identity=True)
    if max_k == 1:
        return LcsWeight(1, max_k)
    lowest = magnus_series(w, max_k).lowest_nonconstant_degree()
    return LcsWeight(lowest, max_k)


def equal_mod_lcs(u: Word, v: Word, k: int) -> bool:
    """
    Decide whether ``u`` and ``v`` agree in F/F_k.

    Args:
        u, v: Words over the same alphabet
        k: Lower central series index (``>= 2``)

    Returns:
        True when ``u v^-1`` lies in F_k
    """
    if u.alphabet != v.alphabet:
        raise AlphabetMismatchError("Cannot compare words over different alphabets")
    if k < 2:
        return True
    return magnus_series(u * v.inverse(), k - 1).is_one()


@dataclass(frozen=True)
class ModuleSummary:
    """Additive description of N/N' for a free nilpotent quotient and a character."""

    additive_rank: int
    annihilator_exponent: int
    cyclic: bool
    nilpotency_class: int
    phi: Tuple[int, ...]

    def matches_truncated_ring(self, exponent: int) -> bool:
        """Check consistency with ``Z[t^{±1}]/J^exponent``."""
        return (
            self.cyclic
            and self.additive_rank == exponent
            and self.annihilator_exponent == exponent
        )

    def as_tuple(self) -> Tuple[int, int, bool]:
        return self.additive_rank, self.annihilator_exponent, self.cyclic

    def to_json(self) -> Dict[str, Any]:
        return {
            "additive_rank": self.additive_rank,
            "annihilator_exponent": self.annihilator_exponent,
            "cyclic": self.cyclic,
            "nilpotency_class": self.nilpotency_class,
            "phi": list(self.phi),
        }


def _one_y_part(series: MagnusSeries, basis: List[Monomial]) -> List[int]:
    return [series.coefficient(m) for m in basis]


def free_nilpotent_alexander(
    rank: int, nilpotency_class: int, phi: PhiLike = (1, 0)
) -> ModuleSummary:
    """
    Describe N/N' where N is the kernel of ``phi`` on the free nilpotent group F(2)/F_{k+1}.

    For ``u`` in N the part of its Magnus expansion (truncated at degree ``k``) that is
    linear in ``Y`` is additive and kills N'; the generator ``t`` acts by conjugation with
    ``x``. The images of ``x^a y x^-a`` and of the iterated commutators ``[x, [x, ..., y]]``
    are compared by integer rank.

    Args:
        rank: Rank of the free group (only 2 is supported)
        nilpotency_class: Class ``k`` of the quotient F/F_{k+1}
        phi: Character; only ``(1, 0)`` is supported

    Returns:
        Additive rank, annihilator exponent and cyclicity of N/N'

    Raises:
        InvalidParametersError: If the class is below 1
        UnsupportedParametersError: For other ranks, characters or very large classes
    """
    n = as_phi(phi).n
    if rank != 2 or n != (1, 0):
        raise UnsupportedParametersError(
            f"Only rank 2 with phi=(1, 0) is supported, got rank {rank}, phi={list(n)}",
            rank=rank,
            phi=list(n),
        )
    k = nilpotency_class
    if k < 1:
        raise InvalidParametersError(f"Nilpotency class must be at least 1, got {k}")
    if k > MAX_SUPPORTED_CLASS:
        raise UnsupportedParametersError(
            f"Nilpotency class above {MAX_SUPPORTED_CLASS} is not supported", nilpotency_class=k
        )

    alphabet = Alphabet.from_names(("x", "y"))
    x, y = alphabet.generators()
    basis = [(0,) * a + (1,) + (0,) * b for a in range(k) for b in range(k - a)]

    conjugates = [
        _one_y_part(magnus_series((x ** a) * y * (x ** -a), k), basis) for a in range(k + 1)
    ]
    commutators: List[List[int]] = []
    current = y
    annihilator = None
    for e in range(k + 2):
        image = _one_y_part(magnus_series(current, k), basis)
        if not any(image):
            annihilator = e
            break
        commutators.append(image)
        current = commutator(x, current)
    if annihilator is None:
        raise UnsupportedParametersError(f"No annihilating power found for class {k}")

    conjugate_rank = integer_rank(conjugates, len(basis))
    commutator_rank = integer_rank(commutators, len(basis)) if commutators else 0
    joint_rank = integer_rank(conjugates + commutators, len(basis))
    cyclic = commutator_rank == conjugate_rank == joint_rank
    summary = ModuleSummary(conjugate_rank, annihilator, cyclic, k, n)
    logger.debug(f"N/N' for F(2)/F_{k + 1}, phi={list(n)}: {summary.as_tuple()}")
    return summary
