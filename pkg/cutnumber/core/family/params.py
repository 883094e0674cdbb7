"""
Parameters of the cut-number-one family and the dictionary order on generator pairs.

A family member is fixed by its first Betti number ``m``, a primitive character ``n`` and a
distinguished index ``N`` with ``n_N != 0``. Indices are 1-based throughout this package, to
match the generator names ``x1 .. xm``; matrix positions are 0-based.
"""

import math
import random
from dataclasses import dataclass
from functools import reduce
from typing import List, Optional, Sequence, Tuple

from cutnumber.utils.errors import InvalidParametersError, NonPrimitivePhiError
from cutnumber.utils.logger import get_logger

logger = get_logger("family.params")


@dataclass(frozen=True, order=True)
class PairIndex:
    """A pair ``i < j`` of generator indices (1-based)."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if not 1 <= self.i < self.j:
            raise InvalidParametersError(f"Pair indices must satisfy 1 <= i < j, got {self}")

    def position(self, m: int) -> int:
        return pair_position(self.i, self.j, m)

    def __contains__(self, index: int) -> bool:
        return index in (self.i, self.j)

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


def pair_count(m: int) -> int:
    return m * (m - 1) // 2


def pairs(m: int) -> List[PairIndex]:
    """Get every pair ``i < j <= m`` in dictionary order."""
    return [PairIndex(i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)]


def pair_position(i: int, j: int, m: int) -> int:
    """
    Get the 0-based position of the pair ``(i, j)`` in dictionary order.

    Args:
        i, j: Indices with ``1 <= i < j <= m``
        m: Number of generators

    Returns:
        Position in ``0 .. C(m, 2) - 1``
    """
    if not 1 <= i < j <= m:
        raise InvalidParametersError(f"Pair ({i},{j}) is not an ordered pair of 1..{m}")
    return (i - 1) * m - (i - 1) * i // 2 + (j - i - 1)


def _gcd(values: Sequence[int]) -> int:
    return reduce(math.gcd, (abs(v) for v in values), 0)


@dataclass(frozen=True)
class FamilyParams:
    """
    A member of the family: ``m`` generators, character ``x_i -> t^{n_i}`` and index ``N``.
    """

    m: int
    n: Tuple[int, ...]
    N: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise InvalidParametersError(f"m must be at least 1, got {self.m}", m=self.m)
        if len(self.n) != self.m:
            raise InvalidParametersError(
                f"n has {len(self.n)} entries, expected m={self.m}", n=list(self.n)
            )
        if _gcd(self.n) != 1:
            raise NonPrimitivePhiError(
                f"n={list(self.n)} is not primitive (gcd {_gcd(self.n)})", phi=list(self.n)
            )
        if not 1 <= self.N <= self.m:
            raise InvalidParametersError(f"N={self.N} outside 1..{self.m}", N=self.N)
        if self.n[self.N - 1] == 0:
            raise InvalidParametersError(f"n_N must be non-zero, got n_{self.N} = 0", N=self.N)

    @classmethod
    def create(cls, m: int, n: Sequence[int], N: Optional[int] = None) -> "FamilyParams":
        """
        Build parameters, choosing ``N`` as the smallest index with ``n_N != 0`` when omitted.

        Args:
            m: Number of generators (the first Betti number)
            n: Character exponents, one per generator
            N: Distinguished index (optional)

        Returns:
            Validated parameters
        """
        n = tuple(int(v) for v in n)
        if N is None:
            N = next((i + 1 for i, v in enumerate(n) if v != 0), 1)
        return cls(m, n, N)

    @property
    def n_N(self) -> int:
        return self.n[self.N - 1]

    @property
    def pair_count(self) -> int:
        return pair_count(self.m)

    def pairs(self) -> List[PairIndex]:
        return pairs(self.m)

    def __str__(self) -> str:
        return f"m={self.m} n={','.join(str(v) for v in self.n)} N={self.N}"


def pair_permutation(perm: Sequence[int], m: int) -> List[Tuple[int, int]]:
    """
    Get the signed permutation of pairs induced by relabelling generators.

    Generator ``i`` is renamed ``perm[i - 1]``. The pair ``(i, j)`` goes to the sorted image
    pair; the sign is ``-1`` when the relabelling reverses the order, since
    ``[x_b, x_a] = [x_a, x_b]^-1``.

    Args:
        perm: Permutation of ``1 .. m``
        m: Number of generators

    Returns:
        For each pair position, its image position and sign
    """
    if sorted(perm) != list(range(1, m + 1)):
        raise InvalidParametersError(f"{list(perm)} is not a permutation of 1..{m}")
    result = []
    for pair in pairs(m):
        a, b = perm[pair.i - 1], perm[pair.j - 1]
        result.append((pair_position(min(a, b), max(a, b), m), 1 if a < b else -1))
    return result


def relabel(params: FamilyParams, perm: Sequence[int]) -> FamilyParams:
    """
    Rename generator ``i`` to ``perm[i - 1]``.

    Args:
        params: Family member
        perm: Permutation of ``1 .. m``

    Returns:
        The relabelled member; ``N`` moves with its generator
    """
    if sorted(perm) != list(range(1, params.m + 1)):
        raise InvalidParametersError(f"{list(perm)} is not a permutation of 1..{params.m}")
    n = [0] * params.m
    for i, v in enumerate(params.n):
        n[perm[i] - 1] = v
    return FamilyParams(params.m, tuple(n), perm[params.N - 1])


def random_params(rng: random.Random, max_m: int, bound: int = 5) -> FamilyParams:
    """
    Draw a random valid family member.

    Args:
        rng: Seeded random generator
        max_m: Largest ``m`` drawn (``m`` is uniform in ``1 .. max_m``)
        bound: Entries of ``n`` are drawn from ``[-bound, bound]``

    Returns:
        Parameters with a primitive ``n`` and a uniformly chosen valid ``N``
    """
    if max_m < 1 or bound < 1:
        raise InvalidParametersError(f"Need max_m >= 1 and bound >= 1, got {max_m}, {bound}")
    m = rng.randint(1, max_m)
    while True:
        n = tuple(rng.randint(-bound, bound) for _ in range(m))
        if _gcd(n) == 1:
            break
    N = rng.choice([i + 1 for i, v in enumerate(n) if v != 0])
    params = FamilyParams(m, n, N)
    logger.debug(f"Drew family member {params}")
    return params
