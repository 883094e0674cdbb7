"""
Jets at t = 1: univariate Laurent polynomials modulo J^2, where J = (t - 1).
"""

from dataclasses import dataclass
from typing import List

from cutnumber.core.ring.laurent import LaurentPoly


@dataclass(frozen=True)
class JetAtOne:
    """The class of ``p`` modulo ``J^2``, stored as ``(p(1), p'(1))``."""

    value: int
    slope: int

    @classmethod
    def of(cls, p: LaurentPoly) -> "JetAtOne":
        """Get the jet of a univariate polynomial."""
        return cls(p.value_at_one(), p.derivative_at_one())

    @classmethod
    def zero(cls) -> "JetAtOne":
        return cls(0, 0)

    def __add__(self, other: "JetAtOne") -> "JetAtOne":
        return JetAtOne(self.value + other.value, self.slope + other.slope)

    def __neg__(self) -> "JetAtOne":
        return JetAtOne(-self.value, -self.slope)

    def __sub__(self, other: "JetAtOne") -> "JetAtOne":
        return self + (-other)

    def __mul__(self, other: "JetAtOne") -> "JetAtOne":
        return JetAtOne(
            self.value * other.value, self.value * other.slope + other.value * self.slope
        )

    def in_j(self) -> bool:
        """Check whether the class lies in ``J``."""
        return self.value == 0

    def in_j2(self) -> bool:
        """Check whether the class lies in ``J^2``."""
        return self.value == 0 and self.slope == 0

    def to_json(self) -> List[int]:
        return [self.value, self.slope]

    def __str__(self) -> str:
        return f"({self.value}, {self.slope})"


def jet_at_one(p: LaurentPoly) -> JetAtOne:
    """
    Get ``(p(1), p'(1))`` for a univariate polynomial.

    Args:
        p: Polynomial of arity 1

    Returns:
        The jet
    """
    return JetAtOne.of(p)
