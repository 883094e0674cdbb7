"""
Exact Laurent polynomials with integer coefficients.

A ``LaurentPoly`` of arity ``k`` is an element of Z[x_1^{±1}, ..., x_k^{±1}], stored
sparsely as a mapping from exponent vectors to non-zero integers. Arity 1 is the ring
Z[t^{±1}].
"""

import math
from fractions import Fraction
from types import MappingProxyType
from typing import (
    Any,
    Dict,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from cutnumber.utils.errors import ArityMismatchError, InexactDivisionError
from cutnumber.utils.logger import get_logger

logger = get_logger("ring.laurent")

Exponent = Tuple[int, ...]
Scalar = Union[int, "LaurentPoly"]

INFINITE_VALUATION = math.inf


def _add_exponents(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def _sub_exponents(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


class LaurentPoly:
    """
    Immutable sparse Laurent polynomial with arbitrary-precision integer coefficients.

    No stored coefficient is zero, so equality is structural equality of the term maps.
    Keys are ordered lexicographically wherever an ordering is observable (iteration,
    serialization, printing).
    """

    __slots__ = ("_arity", "_terms", "_hash")

    def __init__(self, arity: int, terms: Optional[Mapping[Sequence[int], int]] = None) -> None:
        """
        Initialize a Laurent polynomial.

        Args:
            arity: Number of variables (positive)
            terms: Mapping from exponent vectors of length ``arity`` to integer coefficients;
                zero coefficients are dropped and repeated keys are not possible

        Raises:
            ArityMismatchError: If an exponent vector has the wrong length
        """
        if arity < 1:
            raise ArityMismatchError(f"Arity must be positive, got {arity}")
        clean: Dict[Exponent, int] = {}
        for exponent, coefficient in (terms or {}).items():
            key = tuple(int(e) for e in exponent)
            if len(key) != arity:
                raise ArityMismatchError(
                    f"Exponent {key} has length {len(key)}, expected {arity}"
                )
            value = int(coefficient)
            if value:
                clean[key] = value
        self._arity = arity
        self._terms = clean
        self._hash: Optional[int] = None

    @classmethod
    def _raw(cls, arity: int, terms: Dict[Exponent, int]) -> "LaurentPoly":
        # Trusted constructor: terms already canonical.
        poly = cls.__new__(cls)
        poly._arity = arity
        poly._terms = terms
        poly._hash = None
        return poly

    # Constructors

    @classmethod
    def zero(cls, arity: int = 1) -> "LaurentPoly":
        """Get the zero polynomial of the given arity."""
        return cls._raw(arity, {})

    @classmethod
    def one(cls, arity: int = 1) -> "LaurentPoly":
        """Get the constant polynomial 1 of the given arity."""
        return cls.constant(1, arity)

    @classmethod
    def constant(cls, value: int, arity: int = 1) -> "LaurentPoly":
        """Get a constant polynomial."""
        return cls(arity, {(0,) * arity: value})

    @classmethod
    def monomial(cls, exponent: Sequence[int], coefficient: int = 1) -> "LaurentPoly":
        """
        Get the monomial ``coefficient * x^exponent``.

        Args:
            exponent: Exponent vector; its length is the arity
            coefficient: Integer coefficient

        Returns:
            The monomial
        """
        return cls(len(exponent), {tuple(exponent): coefficient})

    @classmethod
    def variable(cls, index: int, arity: int, power: int = 1) -> "LaurentPoly":
        """
        Get ``x_index^power`` in a ring of the given arity (0-based index).

        Args:
            index: Variable index in ``0 .. arity-1``
            arity: Number of variables
            power: Exponent (may be negative)

        Returns:
            The monomial
        """
        if not 0 <= index < arity:
            raise ArityMismatchError(f"Variable index {index} outside arity {arity}")
        exponent = [0] * arity
        exponent[index] = power
        return cls.monomial(exponent)

    @classmethod
    def t(cls, power: int = 1) -> "LaurentPoly":
        """Get ``t^power`` in Z[t^{±1}]."""
        return cls.monomial((power,))

    @classmethod
    def univariate(cls, coefficients: Mapping[int, int]) -> "LaurentPoly":
        """
        Build an element of Z[t^{±1}] from a degree → coefficient mapping.

        Args:
            coefficients: Mapping from integer degree to coefficient

        Returns:
            The polynomial
        """
        return cls(1, {(d,): c for d, c in coefficients.items()})

    # Accessors

    @property
    def arity(self) -> int:
        """Number of variables."""
        return self._arity

    @property
    def terms(self) -> Mapping[Exponent, int]:
        """Read-only view of the exponent → coefficient map."""
        return MappingProxyType(self._terms)

    def items(self) -> List[Tuple[Exponent, int]]:
        """
        Get the terms sorted lexicographically by exponent.

        Returns:
            List of (exponent, coefficient) pairs
        """
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        """Check whether this is the zero polynomial."""
        return not self._terms

    def is_constant(self) -> bool:
        """Check whether the polynomial has no non-constant term."""
        zero = (0,) * self._arity
        return all(e == zero for e in self._terms)

    def is_monomial(self) -> bool:
        """Check whether the polynomial has exactly one term."""
        return len(self._terms) == 1

    def constant_term(self) -> int:
        """Get the coefficient of the constant monomial."""
        return self._terms.get((0,) * self._arity, 0)

    def coefficient(self, exponent: Sequence[int]) -> int:
        """Get the coefficient of the given monomial (0 if absent)."""
        return self._terms.get(tuple(exponent), 0)

    def min_exponents(self) -> Exponent:
        """
        Get the per-variable minimum exponent over all terms.

        Returns:
            Exponent vector; all zeros for the zero polynomial
        """
        if not self._terms:
            return (0,) * self._arity
        return tuple(min(e[i] for e in self._terms) for i in range(self._arity))

    def max_exponents(self) -> Exponent:
        """
        Get the per-variable maximum exponent over all terms.

        Returns:
            Exponent vector; all zeros for the zero polynomial
        """
        if not self._terms:
            return (0,) * self._arity
        return tuple(max(e[i] for e in self._terms) for i in range(self._arity))

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[Exponent, int]]:
        return iter(self.items())

    # Arithmetic

    def _coerce(self, other: Scalar) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other._arity != self._arity:
                raise ArityMismatchError(
                    f"Arity mismatch: {self._arity} vs {other._arity}",
                    left=self._arity,
                    right=other._arity,
                )
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self._arity)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: Scalar) -> "LaurentPoly":
        q = self._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        result = dict(self._terms)
        for exponent, coefficient in q._terms.items():
            value = result.get(exponent, 0) + coefficient
            if value:
                result[exponent] = value
            else:
                result.pop(exponent, None)
        return LaurentPoly._raw(self._arity, result)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self._arity, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> "LaurentPoly":
        q = self._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "LaurentPoly":
        q = self._coerce(other)
        if q is NotImplemented:
            return NotImplemented
        result: Dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in q._terms.items():
                key = _add_exponents(e1, e2)
                value = result.get(key, 0) + c1 * c2
                if value:
                    result[key] = value
                else:
                    result.pop(key, None)
        return LaurentPoly._raw(self._arity, result)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "LaurentPoly":
        if power < 0:
            if not self.is_monomial() or abs(next(iter(self._terms.values()))) != 1:
                raise InexactDivisionError(f"{self} is not a unit; negative power undefined")
            (exponent, coefficient), = self._terms.items()
            return LaurentPoly.monomial(tuple(-e for e in exponent), coefficient) ** (-power)
        result = LaurentPoly.one(self._arity)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def shift(self, exponent: Sequence[int]) -> "LaurentPoly":
        """
        Multiply by the unit monomial ``x^exponent``.

        Args:
            exponent: Exponent vector of matching length

        Returns:
            The shifted polynomial
        """
        shift = tuple(exponent)
        if len(shift) != self._arity:
            raise ArityMismatchError(f"Shift {shift} does not match arity {self._arity}")
        return LaurentPoly._raw(
            self._arity, {_add_exponents(e, shift): c for e, c in self._terms.items()}
        )

    def divide_exact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """
        Divide exactly in the Laurent ring.

        Long division on the lexicographic leading term. Every exponent of an exact
        quotient lies in the box ``[min(p) - min(d), max(p) - max(d)]`` taken per
        variable, so a candidate term outside that box proves the division inexact.

        Args:
            divisor: Non-zero polynomial of the same arity

        Returns:
            The quotient ``q`` with ``q * divisor == self``

        Raises:
            InexactDivisionError: If ``divisor`` is zero or does not divide ``self``
        """
        d = self._coerce(divisor)
        if d.is_zero():
            raise InexactDivisionError("Division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero(self._arity)

        low = _sub_exponents(self.min_exponents(), d.min_exponents())
        high = _sub_exponents(self.max_exponents(), d.max_exponents())
        if any(lo > hi for lo, hi in zip(low, high)):
            raise InexactDivisionError(f"{d} does not divide {self}")

        lead_exponent = max(d._terms)
        lead_coefficient = d._terms[lead_exponent]
        remainder = dict(self._terms)
        quotient: Dict[Exponent, int] = {}
        while remainder:
            top = max(remainder)
            top_coefficient = remainder[top]
            exponent = _sub_exponents(top, lead_exponent)
            in_box = all(lo <= e <= hi for lo, e, hi in zip(low, exponent, high))
            if not in_box or top_coefficient % lead_coefficient:
                raise InexactDivisionError(f"{d} does not divide {self}")
            factor = top_coefficient // lead_coefficient
            quotient[exponent] = factor
            for de, dc in d._terms.items():
                key = _add_exponents(exponent, de)
                value = remainder.get(key, 0) - factor * dc
                if value:
                    remainder[key] = value
                else:
                    remainder.pop(key, None)
        return LaurentPoly._raw(self._arity, quotient)

    # Evaluation and specialization

    def specialize(self, n: Sequence[int]) -> "LaurentPoly":
        """
        Apply the ring homomorphism ``x_i -> t^{n_i}``.

        Args:
            n: Integer vector of length ``arity``

        Returns:
            Univariate polynomial

        Raises:
            ArityMismatchError: If ``len(n)`` differs from the arity
        """
        if len(n) != self._arity:
            raise ArityMismatchError(
                f"Specialization vector of length {len(n)} for arity {self._arity}"
            )
        result: Dict[Exponent, int] = {}
        for exponent, coefficient in self._terms.items():
            key = (sum(e * k for e, k in zip(exponent, n)),)
            value = result.get(key, 0) + coefficient
            if value:
                result[key] = value
            else:
                result.pop(key, None)
        return LaurentPoly._raw(1, result)

    def evaluate(self, point: Sequence[Union[int, Fraction]]) -> Union[int, Fraction]:
        """
        Evaluate exactly at a point with non-zero rational coordinates.

        Args:
            point: One value per variable

        Returns:
            The value, as an int when integral

        Raises:
            InexactDivisionError: If a negative power of zero is required
        """
        if len(point) != self._arity:
            raise ArityMismatchError(f"Point of length {len(point)} for arity {self._arity}")
        total = Fraction(0)
        for exponent, coefficient in self._terms.items():
            term = Fraction(coefficient)
            for value, e in zip(point, exponent):
                if e < 0 and value == 0:
                    raise InexactDivisionError("Negative power of zero in evaluation")
                term *= Fraction(value) ** e
            total += term
        return int(total) if total.denominator == 1 else total

    def value_at_one(self) -> int:
        """Get the sum of coefficients, i.e. the value at (1, ..., 1)."""
        return sum(self._terms.values())

    def derivative_at_one(self) -> int:
        """Get ``dp/dt`` at ``t = 1`` for a univariate polynomial."""
        self._require_univariate("derivative_at_one")
        return sum(e[0] * c for e, c in self._terms.items())

    def j_valuation(self) -> Union[int, float]:
        """
        Get the order of vanishing at ``t = 1``, i.e. the largest ``k`` with
        ``p`` in ``J^k`` where ``J = (t - 1)``.

        Returns:
            Non-negative integer, or ``math.inf`` for the zero polynomial
        """
        self._require_univariate("j_valuation")
        if self.is_zero():
            return INFINITE_VALUATION
        low = self.min_exponents()[0]
        high = self.max_exponents()[0]
        # Coefficients of t^{-low} * p, highest degree first; t^k is a unit.
        coefficients = [self._terms.get((d,), 0) for d in range(high, low - 1, -1)]
        valuation = 0
        while len(coefficients) > 1:
            # Synthetic division by (t - 1); the last accumulator is p(1).
            quotient = [coefficients[0]]
            for c in coefficients[1:]:
                quotient.append(c + quotient[-1])
            if quotient[-1] != 0:
                break
            coefficients = quotient[:-1]
            valuation += 1
        return valuation

    def _require_univariate(self, operation: str) -> None:
        if self._arity != 1:
            raise ArityMismatchError(f"{operation} needs arity 1, got {self._arity}")

    # Comparison and hashing

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self == LaurentPoly.constant(other, self._arity)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._arity == other._arity and self._terms == other._terms

    def __ne__(self, other: object) -> bool:
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._arity, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # Serialization and printing

    def to_json(self) -> List[List[object]]:
        """
        Serialize as a sorted list of ``[exponent-vector, coefficient-string]`` pairs.

        Returns:
            JSON-compatible list
        """
        return [[list(exponent), str(coefficient)] for exponent, coefficient in self.items()]

    @classmethod
    def from_json(
        cls, data: Iterable[Sequence[Any]], arity: Optional[int] = None
    ) -> "LaurentPoly":
        """
        Rebuild a polynomial from ``to_json`` output.

        Args:
            data: List of ``[exponent-vector, coefficient-string]`` pairs
            arity: Arity to use when ``data`` is empty (default: 1)

        Returns:
            The polynomial
        """
        pairs = [(tuple(int(e) for e in exponent), int(str(c))) for exponent, c in data]
        if arity is None:
            arity = len(pairs[0][0]) if pairs else 1
        return cls(arity, dict(pairs))

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        """
        Render in human form, highest lexicographic term first (e.g. ``t^2 - 1``).

        Args:
            names: Variable names (default: ``t`` for arity 1, ``x1 .. xk`` otherwise)

        Returns:
            Text form
        """
        if not self._terms:
            return "0"
        if names is None:
            names = ["t"] if self._arity == 1 else [f"x{i + 1}" for i in range(self._arity)]
        pieces: List[str] = []
        for exponent, coefficient in sorted(self._terms.items(), reverse=True):
            factors = []
            for name, e in zip(names, exponent):
                if e == 1:
                    factors.append(name)
                elif e != 0:
                    factors.append(f"{name}^{e}")
            magnitude = abs(coefficient)
            if not factors:
                body = str(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = f"{magnitude}*" + "*".join(factors)
            if not pieces:
                pieces.append(body if coefficient > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coefficient > 0 else f"- {body}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"LaurentPoly({self._arity}, {dict(self.items())!r})"


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Add two Laurent polynomials of equal arity."""
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Multiply two Laurent polynomials of equal arity."""
    return p * q


def specialize(p: LaurentPoly, n: Sequence[int]) -> LaurentPoly:
    """Apply ``x_i -> t^{n_i}`` (see ``LaurentPoly.specialize``)."""
    return p.specialize(n)


def j_valuation(p: LaurentPoly) -> Union[int, float]:
    """Order of vanishing at ``t = 1`` (see ``LaurentPoly.j_valuation``)."""
    return p.j_valuation()


def divide_exact(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Exact Laurent division (see ``LaurentPoly.divide_exact``)."""
    return p.divide_exact(d)


def t_power_minus_one(n: int) -> LaurentPoly:
    """Get ``t^n - 1``."""
    return LaurentPoly.t(n) - 1


def one_minus_t_power(n: int) -> LaurentPoly:
    """Get ``1 - t^n``."""
    return 1 - LaurentPoly.t(n)
