"""
Dense matrices over Laurent polynomial rings.
"""

from typing import Callable, Iterator, List, Optional, Sequence, Tuple, Union

from cutnumber.core.ring.elimination import bareiss_det, bareiss_rank
from cutnumber.core.ring.jet import JetAtOne
from cutnumber.core.ring.laurent import Exponent, LaurentPoly
from cutnumber.utils.errors import ArityMismatchError, ShapeError
from cutnumber.utils.logger import get_logger

logger = get_logger("ring.matrix")

Entry = Union[int, LaurentPoly]


class PolyMatrix:
    """
    Immutable ``rows x cols`` matrix of Laurent polynomials sharing one arity.

    Entries are kept as a dense row-major tuple.
    """

    __slots__ = ("_rows", "_cols", "_arity", "_entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[Entry], arity: int = 1) -> None:
        """
        Initialize a matrix.

        Args:
            rows: Number of rows
            cols: Number of columns
            entries: Row-major entries; integers are promoted to constants
            arity: Arity of every entry

        Raises:
            ShapeError: If the entry count does not match the shape
            ArityMismatchError: If an entry has a different arity
        """
        if rows < 0 or cols < 0:
            raise ShapeError(f"Negative matrix shape {rows}x{cols}")
        if len(entries) != rows * cols:
            raise ShapeError(
                f"{len(entries)} entries for a {rows}x{cols} matrix", rows=rows, cols=cols
            )
        promoted: List[LaurentPoly] = []
        for entry in entries:
            if isinstance(entry, int):
                entry = LaurentPoly.constant(entry, arity)
            if entry.arity != arity:
                raise ArityMismatchError(
                    f"Entry of arity {entry.arity} in a matrix of arity {arity}"
                )
            promoted.append(entry)
        self._rows = rows
        self._cols = cols
        self._arity = arity
        self._entries: Tuple[LaurentPoly, ...] = tuple(promoted)

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[Entry]], arity: int = 1, cols: Optional[int] = None
    ) -> "PolyMatrix":
        """
        Build a matrix from a list of rows.

        Args:
            rows: Rows of entries
            arity: Arity of the entries
            cols: Column count, needed only when ``rows`` is empty

        Returns:
            The matrix
        """
        width = len(rows[0]) if rows else (cols or 0)
        if any(len(row) != width for row in rows):
            raise ShapeError("Ragged matrix rows")
        return cls(len(rows), width, [e for row in rows for e in row], arity)

    @classmethod
    def zero(cls, rows: int, cols: int, arity: int = 1) -> "PolyMatrix":
        return cls(rows, cols, [0] * (rows * cols), arity)

    @classmethod
    def identity(cls, size: int, arity: int = 1) -> "PolyMatrix":
        return cls(
            size, size, [1 if i == j else 0 for i in range(size) for j in range(size)], arity
        )

    @property
    def rows(self) -> int:
        return self._rows

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def arity(self) -> int:
        return self._arity

    @property
    def shape(self) -> Tuple[int, int]:
        return self._rows, self._cols

    @property
    def entries(self) -> Tuple[LaurentPoly, ...]:
        return self._entries

    def is_square(self) -> bool:
        return self._rows == self._cols

    def __getitem__(self, index: Tuple[int, int]) -> LaurentPoly:
        i, j = index
        if not (0 <= i < self._rows and 0 <= j < self._cols):
            raise IndexError(f"Entry ({i}, {j}) outside a {self._rows}x{self._cols} matrix")
        return self._entries[i * self._cols + j]

    def row(self, i: int) -> List[LaurentPoly]:
        return list(self._entries[i * self._cols : (i + 1) * self._cols])

    def to_rows(self) -> List[List[LaurentPoly]]:
        return [self.row(i) for i in range(self._rows)]

    def __iter__(self) -> Iterator[List[LaurentPoly]]:
        return iter(self.to_rows())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (
            self.shape == other.shape
            and self._arity == other._arity
            and self._entries == other._entries
        )

    def __hash__(self) -> int:
        return hash((self._rows, self._cols, self._arity, self._entries))

    # Structural operations

    def map(
        self, func: Callable[[LaurentPoly], LaurentPoly], arity: Optional[int] = None
    ) -> "PolyMatrix":
        """
        Apply a function entry-wise.

        Args:
            func: Entry transformation
            arity: Arity of the results (default: unchanged)

        Returns:
            New matrix
        """
        return PolyMatrix(
            self._rows,
            self._cols,
            [func(e) for e in self._entries],
            self._arity if arity is None else arity,
        )

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        """Get the matrix formed by the given row and column indices, in that order."""
        return PolyMatrix(
            len(rows), len(cols), [self[i, j] for i in rows for j in cols], self._arity
        )

    def scale_rows(self, factors: Sequence[LaurentPoly]) -> "PolyMatrix":
        """Multiply row ``i`` by ``factors[i]``."""
        if len(factors) != self._rows:
            raise ShapeError(f"{len(factors)} row factors for {self._rows} rows")
        return PolyMatrix.from_rows(
            [[factors[i] * e for e in self.row(i)] for i in range(self._rows)],
            self._arity,
            self._cols,
        )

    def apply(self, vector: Sequence[LaurentPoly]) -> List[LaurentPoly]:
        """Multiply by a column vector."""
        if len(vector) != self._cols:
            raise ShapeError(f"Vector of length {len(vector)} for {self._cols} columns")
        result = []
        for i in range(self._rows):
            acc = LaurentPoly.zero(self._arity)
            for e, v in zip(self.row(i), vector):
                acc = acc + e * v
            result.append(acc)
        return result

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self._entries)

    # Ring-level operations

    def specialize(self, n: Sequence[int]) -> "PolyMatrix":
        """Apply ``x_i -> t^{n_i}`` to every entry."""
        return self.map(lambda e: e.specialize(n), arity=1)

    def jets(self) -> List[List[JetAtOne]]:
        """Get the entry-wise jets at ``t = 1`` of a univariate matrix."""
        return [[JetAtOne.of(e) for e in self.row(i)] for i in range(self._rows)]

    def values_at_one(self) -> List[List[int]]:
        """Evaluate every entry at ``(1, ..., 1)``."""
        return [[e.value_at_one() for e in self.row(i)] for i in range(self._rows)]

    def cleared_rows(self) -> Tuple[List[List[LaurentPoly]], Exponent]:
        """
        Multiply each row by a monomial unit so that all exponents become non-negative.

        Returns:
            The shifted rows and the total exponent shift applied
        """
        total = [0] * self._arity
        units: List[LaurentPoly] = []
        for i in range(self._rows):
            nonzero = [e for e in self.row(i) if not e.is_zero()]
            if not nonzero:
                units.append(LaurentPoly.one(self._arity))
                continue
            low = [min(e.min_exponents()[v] for e in nonzero) for v in range(self._arity)]
            shift = [-x for x in low]
            units.append(LaurentPoly.monomial(shift))
            total = [t + s for t, s in zip(total, shift)]
        return self.scale_rows(units).to_rows(), tuple(total)

    def det(self) -> LaurentPoly:
        """
        Exact determinant by fraction-free elimination.

        Rows are first made polynomial by monomial units; the determinant is corrected by the
        inverse of their product.

        Returns:
            The determinant (1 for the empty matrix)

        Raises:
            ShapeError: If the matrix is not square
        """
        if not self.is_square():
            raise ShapeError(f"Determinant of a non-square {self._rows}x{self._cols} matrix")
        rows, shift = self.cleared_rows()
        det = bareiss_det(
            rows,
            LaurentPoly.zero(self._arity),
            LaurentPoly.one(self._arity),
            lambda a, b: a.divide_exact(b),
            lambda e: e.is_zero(),
            len,
        )
        logger.debug(f"det of {self._rows}x{self._cols} matrix has {len(det)} terms")
        return det.shift(tuple(-s for s in shift))

    def rank(self) -> int:
        """
        Rank over the field of fractions of the Laurent ring.

        Returns:
            The rank
        """
        rows, _ = self.cleared_rows()
        return bareiss_rank(
            rows,
            self._cols,
            LaurentPoly.zero(self._arity),
            LaurentPoly.one(self._arity),
            lambda a, b: a.divide_exact(b),
            lambda e: e.is_zero(),
            len,
        )

    # Serialization and printing

    def to_json(self) -> List[List[List[List[object]]]]:
        return [[e.to_json() for e in self.row(i)] for i in range(self._rows)]

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        """Render as aligned rows of human-form entries."""
        if self._rows == 0 or self._cols == 0:
            return f"[{self._rows}x{self._cols} matrix]"
        cells = [[e.format(names) for e in self.row(i)] for i in range(self._rows)]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"PolyMatrix({self._rows}, {self._cols}, arity={self._arity})"


def det(matrix: PolyMatrix) -> LaurentPoly:
    """Exact determinant (see ``PolyMatrix.det``)."""
    return matrix.det()


def rank_over_fraction_field(matrix: PolyMatrix) -> int:
    """Rank over the fraction field (see ``PolyMatrix.rank``)."""
    return matrix.rank()
