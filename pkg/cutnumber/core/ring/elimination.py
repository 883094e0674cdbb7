"""
Fraction-free (Bareiss) elimination over an integral domain.

The routines are generic: the caller supplies the ring's zero, one, exact quotient and a
size measure used to pick small pivots. Every intermediate entry is a minor of the input,
so each division is exact.
"""

from typing import Callable, List, Sequence, TypeVar

from cutnumber.utils.errors import InexactDivisionError, ShapeError

T = TypeVar("T")

ExactQuotient = Callable[[T, T], T]


def _copy_rows(rows: Sequence[Sequence[T]]) -> List[List[T]]:
    return [list(row) for row in rows]


def _pick_pivot(
    a: List[List[T]],
    column: int,
    start: int,
    is_zero: Callable[[T], bool],
    size: Callable[[T], int],
) -> int:
    best = -1
    for i in range(start, len(a)):
        if is_zero(a[i][column]):
            continue
        if best < 0 or size(a[i][column]) < size(a[best][column]):
            best = i
    return best


def bareiss_det(
    rows: Sequence[Sequence[T]],
    zero: T,
    one: T,
    exquo: ExactQuotient,
    is_zero: Callable[[T], bool],
    size: Callable[[T], int],
) -> T:
    """
    Compute the determinant of a square matrix by Bareiss elimination.

    Args:
        rows: Square matrix as a list of rows
        zero: Additive identity of the ring
        one: Multiplicative identity of the ring
        exquo: Exact quotient ``(a, b) -> a / b``
        is_zero: Zero test
        size: Pivot size measure (smaller is preferred)

    Returns:
        The determinant

    Raises:
        ShapeError: If the matrix is not square
    """
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ShapeError("Determinant of a non-square matrix")
    if n == 0:
        return one

    a = _copy_rows(rows)
    negate = False
    previous = one
    for k in range(n - 1):
        p = _pick_pivot(a, k, k, is_zero, size)
        if p < 0:
            return zero
        if p != k:
            a[k], a[p] = a[p], a[k]
            negate = not negate
        pivot = a[k][k]
        for i in range(k + 1, n):
            lead = a[i][k]
            for j in range(k + 1, n):
                cross = pivot * a[i][j] - lead * a[k][j]  # type: ignore[operator]
                a[i][j] = exquo(cross, previous)
            a[i][k] = zero
        previous = pivot
    det = a[n - 1][n - 1]
    return -det if negate else det  # type: ignore[operator]


def bareiss_rank(
    rows: Sequence[Sequence[T]],
    cols: int,
    zero: T,
    one: T,
    exquo: ExactQuotient,
    is_zero: Callable[[T], bool],
    size: Callable[[T], int],
) -> int:
    """
    Compute the rank of a rectangular matrix over the fraction field of the ring.

    Columns without a pivot are skipped; the surviving entries stay minors of the input,
    so the divisions remain exact.

    Args:
        rows: Matrix as a list of rows
        cols: Number of columns (needed when there are no rows)
        zero: Additive identity of the ring
        one: Multiplicative identity of the ring
        exquo: Exact quotient ``(a, b) -> a / b``
        is_zero: Zero test
        size: Pivot size measure (smaller is preferred)

    Returns:
        The rank
    """
    if any(len(row) != cols for row in rows):
        raise ShapeError("Ragged matrix rows")
    a = _copy_rows(rows)
    rank = 0
    previous = one
    for c in range(cols):
        if rank == len(a):
            break
        p = _pick_pivot(a, c, rank, is_zero, size)
        if p < 0:
            continue
        a[rank], a[p] = a[p], a[rank]
        pivot = a[rank][c]
        for i in range(rank + 1, len(a)):
            lead = a[i][c]
            for j in range(c + 1, cols):
                cross = pivot * a[i][j] - lead * a[rank][j]  # type: ignore[operator]
                a[i][j] = exquo(cross, previous)
            a[i][c] = zero
        previous = pivot
        rank += 1
    return rank


def _int_exquo(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise InexactDivisionError(f"{b} does not divide {a}")
    return q


def integer_det(rows: Sequence[Sequence[int]]) -> int:
    """
    Exact determinant of an integer matrix.

    Args:
        rows: Square integer matrix

    Returns:
        The determinant (1 for the empty matrix)
    """
    return bareiss_det(
        [[int(x) for x in row] for row in rows], 0, 1, _int_exquo, lambda x: x == 0, abs
    )


def integer_rank(rows: Sequence[Sequence[int]], cols: int = -1) -> int:
    """
    Rank of an integer matrix over the rationals.

    Args:
        rows: Integer matrix
        cols: Number of columns; inferred from the first row when negative

    Returns:
        The rank
    """
    if cols < 0:
        cols = len(rows[0]) if rows else 0
    return bareiss_rank(
        [[int(x) for x in row] for row in rows], cols, 0, 1, _int_exquo, lambda x: x == 0, abs
    )
