"""
Relation matrices of the family over Z[t^{±1}].

Rows and columns are indexed by the pairs ``i < j`` in dictionary order; entry ``(ij, lk)``
is the coefficient of ``mu_lk`` in the relation ``R_ij``. Two independent routes build the
matrix:

- the case table, which lists every entry modulo ``J^2`` as ``±(t^{n_k} - 1)``;
- the model route, which expands the longitudes and the Jacobi relations in the module
  where ``x_i`` acts as ``t^{n_i}`` and every conjugating word is trivial.

The model presentation of the group is also built here so that the Fox-calculus pipeline
can recompute the rank of H1 of the cover from scratch.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from cutnumber.core.alexander import Presentation
from cutnumber.core.family.params import FamilyParams, pair_count, pair_position, pairs
from cutnumber.core.group import Alphabet, Word, commutator
from cutnumber.core.ring import JetAtOne, LaurentPoly, PolyMatrix, jet_at_one
from cutnumber.utils.logger import get_logger

logger = get_logger("family.relations")

LinearForm = Tuple[int, ...]


@dataclass(frozen=True)
class CaseEntry:
    """Entry ``sign * (t^{n_k} - 1)`` at ``(row, col)``; ``k`` is 1-based."""

    row: int
    col: int
    sign: int
    k: int

    def polynomial(self, n: Tuple[int, ...]) -> LaurentPoly:
        return (LaurentPoly.t(n[self.k - 1]) - 1) * self.sign

    def slope_form(self, m: int) -> LinearForm:
        """Slope at ``t = 1`` as a linear form in ``n_1 .. n_m``."""
        return tuple(self.sign if i == self.k - 1 else 0 for i in range(m))

    def symbol(self) -> str:
        return f"t^{{n{self.k}}}-1" if self.sign > 0 else f"1-t^{{n{self.k}}}"


@lru_cache(maxsize=128)
def case_table(m: int, N: int) -> Tuple[CaseEntry, ...]:
    """
    List the non-zero entries of the relation matrix modulo ``J^2``.

    The table depends on ``m`` and ``N`` only; the character enters through ``n_k``.

    Args:
        m: Number of generators
        N: Distinguished index (1-based)

    Returns:
        Entries in row-major order
    """
    entries: List[CaseEntry] = []

    def put(row: int, i: int, j: int, sign: int, k: int) -> None:
        entries.append(CaseEntry(row, pair_position(i, j, m), sign, k))

    for pair in pairs(m):
        a, b = pair.i, pair.j
        row = pair.position(m)
        if b == N:
            for lower in range(1, a):
                put(row, lower, a, -1, lower)
            for k in range(a + 1, m + 1):
                put(row, a, k, 1, k)
        elif a == N:
            for lower in range(1, b):
                put(row, lower, b, 1, lower)
            for k in range(b + 1, m + 1):
                put(row, b, k, -1, k)
        elif N < a:
            put(row, N, a, 1, b)
            put(row, N, b, -1, a)
            put(row, a, b, 1, N)
        elif a < N < b:
            put(row, a, N, -1, b)
            put(row, a, b, 1, N)
            put(row, N, b, -1, a)
        else:
            put(row, a, b, 1, N)
            put(row, a, N, -1, b)
            put(row, b, N, 1, a)
    entries.sort(key=lambda e: (e.row, e.col))
    return tuple(entries)


def relation_matrix(params: FamilyParams) -> PolyMatrix:
    """
    Get the case-table matrix, the representative of the relation matrix with ``E = 0``.

    Args:
        params: Family member

    Returns:
        ``C(m, 2)``-square matrix of arity 1
    """
    size = params.pair_count
    rows = [[LaurentPoly.zero() for _ in range(size)] for _ in range(size)]
    for entry in case_table(params.m, params.N):
        rows[entry.row][entry.col] = entry.polynomial(params.n)
    return PolyMatrix.from_rows(rows, arity=1, cols=size)


def relation_matrix_mod_j2(params: FamilyParams) -> List[List[JetAtOne]]:
    """
    Get the relation matrix modulo ``J^2`` as jets at ``t = 1``.

    Args:
        params: Family member

    Returns:
        ``C(m, 2)``-square matrix of jets; unlisted entries are zero
    """
    size = params.pair_count
    jets = [[JetAtOne.zero() for _ in range(size)] for _ in range(size)]
    for entry in case_table(params.m, params.N):
        jets[entry.row][entry.col] = jet_at_one(entry.polynomial(params.n))
    return jets


def symbolic_slope_matrix(m: int, N: int) -> List[List[LinearForm]]:
    """
    Get the slopes at ``t = 1`` as linear forms in the unknown exponents ``n_1 .. n_m``.

    Args:
        m: Number of generators
        N: Distinguished index

    Returns:
        ``C(m, 2)``-square matrix of coefficient vectors
    """
    size = pair_count(m)
    zero = (0,) * m
    forms = [[zero for _ in range(size)] for _ in range(size)]
    for entry in case_table(m, N):
        forms[entry.row][entry.col] = entry.slope_form(m)
    return forms


def format_case_table(m: int, N: int) -> str:
    """Render the symbolic table, entries written ``t^{n_k}-1`` or ``1-t^{n_k}``."""
    labels = [f"{p.i}{p.j}" if m < 10 else str(p) for p in pairs(m)]
    size = len(labels)
    if not size:
        return "[0x0 matrix]"
    cells = [["0"] * size for _ in range(size)]
    for entry in case_table(m, N):
        cells[entry.row][entry.col] = entry.symbol()
    width = max(len(c) for row in cells for c in row + labels)
    lines = [" " * (width + 2) + "  ".join(label.rjust(width) for label in labels)]
    for label, row in zip(labels, cells):
        lines.append(label.rjust(width) + "  " + "  ".join(c.rjust(width) for c in row))
    return "\n".join(lines)


def _add(row: Dict[int, LaurentPoly], position: int, value: LaurentPoly) -> None:
    row[position] = row.get(position, LaurentPoly.zero()) + value


def longitude_coefficients(params: FamilyParams, i: int) -> Dict[int, LaurentPoly]:
    """
    Expand the longitude ``l_i`` in the module generated by the ``mu``.

    ``[x_j^-1, mu]`` contributes ``(t^{-n_j} - 1) mu`` and ``[mu, x_k^-1]`` contributes
    ``(1 - t^{-n_k}) mu``.

    Args:
        params: Family member
        i: Generator index (1-based)

    Returns:
        Coefficients keyed by pair position
    """
    m, n = params.m, params.n
    row: Dict[int, LaurentPoly] = {}
    for j in range(1, i):
        _add(row, pair_position(j, i, m), LaurentPoly.t(-n[j - 1]) - 1)
    for k in range(i + 1, m + 1):
        _add(row, pair_position(i, k, m), 1 - LaurentPoly.t(-n[k - 1]))
    return row


def jacobi_coefficients(params: FamilyParams, a: int, b: int, c: int) -> Dict[int, LaurentPoly]:
    """
    Expand ``[x_a, mu_bc] [x_b, mu_ac^-1] [x_c, mu_ab]`` for ``a < b < c``.

    ``[x, mu]`` contributes ``(t^{n_x} - 1) mu``.

    Args:
        params: Family member
        a, b, c: Increasing generator indices (1-based)

    Returns:
        Coefficients keyed by pair position
    """
    m, n = params.m, params.n
    row: Dict[int, LaurentPoly] = {}
    _add(row, pair_position(b, c, m), LaurentPoly.t(n[a - 1]) - 1)
    _add(row, pair_position(a, c, m), 1 - LaurentPoly.t(n[b - 1]))
    _add(row, pair_position(a, b, m), LaurentPoly.t(n[c - 1]) - 1)
    return row


def _negated(row: Dict[int, LaurentPoly]) -> Dict[int, LaurentPoly]:
    return {position: -value for position, value in row.items()}


def model_relation_matrix(params: FamilyParams) -> PolyMatrix:
    """
    Build the full relation matrix with every conjugating word trivial.

    Rows: ``R_iN = l_i``, ``R_Nj = l_j^-1``, and the Jacobi relations ``J(N, i, j)``,
    ``J(i, N, j)^-1`` and ``J(i, j, N)`` for pairs avoiding ``N``.

    Args:
        params: Family member

    Returns:
        ``C(m, 2)``-square matrix of arity 1
    """
    m, N = params.m, params.N
    size = params.pair_count
    rows: List[List[LaurentPoly]] = []
    for pair in pairs(m):
        a, b = pair.i, pair.j
        if b == N:
            coefficients = longitude_coefficients(params, a)
        elif a == N:
            coefficients = _negated(longitude_coefficients(params, b))
        elif N < a:
            coefficients = jacobi_coefficients(params, N, a, b)
        elif a < N < b:
            coefficients = _negated(jacobi_coefficients(params, a, N, b))
        else:
            coefficients = jacobi_coefficients(params, a, b, N)
        rows.append([coefficients.get(col, LaurentPoly.zero()) for col in range(size)])
    logger.debug(f"Model relation matrix for {params}: {size}x{size}")
    return PolyMatrix.from_rows(rows, arity=1, cols=size)


def model_group_presentation(m: int) -> Presentation:
    """
    Get the model presentation with one longitude relator per generator.

    ``l_i = prod_{j<i} [x_j^-1, [x_j, x_i]] * prod_{k>i} [[x_i, x_k], x_k^-1]``.

    Args:
        m: Number of generators (at least 1)

    Returns:
        Presentation on ``x1 .. xm`` with ``m`` relators (``l_1`` is empty when ``m = 1``)
    """
    alphabet = Alphabet.standard(m)
    x = alphabet.generators()
    relators: List[Word] = []
    for i in range(m):
        relator = alphabet.identity()
        for j in range(i):
            relator = relator * commutator(x[j].inverse(), commutator(x[j], x[i]))
        for k in range(i + 1, m):
            relator = relator * commutator(commutator(x[i], x[k]), x[k].inverse())
        relators.append(relator)
    return Presentation(alphabet, tuple(relators))
