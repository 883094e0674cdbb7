"""
Structural checks on the relation matrix and the commutator identities behind it.
"""

from typing import List, Optional, Sequence

from cutnumber.core.checks import Checklist
from cutnumber.core.family.params import FamilyParams
from cutnumber.core.family.relations import symbolic_slope_matrix
from cutnumber.core.group import Alphabet, Word, commutator, conjugate
from cutnumber.core.quotients import equal_mod_second_derived, in_second_derived
from cutnumber.core.ring import JetAtOne
from cutnumber.utils.errors import (
    AlphabetMismatchError,
    GeneratorIndexError,
    NotInCommutatorSubgroupError,
)
from cutnumber.utils.logger import get_logger

logger = get_logger("family.identities")

JetMatrix = Sequence[Sequence[JetAtOne]]
IntMatrix = List[List[int]]


def verify_decomposition(jets: JetMatrix, params: FamilyParams) -> Checklist:
    """
    Check that the matrix has the form ``(t^{n_N} - 1) I + (t - 1) S`` modulo ``J^2``.

    Records ``shape``, ``diagonal`` (every diagonal jet is ``(0, n_N)``),
    ``off_diagonal_in_J`` (every off-diagonal value is zero) and ``skew_slopes``
    (off-diagonal slopes are antisymmetric).

    Args:
        jets: Square matrix of jets
        params: Family member the matrix belongs to

    Returns:
        The checks; failures are named, never raised
    """
    checks = Checklist()
    size = params.pair_count
    if len(jets) != size or any(len(row) != size for row in jets):
        checks.record("shape", False, f"expected a {size}x{size} matrix")
        return checks
    checks.record("shape", True)

    expected = JetAtOne(0, params.n_N)
    bad_diagonal = [r for r in range(size) if jets[r][r] != expected]
    checks.record(
        "diagonal",
        not bad_diagonal,
        f"rows {bad_diagonal} differ from {expected}" if bad_diagonal else None,
    )

    outside_j = [
        (r, c) for r in range(size) for c in range(size) if r != c and not jets[r][c].in_j()
    ]
    checks.record(
        "off_diagonal_in_J", not outside_j, f"entries {outside_j[:5]}" if outside_j else None
    )

    not_skew = [
        (r, c)
        for r in range(size)
        for c in range(r + 1, size)
        if jets[r][c].slope != -jets[c][r].slope
    ]
    checks.record("skew_slopes", not not_skew, f"entries {not_skew[:5]}" if not_skew else None)
    return checks


def s_at_one(jets: JetMatrix, params: FamilyParams) -> IntMatrix:
    """Get ``S(1)``: the off-diagonal slopes, with a zero diagonal."""
    size = params.pair_count
    return [[0 if r == c else jets[r][c].slope for c in range(size)] for r in range(size)]


def a_at_one(jets: JetMatrix, params: FamilyParams) -> IntMatrix:
    """
    Get ``A(1) = n_N I + S(1)``, the matrix of slopes at ``t = 1``.

    Args:
        jets: Relation matrix modulo ``J^2``
        params: Family member

    Returns:
        Integer matrix

    Raises:
        CheckFailedError: If the decomposition checks fail
    """
    verify_decomposition(jets, params).raise_on_failure("Relation matrix decomposition failed")
    size = params.pair_count
    return [[jets[r][c].slope for c in range(size)] for r in range(size)]


def quadratic_form_check(a1: Sequence[Sequence[int]], params: FamilyParams) -> bool:
    """
    Check ``A(1) + A(1)^T = 2 n_N I``.

    Then ``z^T A(1) z = n_N * sum z_i^2``, so ``A(1)`` is nonsingular because ``n_N != 0``.

    Args:
        a1: Square integer matrix
        params: Family member

    Returns:
        True when the identity holds exactly
    """
    size = len(a1)
    if any(len(row) != size for row in a1):
        return False
    target = 2 * params.n_N
    return all(
        a1[r][c] + a1[c][r] == (target if r == c else 0)
        for r in range(size)
        for c in range(r, size)
    )


def symbolic_quadratic_form_check(m: int, N: Optional[int] = None) -> bool:
    """
    Check the quadratic-form identity for every character at once.

    Slopes are linear forms in the unknown exponents; the identity holds for all ``n`` when
    the diagonal form is ``n_N`` and off-diagonal forms are antisymmetric. Every primitive
    character has some ``N`` with ``n_N != 0``, so checking every ``N`` covers them all.

    Args:
        m: Number of generators
        N: Distinguished index; every index when omitted

    Returns:
        True when the identity holds for each index checked
    """
    indices = range(1, m + 1) if N is None else [N]
    for index in indices:
        forms = symbolic_slope_matrix(m, index)
        e_n = tuple(1 if i == index - 1 else 0 for i in range(m))
        size = len(forms)
        for r in range(size):
            if forms[r][r] != e_n:
                logger.debug(f"Symbolic diagonal fails at row {r} for N={index}")
                return False
            for c in range(r + 1, size):
                if forms[r][c] != tuple(-v for v in forms[c][r]):
                    logger.debug(f"Symbolic skew fails at ({r}, {c}) for N={index}")
                    return False
    return True


def _require_commutator(word: Word, label: str) -> None:
    if any(word.abelianization()):
        raise NotInCommutatorSubgroupError(
            f"{label} = {word} is not in the commutator subgroup",
            abelianization=list(word.abelianization()),
        )


def _standard_alphabet(m: int, words: Sequence[Optional[Word]]) -> Alphabet:
    alphabet = next((w.alphabet for w in words if w is not None), Alphabet.standard(m))
    if len(alphabet) != m:
        raise AlphabetMismatchError(f"Words over {len(alphabet)} generators, expected {m}")
    return alphabet


def mu_word(alphabet: Alphabet, i: int, j: int, v: Optional[Word] = None) -> Word:
    """Get ``[x_i, v x_j v^-1]`` for 1-based ``i, j`` (``v`` trivial by default)."""
    x = alphabet.generators()
    target = x[j - 1] if v is None else conjugate(x[j - 1], v)
    return commutator(x[i - 1], target)


def verify_muij2_reduction(
    v: Word, i: int, j: int, m: int, omega1: Optional[Word] = None
) -> bool:
    """
    Check ``[x_i, v x_j v^-1]^omega1 = [x_i, [v, x_j]] [x_i, x_j]`` modulo F''.

    Args:
        v: Word in the commutator subgroup of F(m)
        i, j: Generator indices with ``1 <= i < j <= m``
        m: Rank of the free group
        omega1: Conjugating word in the commutator subgroup (trivial by default)

    Returns:
        True when both sides agree in F/F''

    Raises:
        NotInCommutatorSubgroupError: If ``v`` or ``omega1`` has non-zero abelianization
        GeneratorIndexError: If the indices are out of range
    """
    if not 1 <= i < j <= m:
        raise GeneratorIndexError(f"Need 1 <= i < j <= m, got ({i}, {j}) with m={m}")
    alphabet = _standard_alphabet(m, [v, omega1])
    _require_commutator(v, "v")
    if omega1 is None:
        omega1 = alphabet.identity()
    _require_commutator(omega1, "omega1")

    x = alphabet.generators()
    left = conjugate(mu_word(alphabet, i, j, v), omega1)
    right = commutator(x[i - 1], commutator(v, x[j - 1])) * commutator(x[i - 1], x[j - 1])
    return equal_mod_second_derived(left, right)


def verify_freerel(
    i: int,
    j: int,
    k: int,
    m: int,
    v_jk: Optional[Word] = None,
    v_ik: Optional[Word] = None,
    v_ij: Optional[Word] = None,
) -> bool:
    """
    Check the Jacobi relation rewritten in terms of ``mu_ab = [x_a, v_ab x_b v_ab^-1]``.

    Both the Jacobi product
    ``[x_i, [x_j, x_k]] [x_j, [x_i, x_k]^-1] [x_k, [x_i, x_j]]`` and its rearrangement
    ``[x_i, mu_jk] [x_j, mu_ik^-1] [x_k, mu_ij]
    [x_i, [[v_jk, x_k], x_j]] [x_j, [x_i, [v_ik, x_k]]] [x_k, [[v_ij, x_j], x_i]]``
    must be trivial modulo F''.

    Args:
        i, j, k: Generator indices with ``1 <= i < j < k <= m``
        m: Rank of the free group
        v_jk, v_ik, v_ij: Words in the commutator subgroup (trivial by default)

    Returns:
        True when both products lie in F''

    Raises:
        GeneratorIndexError: If the indices are out of range
        NotInCommutatorSubgroupError: If some ``v`` word has non-zero abelianization
    """
    if not 1 <= i < j < k <= m:
        raise GeneratorIndexError(f"Need 1 <= i < j < k <= m, got ({i}, {j}, {k}) with m={m}")
    alphabet = _standard_alphabet(m, [v_jk, v_ik, v_ij])
    one = alphabet.identity()
    vjk, vik, vij = (one if v is None else v for v in (v_jk, v_ik, v_ij))
    for label, v in (("v_jk", vjk), ("v_ik", vik), ("v_ij", vij)):
        _require_commutator(v, label)

    x = alphabet.generators()
    xi, xj, xk = x[i - 1], x[j - 1], x[k - 1]
    jacobi = (
        commutator(xi, commutator(xj, xk))
        * commutator(xj, commutator(xi, xk).inverse())
        * commutator(xk, commutator(xi, xj))
    )
    rearranged = (
        commutator(xi, mu_word(alphabet, j, k, vjk))
        * commutator(xj, mu_word(alphabet, i, k, vik).inverse())
        * commutator(xk, mu_word(alphabet, i, j, vij))
        * commutator(xi, commutator(commutator(vjk, xk), xj))
        * commutator(xj, commutator(xi, commutator(vik, xk)))
        * commutator(xk, commutator(commutator(vij, xj), xi))
    )
    result = in_second_derived(jacobi) and in_second_derived(rearranged)
    logger.debug(f"Rewritten Jacobi relation ({i}, {j}, {k}) in F({m}): {result}")
    return result

