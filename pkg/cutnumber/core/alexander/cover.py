"""
Alexander matrices and ranks of infinite cyclic covers.

For a presentation with ``g`` generators and a primitive character ``phi`` with exponents
``n``, the Fox matrix specialized along ``x_i -> t^{n_i}`` presents H1 of the cover relative
to a lift of the base point. The rank of H1 of the cover over Z[t^{±1}] is therefore
``(g - 1) - rank`` of the specialized matrix.
"""

import random
from typing import List, Optional, Sequence, Tuple

from cutnumber.core.alexander.presentation import (
    PhiLike,
    PhiMap,
    Presentation,
    as_phi,
    free_group_presentation,
)
from cutnumber.core.certificate import (
    PhiRank,
    RankCertificate,
    check_records,
    conclusion,
    supported,
)
from cutnumber.core.checks import Checklist
from cutnumber.core.group import abelian_fox_gradient
from cutnumber.core.ring import LaurentPoly, PolyMatrix
from cutnumber.utils.errors import CheckFailedError, InvalidParametersError
from cutnumber.utils.logger import OperationTimer, get_logger

logger = get_logger("alexander.cover")


def alexander_matrix(presentation: Presentation) -> PolyMatrix:
    """
    Build the abelianized Fox matrix of a presentation.

    Args:
        presentation: Presentation with ``g`` generators and ``r`` relators

    Returns:
        ``r x g`` matrix of arity ``g`` whose entry ``(rho, i)`` is ``d relator_rho / d x_i``
    """
    g = presentation.generator_count
    rows = [abelian_fox_gradient(r) for r in presentation.relators]
    return PolyMatrix.from_rows(rows, arity=g, cols=g)


def specialized_matrix(presentation: Presentation, phi: PhiLike) -> PolyMatrix:
    """Get the Alexander matrix specialized along ``x_i -> t^{n_i}`` (``phi`` validated)."""
    phi = as_phi(phi).validate(presentation)
    return alexander_matrix(presentation).specialize(phi.n)


def h1_rank_of_cover(presentation: Presentation, phi: PhiLike) -> int:
    """
    Get the rank over Z[t^{±1}] of H1 of the infinite cyclic cover given by ``phi``.

    Args:
        presentation: The presentation
        phi: Primitive character consistent with every relator

    Returns:
        ``(g - 1) - rank`` of the specialized Alexander matrix

    Raises:
        NonPrimitivePhiError: If ``phi`` is not primitive
        InconsistentPhiError: If ``phi`` does not kill every relator
        CheckFailedError: If the rank exceeds ``g - 1``, which the Fox identity forbids
    """
    matrix = specialized_matrix(presentation, phi)
    g = presentation.generator_count
    rank = matrix.rank()
    if rank > g - 1:
        raise CheckFailedError(
            f"Specialized Alexander matrix has rank {rank} > {g - 1}",
            failed_checks=["rank_bound"],
        )
    result = (g - 1) - rank
    logger.debug(f"phi={list(as_phi(phi).n)}: specialized rank {rank}, cover rank {result}")
    return result


def fundamental_identity_check(presentation: Presentation, phi: PhiLike) -> bool:
    """
    Check that the specialized matrix kills the column ``(t^{n_i} - 1)_i``.

    Args:
        presentation: The presentation
        phi: Consistent character

    Returns:
        True when every entry of the product is zero
    """
    phi = as_phi(phi)
    matrix = specialized_matrix(presentation, phi)
    column = [LaurentPoly.t(v) - 1 for v in phi.n]
    return all(e.is_zero() for e in matrix.apply(column))


def free_cover_rank_check(n: int, phi: PhiLike) -> bool:
    """
    Check that the cover of a wedge of ``n`` circles has rank ``n - 1``.

    Args:
        n: Rank of the free group
        phi: Primitive character of length ``n``

    Returns:
        True when the computed rank is ``n - 1``
    """
    return h1_rank_of_cover(free_group_presentation(n), phi) == n - 1


def sample_primitive_phis(
    presentation: Presentation, count: int, rng: random.Random, bound: int = 3
) -> List[PhiMap]:
    """
    Draw distinct primitive characters consistent with the presentation.

    Vectors are drawn uniformly from ``[-bound, bound]^g`` and rejected unless primitive and
    consistent; ``phi`` and ``-phi`` count once. The sample is never exhaustive.

    Args:
        presentation: The presentation
        count: Number of characters wanted
        rng: Seeded random generator
        bound: Entry bound

    Returns:
        Up to ``count`` characters (fewer when rejection keeps failing)
    """
    if count < 1 or bound < 1:
        raise InvalidParametersError(f"Need count >= 1 and bound >= 1, got {count}, {bound}")
    g = presentation.generator_count
    seen = set()
    result: List[PhiMap] = []
    attempts = 0
    while len(result) < count and attempts < 200 * count:
        attempts += 1
        phi = PhiMap(tuple(rng.randint(-bound, bound) for _ in range(g)))
        if not phi.is_primitive() or phi.inconsistent_relators(presentation):
            continue
        key = max(phi.n, phi.negate().n)
        if key in seen:
            continue
        seen.add(key)
        result.append(phi)
    if len(result) < count:
        logger.warning(f"Only {len(result)} of {count} primitive characters found")
    return result


def cut_number_bounds(beta1: int, all_phi_rank_zero: bool) -> Tuple[int, int]:
    """
    Bounds on the cut number from the first Betti number.

    Args:
        beta1: First Betti number (``>= 1``)
        all_phi_rank_zero: Whether rank zero is certified for every primitive character

    Returns:
        ``(1, 1)`` when rank zero holds for every primitive character, else ``(1, beta1)``
    """
    if beta1 < 1:
        raise InvalidParametersError(f"Cut number bounds need beta1 >= 1, got {beta1}")
    return (1, 1) if all_phi_rank_zero else (1, beta1)


def corank_obstruction(
    presentation: Presentation,
    phis: Sequence[PhiLike],
    exhaustive: bool = False,
    seed: Optional[int] = None,
) -> RankCertificate:
    """
    Compute cover ranks for a sample of characters and record the conclusions they license.

    Rank zero for ``phi`` gives ``c(X, phi) = 1``. The F/F'' and ``c(X) = 1`` conclusions
    are recorded only when every sampled rank is zero and the sample is flagged exhaustive;
    a partial sample gives the per-character conclusions and the ``1 <= c(X) <= b`` range.

    Args:
        presentation: The presentation
        phis: Non-empty sample of characters
        exhaustive: Whether the sample covers every primitive character
        seed: Seed used to draw the sample, if any

    Returns:
        The certificate

    Raises:
        InvalidParametersError: If the sample is empty
    """
    if not phis:
        raise InvalidParametersError("Empty character sample")
    checks = Checklist()
    ranks: List[PhiRank] = []
    conclusions = []
    with OperationTimer(logger, f"corank obstruction over {len(phis)} characters"):
        for raw in phis:
            phi = as_phi(raw)
            rank = h1_rank_of_cover(presentation, phi)
            ranks.append(PhiRank(phi=list(phi.n), rank=rank))
            name = f"rank_zero[{phi}]"
            checks.record(name, rank == 0, f"rank {rank}", log_failure=False)
            checks.record(
                f"fundamental_identity[{phi}]", fundamental_identity_check(presentation, phi)
            )
            if rank == 0:
                conclusions.append(
                    conclusion(f"c(X, phi) = 1 for phi = ({phi})", "relative_corank_bound", [name])
                )

    all_zero = all(r.rank == 0 for r in ranks)
    beta1 = presentation.betti_number()
    sample_names = [f"rank_zero[{as_phi(p)}]" for p in phis]
    if all_zero and exhaustive:
        caveat = "rank 0 holds for every character in the flagged family only"
        conclusions.append(
            conclusion(
                "no epimorphism onto F/F'' with F free of rank 2",
                "metabelian_obstruction",
                sample_names,
                caveat,
            )
        )
        conclusions.append(conclusion("c(X) = 1", "cut_number_maximum", sample_names, caveat))
    bounds = cut_number_bounds(max(beta1, 1), all_zero and exhaustive)
    conclusions.append(
        conclusion(
            f"{bounds[0]} <= c(X) <= {bounds[1]}",
            "cut_number_bounds",
            sample_names if bounds == (1, 1) else [],
        )
    )

    return RankCertificate(
        presentation_digest=presentation.digest(),
        generators=list(presentation.names),
        relator_count=len(presentation.relators),
        beta1=beta1,
        phis=ranks,
        exhaustive=exhaustive,
        seed=seed,
        cut_number_bounds=list(bounds),
        checks=check_records(checks),
        conclusions=supported(conclusions, checks),
    )
