"""
Certificates for members of the cut-number-one family.

A certificate runs every named check first. It is issued only when all of them pass;
otherwise a ``CheckFailedError`` naming the failures is raised and nothing partial escapes.
"""

import random
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from tqdm import tqdm

from cutnumber.core.alexander import (
    cut_number_bounds,
    free_abelian_presentation,
    h1_rank_of_cover,
    specialized_matrix,
)
from cutnumber.core.certificate import (
    Conclusion,
    FamilyCertificate,
    FamilyParamsRecord,
    check_records,
    conclusion,
    supported,
)
from cutnumber.core.checks import Checklist
from cutnumber.core.family.identities import (
    IntMatrix,
    a_at_one,
    quadratic_form_check,
    s_at_one,
    symbolic_quadratic_form_check,
    verify_decomposition,
)
from cutnumber.core.family.params import FamilyParams, random_params
from cutnumber.core.family.relations import (
    model_group_presentation,
    model_relation_matrix,
    relation_matrix_mod_j2,
)
from cutnumber.core.group import Alphabet, left_normed_commutator
from cutnumber.core.quotients import F4_GUARD_DEGREE, free_nilpotent_alexander, lcs_weight
from cutnumber.core.ring import JetAtOne, LaurentPoly, integer_det, integer_rank
from cutnumber.utils.errors import (
    CertificateRefusedError,
    InvalidParametersError,
    UnsupportedParametersError,
)
from cutnumber.utils.logger import OperationTimer, get_logger

logger = get_logger("family.certify")

# Exact symbolic determinant of the model matrix: hard limit and the limit used by certificates
MODEL_DETERMINANT_MAX_PAIRS = 10
CERTIFICATE_DETERMINANT_MAX_PAIRS = 6

# Fox-calculus recomputation of the cover rank from the model presentation
FOX_PIPELINE_MAX_M = 5

NONSINGULAR_CHECKS = ["diagonal", "off_diagonal_in_J", "skew_slopes", "quadratic_form"]


@dataclass(frozen=True)
class WCoverContext:
    """H1 of the cover of the m-torus complement model ``W``: rank, Z-rank and t-action."""

    rank: int
    additive_rank: int
    trivial_action: bool

    def to_json(self) -> Dict[str, Any]:
        return {
            "rank": self.rank,
            "additive_rank": self.additive_rank,
            "trivial_action": self.trivial_action,
        }


def w_cover_context(params: FamilyParams) -> WCoverContext:
    """
    Compute H1 of the infinite cyclic cover of ``W`` with fundamental group Z^m.

    The rank comes from the Fox pipeline on the free abelian presentation. The Z-rank is read
    off the matrix at ``t = 1``, and the action is trivial when every entry lies in ``J``.

    Args:
        params: Family member; ``n`` is the character

    Returns:
        Rank over Z[t^{±1}] (expected 0), Z-rank (expected ``m - 1``) and action flag
    """
    presentation = free_abelian_presentation(params.m)
    matrix = specialized_matrix(presentation, params.n)
    rank = h1_rank_of_cover(presentation, params.n)
    additive = (params.m - 1) - integer_rank(matrix.values_at_one(), params.m)
    trivial = all(e.value_at_one() == 0 for e in matrix.entries)
    return WCoverContext(rank, additive, trivial)


@dataclass(frozen=True)
class ModelDeterminant:
    """Exact determinant of the model matrix and ``det M / (t - 1)^C`` evaluated at 1."""

    det_m: LaurentPoly
    quotient_at_one: int

    def to_json(self) -> Dict[str, Any]:
        return {"det_m": self.det_m.to_json(), "quotient_at_one": str(self.quotient_at_one)}


def model_determinant_check(params: FamilyParams) -> ModelDeterminant:
    """
    Compute ``det M`` exactly and divide by ``(t - 1)^C``, ``C = C(m, 2)``.

    Args:
        params: Family member with ``C <= MODEL_DETERMINANT_MAX_PAIRS``

    Returns:
        The determinant and the value of the quotient at ``t = 1``, which equals
        ``det A(1)``

    Raises:
        UnsupportedParametersError: If the matrix is too large
        InexactDivisionError: If ``(t - 1)^C`` does not divide the determinant
    """
    size = params.pair_count
    if size > MODEL_DETERMINANT_MAX_PAIRS:
        raise UnsupportedParametersError(
            f"Model determinant limited to {MODEL_DETERMINANT_MAX_PAIRS} pairs, got {size}",
            pairs=size,
        )
    with OperationTimer(logger, f"model determinant for {params}"):
        det_m = model_relation_matrix(params).det()
    quotient = det_m.divide_exact((LaurentPoly.t() - 1) ** size)
    return ModelDeterminant(det_m, quotient.value_at_one())


def _params_record(params: FamilyParams) -> FamilyParamsRecord:
    return FamilyParamsRecord(m=params.m, n=list(params.n), N=params.N)


def _jets_json(jets: Sequence[Sequence[JetAtOne]]) -> List[List[List[int]]]:
    return [[j.to_json() for j in row] for row in jets]


def _slope_matrices(
    jets: List[List[JetAtOne]],
    params: FamilyParams,
    checks: Checklist,
    a1_override: Optional[Sequence[Sequence[int]]],
) -> Tuple[IntMatrix, IntMatrix]:
    for check in verify_decomposition(jets, params):
        checks.add(check)
    s1 = s_at_one(jets, params)
    if a1_override is not None:
        logger.warning(f"Using a supplied A(1) for {params}")
        return s1, [list(row) for row in a1_override]
    if not checks.passed("shape", "diagonal", "off_diagonal_in_J", "skew_slopes"):
        return s1, [[j.slope for j in row] for row in jets]
    return s1, a_at_one(jets, params)


def nonsingularity_certificate(
    params: FamilyParams,
    a1_override: Optional[Sequence[Sequence[int]]] = None,
    seed: Optional[int] = None,
) -> FamilyCertificate:
    """
    Certify that the relation matrix of a family member is nonsingular over Q(t).

    Runs the mod-``J^2`` decomposition checks, the quadratic-form identity (for ``n`` and
    symbolically for every character), the exact determinant of ``A(1)``, agreement with the
    model matrix, the symbolic model determinant for small ``m``, the cover of ``W`` and,
    for small ``m``, the Fox-calculus rank of the model presentation.

    Args:
        params: Family member
        a1_override: Replacement for the computed ``A(1)`` (fault injection)
        seed: Seed recorded when the parameters were sampled

    Returns:
        The certificate

    Raises:
        CheckFailedError: Naming every failed check
    """
    with OperationTimer(logger, f"nonsingularity certificate for {params}"):
        checks = Checklist()
        context: Dict[str, Any] = {"beta1": params.m}
        jets = relation_matrix_mod_j2(params)
        s1, a1 = _slope_matrices(jets, params, checks, a1_override)

        checks.record("quadratic_form", quadratic_form_check(a1, params))
        checks.record(
            "symbolic_quadratic_form",
            symbolic_quadratic_form_check(params.m),
            f"every N in 1..{params.m}",
        )
        det_a1 = integer_det(a1)
        checks.record("det_a_at_one_nonzero", det_a1 != 0, f"det A(1) = {det_a1}")

        model_jets = model_relation_matrix(params).jets()
        checks.record("model_agreement", model_jets == jets)

        if params.pair_count <= CERTIFICATE_DETERMINANT_MAX_PAIRS:
            model = model_determinant_check(params)
            context["model_determinant"] = model.to_json()
            checks.record(
                "model_determinant",
                not model.det_m.is_zero() and model.quotient_at_one == det_a1,
                f"det M / (t-1)^C at 1 = {model.quotient_at_one}",
            )
        else:
            checks.skip("model_determinant", f"{params.pair_count} pairs")

        w_cover = w_cover_context(params)
        context["w_cover"] = w_cover.to_json()
        checks.record("w_cover_rank_zero", w_cover.rank == 0, f"rank {w_cover.rank}")
        checks.record(
            "w_cover_trivial_action",
            w_cover.trivial_action and w_cover.additive_rank == params.m - 1,
            f"Z-rank {w_cover.additive_rank}",
        )

        if params.m <= FOX_PIPELINE_MAX_M:
            rank = h1_rank_of_cover(model_group_presentation(params.m), params.n)
            checks.record("fox_pipeline_rank_zero", rank == 0, f"rank {rank}")
        else:
            checks.skip("fox_pipeline_rank_zero", f"m = {params.m}")

        checks.raise_on_failure(f"Nonsingularity certificate for {params} refused")

    nonsingular = NONSINGULAR_CHECKS + ["det_a_at_one_nonzero"]
    rank_zero = nonsingular + ["w_cover_rank_zero"]
    all_phi = rank_zero + ["symbolic_quadratic_form"]
    bounds = cut_number_bounds(params.m, True)
    phi_text = ",".join(str(v) for v in params.n)
    conclusions: List[Conclusion] = [
        conclusion("M is nonsingular over Q(t)", "quadratic_form", nonsingular),
        conclusion(
            "every mu_ij is Z[t^{+-1}]-torsion in H1(X_phi)", "nonsingular_torsion", nonsingular
        ),
        conclusion("rank H1(X_phi) = 0 over Z[t^{+-1}]", "pair_sequence", rank_zero),
        conclusion(
            f"c(X, phi) = 1 for phi = ({phi_text})", "relative_corank_bound", rank_zero
        ),
        conclusion("c(X, phi) = 1 for every primitive phi", "relative_corank_bound", all_phi),
        conclusion("c(X) = 1", "cut_number_maximum", all_phi),
        conclusion(
            f"{bounds[0]} <= c(X) <= {bounds[1]} with beta1(X) = {params.m}",
            "cut_number_bounds",
            all_phi,
        ),
        conclusion(
            "no epimorphism from pi1(X) onto F/F'' with F free of rank 2",
            "metabelian_obstruction",
            all_phi,
        ),
    ]
    context["cut_number_bounds"] = list(bounds)
    logger.info(f"Issued nonsingularity certificate for {params} (det A(1) = {det_a1})")
    return FamilyCertificate(
        kind="nonsingularity",
        params=_params_record(params),
        matrix_jets=_jets_json(jets),
        s_at_one=s1,
        a_at_one=a1,
        det_a_at_one=str(det_a1),
        checks=check_records(checks),
        conclusions=supported(conclusions, checks),
        context=context,
        seed=seed,
    )


def f4_obstruction_certificate(
    params: FamilyParams,
    a1_override: Optional[Sequence[Sequence[int]]] = None,
    seed: Optional[int] = None,
) -> FamilyCertificate:
    """
    Certify that no epimorphism onto F/F_4 exists, F free of rank 2.

    Needs ``det A(1) != 0`` (for ``n`` and, through the symbolic identity, for every
    character), ``N/N' = Z[t^{±1}]/J^3`` for F(2)/F_4 over ``phi = (1, 0)``, the weight of
    ``[x, [x, [x, y]]]`` and the trivial action on H1 of the cover of ``W``. For ``m = 1``
    the certificate is issued from the Betti number alone.

    Args:
        params: Family member
        a1_override: Replacement for the computed ``A(1)`` (fault injection)
        seed: Seed recorded when the parameters were sampled

    Returns:
        The certificate

    Raises:
        CertificateRefusedError: Naming every failed prerequisite
    """
    checks = Checklist()
    if params.m == 1:
        checks.record("beta1_below_two", True, "beta1 = 1")
        statement = "no epimorphism from pi1(X) onto F/F_4 with F free of rank 2"
        conclusions = [conclusion(statement, "betti_obstruction", ["beta1_below_two"])]
        logger.info(f"Issued F/F_4 certificate for {params} from the Betti number")
        return FamilyCertificate(
            kind="f4_obstruction",
            params=_params_record(params),
            matrix_jets=[],
            s_at_one=[],
            a_at_one=[],
            det_a_at_one="1",
            checks=check_records(checks),
            conclusions=conclusions,
            context={"beta1": 1},
            seed=seed,
        )

    with OperationTimer(logger, f"F/F_4 certificate for {params}"):
        context: Dict[str, Any] = {"beta1": params.m}
        jets = relation_matrix_mod_j2(params)
        s1, a1 = _slope_matrices(jets, params, checks, a1_override)
        det_a1 = integer_det(a1)
        checks.record("det_a_at_one_nonzero", det_a1 != 0, f"det A(1) = {det_a1}")
        checks.record("symbolic_quadratic_form", symbolic_quadratic_form_check(params.m))

        summary = free_nilpotent_alexander(2, 3)
        context["free_nilpotent_module"] = summary.to_json()
        checks.record(
            "free_nilpotent_module",
            summary.matches_truncated_ring(3),
            f"(rank, annihilator, cyclic) = {summary.as_tuple()}",
        )

        alphabet = Alphabet.from_names(("x", "y"))
        x, y = alphabet.generators()
        weight = lcs_weight(left_normed_commutator([x, x, x, y]), F4_GUARD_DEGREE)
        checks.record("lcs_weight", weight.weight == 4, f"weight {weight}")

        w_cover = w_cover_context(params)
        context["w_cover"] = w_cover.to_json()
        checks.record("w_cover_trivial_action", w_cover.trivial_action)

        checks.raise_on_failure(
            f"F/F_4 certificate for {params} refused", error=CertificateRefusedError
        )

    requires = [
        "det_a_at_one_nonzero",
        "symbolic_quadratic_form",
        "free_nilpotent_module",
        "lcs_weight",
        "w_cover_trivial_action",
    ]
    conclusions = [
        conclusion(
            "H1(W_psi) is (t-1)-torsion", "trivial_cover_action", ["w_cover_trivial_action"]
        ),
        conclusion(
            "no epimorphism from pi1(X) onto F/F_4 with F free of rank 2",
            "nilpotent_obstruction",
            requires,
        ),
        conclusion(
            "c(Y) = 1 for every closed orientable Y with pi1(Y)/pi1(Y)_4 isomorphic to "
            "pi1(X)/pi1(X)_4",
            "lcs_invariance",
            requires,
        ),
    ]
    logger.info(f"Issued F/F_4 certificate for {params}")
    return FamilyCertificate(
        kind="f4_obstruction",
        params=_params_record(params),
        matrix_jets=_jets_json(jets),
        s_at_one=s1,
        a_at_one=a1,
        det_a_at_one=str(det_a1),
        checks=check_records(checks),
        conclusions=supported(conclusions, checks),
        context=context,
        seed=seed,
    )


def _sweep_item(item: Tuple[int, FamilyParams, int]) -> Tuple[int, FamilyCertificate]:
    index, params, seed = item
    return index, nonsingularity_certificate(params, seed=seed)


def sweep(
    count: int,
    seed: int,
    max_m: int,
    bound: int = 5,
    workers: int = 1,
    show_progress: bool = True,
) -> List[FamilyCertificate]:
    """
    Certify a seeded batch of random family members.

    Parameters are drawn up front from ``random.Random(seed)``, so the batch and its order
    do not depend on the worker count.

    Args:
        count: Number of members
        seed: Seed of the parameter generator
        max_m: Largest ``m`` drawn
        bound: Bound on the entries of ``n``
        workers: Number of worker processes (1 runs in process)
        show_progress: Display a progress bar on stderr

    Returns:
        Certificates in draw order

    Raises:
        CheckFailedError: If any member fails
    """
    if count < 1 or workers < 1:
        raise InvalidParametersError(f"Need count >= 1 and workers >= 1, got {count}, {workers}")
    rng = random.Random(seed)
    items = [(i, random_params(rng, max_m, bound), seed) for i in range(count)]
    results: List[Optional[FamilyCertificate]] = [None] * count

    with OperationTimer(logger, f"sweep of {count} family members"):
        if workers == 1:
            for item in tqdm(items, desc="certify", disable=not show_progress):
                index, certificate = _sweep_item(item)
                results[index] = certificate
        else:
            with ProcessPoolExecutor(max_workers=workers) as executor:
                futures = [executor.submit(_sweep_item, item) for item in items]
                for future in tqdm(
                    as_completed(futures), total=count, desc="certify", disable=not show_progress
                ):
                    index, certificate = future.result()
                    results[index] = certificate

    return [c for c in results if c is not None]
