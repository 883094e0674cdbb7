import pytest

from cutnumber.core.certificate import conclusion, supported, to_json_data
from cutnumber.core.checks import Checklist
from cutnumber.core.family import (
    FamilyParams,
    f4_obstruction_certificate,
    model_determinant_check,
    nonsingularity_certificate,
    sweep,
    w_cover_context,
)
from cutnumber.core.ring import integer_det
from cutnumber.utils.errors import (
    CertificateRefusedError,
    CheckFailedError,
    UnsupportedParametersError,
)


def _statuses(certificate):
    return {c.name: c.status for c in certificate.checks}


def test_four_generator_certificate():
    params = FamilyParams.create(4, [1, 1, 1, 1])
    certificate = nonsingularity_certificate(params)
    assert certificate.kind == "nonsingularity"
    assert certificate.params.n == [1, 1, 1, 1]
    assert certificate.det_a_at_one == str(integer_det(certificate.a_at_one))
    assert certificate.det_a_at_one != "0"
    statuses = _statuses(certificate)
    assert set(statuses.values()) == {"passed"}
    assert "model_determinant" in statuses and "fox_pipeline_rank_zero" in statuses
    statements = [c.statement for c in certificate.conclusions]
    assert "c(X) = 1" in statements
    assert certificate.context["w_cover"] == {
        "rank": 0,
        "additive_rank": 3,
        "trivial_action": True,
    }


def test_large_certificate_skips_expensive_checks():
    params = FamilyParams.create(6, [1, 0, 2, -1, 3, 1])
    statuses = _statuses(nonsingularity_certificate(params))
    assert statuses["model_determinant"] == "skipped"
    assert statuses["fox_pipeline_rank_zero"] == "skipped"
    assert statuses["det_a_at_one_nonzero"] == "passed"


def test_single_generator_certificate():
    certificate = nonsingularity_certificate(FamilyParams.create(1, [1]))
    assert certificate.det_a_at_one == "1"
    assert certificate.matrix_jets == []
    assert certificate.a_at_one == []


def test_singular_override_is_refused():
    params = FamilyParams.create(3, [1, 2, 3])
    zeros = [[0] * 3 for _ in range(3)]
    with pytest.raises(CheckFailedError) as info:
        nonsingularity_certificate(params, a1_override=zeros)
    assert "det_a_at_one_nonzero" in info.value.failed_checks
    assert "quadratic_form" in info.value.failed_checks
    with pytest.raises(CertificateRefusedError) as info:
        f4_obstruction_certificate(params, a1_override=zeros)
    assert info.value.failed_checks == ["det_a_at_one_nonzero"]


def test_f4_certificate():
    certificate = f4_obstruction_certificate(FamilyParams.create(3, [2, -1, 1], 2))
    assert certificate.kind == "f4_obstruction"
    assert certificate.context["free_nilpotent_module"]
    statements = [c.statement for c in certificate.conclusions]
    assert "no epimorphism from pi1(X) onto F/F_4 with F free of rank 2" in statements


def test_f4_certificate_from_betti_number():
    certificate = f4_obstruction_certificate(FamilyParams.create(1, [-1]))
    assert [c.name for c in certificate.checks] == ["beta1_below_two"]
    assert certificate.conclusions[0].citation


@pytest.mark.parametrize("n", [(1, 1, 1), (2, -1, 3), (1, 0, 0)])
def test_model_determinant_matches_slope_determinant(n):
    params = FamilyParams.create(3, n)
    model = model_determinant_check(params)
    a1 = nonsingularity_certificate(params).a_at_one
    assert model.quotient_at_one == integer_det(a1)
    assert not model.det_m.is_zero()


def test_model_determinant_size_limit():
    with pytest.raises(UnsupportedParametersError):
        model_determinant_check(FamilyParams.create(6, [1] * 6))


@pytest.mark.parametrize("m", [1, 2, 3, 5])
def test_w_cover(m):
    context = w_cover_context(FamilyParams.create(m, [1] + [2] * (m - 1)))
    assert (context.rank, context.additive_rank, context.trivial_action) == (0, m - 1, True)


def test_sweep_is_deterministic():
    first = sweep(6, seed=89, max_m=4, show_progress=False)
    second = sweep(6, seed=89, max_m=4, show_progress=False)
    assert len(first) == 6
    assert [to_json_data(c) for c in first] == [to_json_data(c) for c in second]
    assert all(c.seed == 89 for c in first)


def test_sweep_in_worker_processes_matches_in_process_run():
    serial = sweep(4, seed=91, max_m=3, show_progress=False)
    parallel = sweep(4, seed=91, max_m=3, workers=2, show_progress=False)
    assert [to_json_data(c) for c in parallel] == [to_json_data(c) for c in serial]


def test_skipped_checks_do_not_support_conclusions():
    checks = Checklist()
    checks.skip("model_determinant", "too large")
    checks.record("det_a_at_one_nonzero", True)
    statements = [
        conclusion("needs the model", "quadratic_form", ["model_determinant"]),
        conclusion("needs the determinant", "quadratic_form", ["det_a_at_one_nonzero"]),
    ]
    assert [c.statement for c in supported(statements, checks)] == ["needs the determinant"]
    assert not checks.all_passed()
