"""
End-to-end checks of the headline computations.
"""

import pytest

from cutnumber.cli import main
from cutnumber.core.alexander import (
    fundamental_identity_check,
    h1_rank_of_cover,
    load_presentation,
    sample_primitive_phis,
)
from cutnumber.core.family import (
    FamilyParams,
    f4_obstruction_certificate,
    model_group_presentation,
    nonsingularity_certificate,
    random_params,
    sweep,
)
from cutnumber.core.group import Alphabet, left_normed_commutator
from cutnumber.core.quotients import free_nilpotent_alexander, lcs_weight
from cutnumber.core.ring import integer_det
from cutnumber.utils.errors import CertificateRefusedError
from tests.helpers import make_rng

FOX_CHARACTERS = {
    2: [(1, 0), (1, 1), (2, 3), (0, 1)],
    3: [(1, 0, 0), (1, 1, 1), (2, 3, 0), (0, 0, 1)],
    4: [(1, 0, 0, 0), (1, 1, 1, 1), (2, 3, 0, 0), (0, 0, 0, 1)],
}


def test_four_generator_table_from_the_command_line(capsys):
    assert main(["-q", "family", "matrix", "--m", "4", "--N", "1"]) == 0
    rows = [line.split()[1:] for line in capsys.readouterr().out.splitlines()[1:]]
    assert rows == [
        ["t^{n1}-1", "0", "0", "1-t^{n3}", "1-t^{n4}", "0"],
        ["0", "t^{n1}-1", "0", "t^{n2}-1", "0", "1-t^{n4}"],
        ["0", "0", "t^{n1}-1", "0", "t^{n2}-1", "t^{n3}-1"],
        ["t^{n3}-1", "1-t^{n2}", "0", "t^{n1}-1", "0", "0"],
        ["t^{n4}-1", "0", "1-t^{n2}", "0", "t^{n1}-1", "0"],
        ["0", "t^{n4}-1", "1-t^{n3}", "0", "0", "t^{n1}-1"],
    ]


@pytest.mark.slow
def test_random_members_are_certified():
    certificates = sweep(200, seed=2024, max_m=7, bound=5, show_progress=False)
    assert len(certificates) == 200
    for certificate in certificates:
        statuses = {c.name: c.status for c in certificate.checks}
        for name in ("skew_slopes", "diagonal", "quadratic_form", "det_a_at_one_nonzero"):
            assert statuses[name] == "passed"
        assert int(certificate.det_a_at_one) == integer_det(certificate.a_at_one) != 0


def test_small_sweep_is_certified():
    for certificate in sweep(20, seed=7, max_m=5, show_progress=False):
        assert certificate.det_a_at_one != "0"


@pytest.mark.parametrize("m", sorted(FOX_CHARACTERS))
def test_model_presentation_covers_have_rank_zero(m):
    presentation = model_group_presentation(m)
    for phi in FOX_CHARACTERS[m]:
        assert h1_rank_of_cover(presentation, phi) == 0


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_fundamental_identity_on_model_presentations(m):
    presentation = model_group_presentation(m)
    rng = make_rng(97 + m)
    for phi in sample_primitive_phis(presentation, 5, rng):
        assert fundamental_identity_check(presentation, phi)


def test_free_nilpotent_machinery():
    assert free_nilpotent_alexander(2, 3, (1, 0)).as_tuple() == (3, 3, True)
    x, y = Alphabet.from_names(("x", "y")).generators()
    assert lcs_weight(left_normed_commutator([x, x, x, y]), 6).weight == 4


def test_f4_certificates_for_random_members():
    rng = make_rng(101)
    for _ in range(10):
        params = random_params(rng, 5)
        assert f4_obstruction_certificate(params).kind == "f4_obstruction"
    params = FamilyParams.create(4, [1, 2, 0, -1])
    singular = [[0] * 6 for _ in range(6)]
    with pytest.raises(CertificateRefusedError):
        f4_obstruction_certificate(params, a1_override=singular)


def test_trivial_cases():
    certificate = nonsingularity_certificate(FamilyParams.create(1, [1]))
    assert certificate.det_a_at_one == "1"
    torus = load_presentation("torus")
    for phi in sample_primitive_phis(torus, 20, make_rng(103)):
        assert h1_rank_of_cover(torus, phi) == 0
    assert h1_rank_of_cover(load_presentation("free2"), (1, 0)) == 1
