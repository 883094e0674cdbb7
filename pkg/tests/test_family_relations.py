import math
import random
from functools import reduce

import pytest

from cutnumber.core.family import (
    FamilyParams,
    case_table,
    format_case_table,
    model_group_presentation,
    model_relation_matrix,
    pair_permutation,
    relabel,
    relation_matrix,
    relation_matrix_mod_j2,
    symbolic_slope_matrix,
)
from cutnumber.core.ring import integer_det, one_minus_t_power, t_power_minus_one
from tests.helpers import make_rng


def _slopes(params):
    return [[jet.slope for jet in row] for row in relation_matrix_mod_j2(params)]


def _random_member(rng: random.Random, m: int) -> FamilyParams:
    while True:
        n = [rng.randint(-5, 5) for _ in range(m)]
        if reduce(math.gcd, (abs(v) for v in n), 0) == 1:
            return FamilyParams.create(m, n, rng.choice([i + 1 for i, v in enumerate(n) if v]))


def test_four_generator_table():
    params = FamilyParams.create(4, [2, 3, 5, 7], 1)
    n1, n2, n3, n4 = params.n
    p, q = t_power_minus_one, one_minus_t_power
    zero = 0 * p(1)
    expected = [
        [p(n1), zero, zero, q(n3), q(n4), zero],
        [zero, p(n1), zero, p(n2), zero, q(n4)],
        [zero, zero, p(n1), zero, p(n2), p(n3)],
        [p(n3), q(n2), zero, p(n1), zero, zero],
        [p(n4), zero, q(n2), zero, p(n1), zero],
        [zero, p(n4), q(n3), zero, zero, p(n1)],
    ]
    assert relation_matrix(params).to_rows() == expected


def test_three_generator_slopes():
    params = FamilyParams.create(3, [2, 3, 5], 1)
    assert _slopes(params) == [[2, 0, -5], [0, 2, 3], [5, -3, 2]]
    assert integer_det(_slopes(params)) == 2 * (4 + 9 + 25)


@pytest.mark.parametrize("n", [(1, 1, 1), (1, -4, 2), (3, 0, 7), (-2, 5, 0)])
def test_three_generator_determinant_formula(n):
    params = FamilyParams.create(3, n, 1)
    n1, n2, n3 = n
    assert integer_det(_slopes(params)) == n1 * (n1 ** 2 + n2 ** 2 + n3 ** 2)


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_model_matrix_agrees_with_case_table(m):
    rng = make_rng(73 + m)
    for _ in range(10):
        params = _random_member(rng, m)
        assert model_relation_matrix(params).jets() == relation_matrix_mod_j2(params)


def test_case_table_entries_are_slope_forms():
    forms = symbolic_slope_matrix(4, 2)
    entries = case_table(4, 2)
    assert all(forms[e.row][e.col] == e.slope_form(4) for e in entries)
    assert all(forms[r][r] == (0, 1, 0, 0) for r in range(6))


def test_format_case_table():
    lines = format_case_table(4, 1).splitlines()
    assert len(lines) == 7
    assert lines[0].split() == ["12", "13", "14", "23", "24", "34"]
    assert lines[1].split() == ["12", "t^{n1}-1", "0", "0", "1-t^{n3}", "1-t^{n4}", "0"]
    assert lines[4].split() == ["23", "t^{n3}-1", "1-t^{n2}", "0", "t^{n1}-1", "0", "0"]
    assert format_case_table(1, 1) == "[0x0 matrix]"


def test_single_generator_member():
    params = FamilyParams.create(1, [1])
    assert relation_matrix(params).shape == (0, 0)
    assert relation_matrix(params).det() == 1
    presentation = model_group_presentation(1)
    assert len(presentation.relators) == 1
    assert presentation.relators[0].is_identity()


def test_model_presentation_is_commutator_relators():
    presentation = model_group_presentation(4)
    assert len(presentation.relators) == 4
    assert all(not any(r.abelianization()) for r in presentation.relators)
    assert presentation.betti_number() == 4


@pytest.mark.parametrize("perm", [[1, 2, 3], [2, 1, 3], [3, 1, 2], [2, 3, 1], [3, 2, 1]])
def test_relabelling_three_generators_keeps_determinant(perm):
    params = FamilyParams.create(3, [2, -3, 4], 1)
    moved = relabel(params, perm)
    assert integer_det(_slopes(moved)) == integer_det(_slopes(params))


def test_relabelling_is_a_signed_pair_permutation():
    params = FamilyParams.create(4, [2, 3, 5, 7], 1)
    perm = [1, 2, 4, 3]
    moved = relabel(params, perm)
    before, after = _slopes(params), _slopes(moved)
    image = pair_permutation(perm, 4)
    for r, (pr, sr) in enumerate(image):
        for c, (pc, sc) in enumerate(image):
            assert after[pr][pc] == sr * sc * before[r][c]
    assert integer_det(after) == integer_det(before)
