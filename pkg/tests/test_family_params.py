import pytest

from cutnumber.core.family import (
    FamilyParams,
    PairIndex,
    pair_count,
    pair_permutation,
    pair_position,
    pairs,
    random_params,
    relabel,
)
from cutnumber.utils.errors import InvalidParametersError, NonPrimitivePhiError
from tests.helpers import make_rng


def test_pairs_in_dictionary_order():
    assert [str(p) for p in pairs(4)] == ["(1,2)", "(1,3)", "(1,4)", "(2,3)", "(2,4)", "(3,4)"]
    assert pairs(1) == []
    assert pair_count(7) == 21


@pytest.mark.parametrize("m", [2, 3, 5, 8])
def test_pair_position_enumerates_pairs(m):
    assert [pair_position(p.i, p.j, m) for p in pairs(m)] == list(range(pair_count(m)))


def test_pair_position_rejects_bad_pairs():
    with pytest.raises(InvalidParametersError):
        pair_position(2, 2, 4)
    with pytest.raises(InvalidParametersError):
        pair_position(1, 5, 4)
    with pytest.raises(InvalidParametersError):
        PairIndex(3, 1)


def test_pair_membership():
    assert 2 in PairIndex(2, 5)
    assert 3 not in PairIndex(2, 5)


def test_params_default_index():
    params = FamilyParams.create(4, [0, 0, 3, 1])
    assert params.N == 3
    assert params.n_N == 3
    assert params.pair_count == 6
    assert str(params) == "m=4 n=0,0,3,1 N=3"


@pytest.mark.parametrize(
    "m, n, N, error",
    [
        (0, [], 1, InvalidParametersError),
        (2, [1], 1, InvalidParametersError),
        (2, [2, 2], 1, NonPrimitivePhiError),
        (2, [0, 0], 1, NonPrimitivePhiError),
        (3, [1, 0, 1], 2, InvalidParametersError),
        (3, [1, 0, 1], 4, InvalidParametersError),
    ],
)
def test_params_validation(m, n, N, error):
    with pytest.raises(error):
        FamilyParams.create(m, n, N)


def test_pair_permutation_signs():
    assert pair_permutation([2, 1, 3], 3) == [(0, -1), (2, 1), (1, 1)]
    assert pair_permutation([1, 2, 3, 4], 4) == [(i, 1) for i in range(6)]
    with pytest.raises(InvalidParametersError):
        pair_permutation([1, 1, 2], 3)


def test_relabel_moves_the_distinguished_index():
    params = FamilyParams.create(3, [2, 3, 5], 1)
    moved = relabel(params, [3, 1, 2])
    assert moved.n == (3, 5, 2)
    assert moved.N == 3
    assert moved.n_N == params.n_N


def test_random_params_are_valid_and_seeded():
    rng = make_rng(71)
    drawn = [random_params(rng, 6, 4) for _ in range(50)]
    assert all(1 <= p.m <= 6 for p in drawn)
    assert all(max(abs(v) for v in p.n) <= 4 and p.n_N != 0 for p in drawn)
    assert random_params(make_rng(67), 7) == random_params(make_rng(67), 7)
    with pytest.raises(InvalidParametersError):
        random_params(rng, 0)
