import math

import pytest
import sympy

from cutnumber.core.ring import (
    JetAtOne,
    LaurentPoly,
    PolyMatrix,
    integer_det,
    integer_rank,
    jet_at_one,
    one_minus_t_power,
    t_power_minus_one,
)
from cutnumber.utils.errors import ArityMismatchError, InexactDivisionError, ShapeError
from tests.helpers import (
    make_rng,
    random_laurent,
    random_poly_matrix,
    sympy_det,
    sympy_equal,
    to_sympy,
)

t = LaurentPoly.t()


def test_zero_coefficients_are_dropped():
    p = LaurentPoly(2, {(1, 0): 3, (0, -1): 0, (2, 2): -1})
    assert len(p) == 2
    assert p == LaurentPoly(2, {(2, 2): -1, (1, 0): 3})
    assert LaurentPoly(1, {(3,): 0}).is_zero()


def test_exponent_length_must_match_arity():
    with pytest.raises(ArityMismatchError):
        LaurentPoly(2, {(1,): 1})


def test_integer_coercion():
    assert t - 1 == LaurentPoly.univariate({1: 1, 0: -1})
    assert 1 - t == -(t - 1)
    assert 2 * t == t + t
    assert LaurentPoly.constant(5) == 5


def test_arity_mismatch_on_add():
    x = LaurentPoly.variable(0, 2)
    with pytest.raises(ArityMismatchError):
        x + t


def test_powers():
    assert (t - 1) ** 2 == t ** 2 - 2 * t + 1
    assert t ** -3 == LaurentPoly.t(-3)
    assert (t + 1) ** 0 == 1
    with pytest.raises(InexactDivisionError):
        (t + 1) ** -1


def test_divide_exact():
    assert (t ** 6 - 1).divide_exact(t - 1) == sum((t ** k for k in range(6)), 0 * t)
    quotient = (LaurentPoly.t(-2) - 1).divide_exact(t - 1)
    assert quotient == -(LaurentPoly.t(-1) + LaurentPoly.t(-2))
    with pytest.raises(InexactDivisionError):
        (t ** 2 + 1).divide_exact(t - 1)
    with pytest.raises(InexactDivisionError):
        t.divide_exact(LaurentPoly.zero())


def test_divide_exact_multivariate():
    x = LaurentPoly.variable(0, 2)
    y = LaurentPoly.variable(1, 2)
    product = (x * y - 1) * (x - y ** -1)
    assert product.divide_exact(x * y - 1) == x - y ** -1


def test_divide_exact_recovers_random_factors():
    rng = make_rng(11)
    for _ in range(40):
        p = random_laurent(rng, 2, 3, 2)
        q = random_laurent(rng, 2, 3, 2)
        if q.is_zero():
            continue
        assert (p * q).divide_exact(q) == p


def test_specialize():
    p = LaurentPoly(2, {(1, -1): 2, (0, 1): -1})
    assert p.specialize((2, 3)) == 2 * LaurentPoly.t(-1) - LaurentPoly.t(3)
    with pytest.raises(ArityMismatchError):
        p.specialize((1,))


def test_evaluate():
    p = LaurentPoly.univariate({-1: 2, 2: 1})
    assert p.evaluate((1,)) == 3
    assert p.evaluate((2,)) == 5
    with pytest.raises(InexactDivisionError):
        p.evaluate((0,))


def test_j_valuation():
    assert (t - 1).j_valuation() == 1
    assert ((t - 1) ** 3 * (t + 2)).j_valuation() == 3
    assert (t ** 4 + t).j_valuation() == 0
    assert LaurentPoly.zero().j_valuation() == math.inf
    assert (LaurentPoly.t(-3) - 1).j_valuation() == 1


def test_jets():
    assert jet_at_one(t_power_minus_one(5)) == JetAtOne(0, 5)
    assert jet_at_one(one_minus_t_power(-2)) == JetAtOne(0, 2)
    a = jet_at_one(t ** 2 + 3)
    b = jet_at_one(2 * t - 1)
    assert a * b == jet_at_one((t ** 2 + 3) * (2 * t - 1))
    assert JetAtOne(0, 4).in_j() and not JetAtOne(0, 4).in_j2()
    assert JetAtOne(0, 0).in_j2()


def test_json_form_is_exact():
    p = LaurentPoly(2, {(1, -2): 12345678901234567890, (0, 0): -1})
    data = p.to_json()
    assert data == [[[0, 0], "-1"], [[1, -2], "12345678901234567890"]]
    assert LaurentPoly.from_json(data) == p
    assert LaurentPoly.from_json([], arity=3) == LaurentPoly.zero(3)


def test_format():
    assert (t ** 2 - 1).format() == "t^2 - 1"
    assert LaurentPoly.zero().format() == "0"
    assert (3 * LaurentPoly.t(-1)).format() == "3*t^-1"


def test_product_matches_sympy():
    rng = make_rng(3)
    for _ in range(30):
        p = random_laurent(rng)
        q = random_laurent(rng)
        assert sympy_equal(to_sympy(p * q), sympy.expand(to_sympy(p) * to_sympy(q)))
        assert sympy_equal(to_sympy(p - q), to_sympy(p) - to_sympy(q))


def test_small_determinant():
    m = PolyMatrix.from_rows([[t, 1], [1, t]])
    assert m.det() == t ** 2 - 1
    assert PolyMatrix.identity(3).det() == 1
    assert PolyMatrix.from_rows([], cols=0).det() == 1


def test_determinant_with_negative_exponents():
    m = PolyMatrix.from_rows([[LaurentPoly.t(-1), 1], [0, LaurentPoly.t(-2) - 1]])
    assert m.det() == LaurentPoly.t(-3) - LaurentPoly.t(-1)


def test_determinant_matches_sympy():
    rng = make_rng(5)
    for size in (1, 2, 3, 4):
        for _ in range(4):
            m = random_poly_matrix(rng, size)
            assert sympy_equal(to_sympy(m.det()), sympy_det(m))


def test_determinant_requires_square():
    with pytest.raises(ShapeError):
        PolyMatrix.zero(2, 3).det()


def test_rank_of_dependent_rows():
    r1 = [t, t ** 2 - 1, LaurentPoly.t(-1)]
    r2 = [1 + t, 0 * t, 3 * t]
    r3 = [a * (t + 1) + b for a, b in zip(r1, r2)]
    m = PolyMatrix.from_rows([r1, r2, r3])
    assert m.rank() == 2
    assert m.det() == 0
    assert m.submatrix([0, 1], [0, 1]).rank() == 2


def test_rank_agrees_with_determinant():
    rng = make_rng(9)
    for _ in range(8):
        m = random_poly_matrix(rng, 3)
        assert (m.rank() == 3) == (not m.det().is_zero())
    assert PolyMatrix.zero(2, 4).rank() == 0


def test_integer_elimination():
    assert integer_det([[2, 1], [1, 3]]) == 5
    assert integer_det([]) == 1
    assert integer_det([[0, 1], [1, 0]]) == -1
    assert integer_rank([[1, 2], [2, 4]]) == 1
    assert integer_rank([], 3) == 0
    rng = make_rng(13)
    for _ in range(10):
        rows = [[rng.randint(-5, 5) for _ in range(4)] for _ in range(4)]
        assert integer_det(rows) == sympy.Matrix(rows).det()
        assert integer_rank(rows) == sympy.Matrix(rows).rank()


def test_matrix_shape_errors():
    with pytest.raises(ShapeError):
        PolyMatrix(2, 2, [t, t, t])
    with pytest.raises(ShapeError):
        PolyMatrix.from_rows([[t], [t, t]])


def test_specialize_is_a_ring_map():
    rng = make_rng(107)
    for _ in range(30):
        p = random_laurent(rng, 2, 3, 2)
        q = random_laurent(rng, 2, 3, 2)
        n = (rng.randint(-3, 3), rng.randint(-3, 3))
        assert (p * q).specialize(n) == p.specialize(n) * q.specialize(n)
        assert (p + q).specialize(n) == p.specialize(n) + q.specialize(n)


def test_j_valuation_is_additive():
    rng = make_rng(109)
    for _ in range(30):
        p = random_laurent(rng) * (t - 1) ** rng.randint(0, 3)
        q = random_laurent(rng) * (t - 1) ** rng.randint(0, 3)
        if p.is_zero() or q.is_zero():
            continue
        assert (p * q).j_valuation() == p.j_valuation() + q.j_valuation()


def test_jet_product_rule():
    rng = make_rng(113)
    for _ in range(30):
        p = random_laurent(rng)
        q = random_laurent(rng)
        assert jet_at_one(p * q) == jet_at_one(p) * jet_at_one(q)


def test_rank_and_determinant_of_diagonal_matrices():
    rng = make_rng(127)
    for size in range(1, 6):
        diagonal = [random_laurent(rng) if rng.random() < 0.7 else 0 * t for _ in range(size)]
        rows = [[diagonal[i] if i == j else 0 * t for j in range(size)] for i in range(size)]
        m = PolyMatrix.from_rows(rows)
        assert m.rank() == sum(1 for d in diagonal if not d.is_zero())
        product = LaurentPoly.one()
        for d in diagonal:
            product = product * d
        assert m.det() == product


def test_scale_rows():
    m = PolyMatrix.from_rows([[t, 1], [1, t]])
    scaled = m.scale_rows([LaurentPoly.t(-2), t - 1])
    assert scaled.row(0) == [LaurentPoly.t(-1), LaurentPoly.t(-2)]
    assert scaled.det() == LaurentPoly.t(-2) * (t - 1) * m.det()
    with pytest.raises(ShapeError):
        m.scale_rows([t])
