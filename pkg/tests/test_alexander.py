import pytest

from cutnumber.core.alexander import (
    PhiMap,
    Presentation,
    alexander_matrix,
    corank_obstruction,
    cut_number_bounds,
    free_abelian_presentation,
    free_cover_rank_check,
    free_group_presentation,
    fundamental_identity_check,
    h1_rank_of_cover,
    load_presentation,
    parse_presentation,
    sample_primitive_phis,
    specialized_matrix,
)
from cutnumber.core.family import model_group_presentation
from cutnumber.core.group import Alphabet, parse_word, random_commutator_word, random_word
from cutnumber.utils.errors import (
    ArityMismatchError,
    InconsistentPhiError,
    InvalidParametersError,
    NonPrimitivePhiError,
    PresentationError,
    WordSyntaxError,
)
from cutnumber.utils.io import bundled_presentations
from tests.helpers import add_consequence, make_rng, same_letters


def test_bundled_presentations_are_listed():
    assert bundled_presentations() == ["free2", "model2", "torus"]


def test_torus_file():
    torus = load_presentation("torus")
    assert torus.names == ("x", "y", "z")
    assert len(torus.relators) == 3
    assert torus.betti_number() == 3


def test_model_file_matches_model_presentation():
    model = load_presentation("model2.txt")
    assert same_letters(model.relators, model_group_presentation(2).relators)
    assert model.betti_number() == 2


def test_parse_presentation_with_comments():
    text = "# a comment\ngens a b\n\nrel a b a^-1 b^-1  # trailing\n"
    presentation = parse_presentation(text)
    assert presentation.names == ("a", "b")
    assert presentation.relators[0] == parse_word("[a,b]", presentation.alphabet)


def test_presentation_text_round_trip():
    torus = load_presentation("torus")
    again = parse_presentation(torus.to_text())
    assert again == torus
    assert again.digest() == torus.digest()


@pytest.mark.parametrize(
    "text",
    [
        "",
        "# only a comment\n",
        "gens x\ngens y\n",
        "rel x\ngens x\n",
        "gens x y\nrelator x\n",
        "gens x 2y\n",
    ],
)
def test_malformed_presentations(text):
    with pytest.raises(PresentationError):
        parse_presentation(text)


def test_malformed_relator_reports_location():
    with pytest.raises(WordSyntaxError) as info:
        parse_presentation("gens x y\nrel [x, y\n")
    assert info.value.line == 2
    with pytest.raises(WordSyntaxError) as info:
        parse_presentation("gens x y\nrel x q\n")
    assert info.value.line == 2


def test_missing_file():
    with pytest.raises(PresentationError):
        load_presentation("no_such_presentation")


def test_phi_validation():
    torus = load_presentation("torus")
    with pytest.raises(NonPrimitivePhiError):
        PhiMap((2, 0, 4)).validate(torus)
    with pytest.raises(ArityMismatchError):
        PhiMap((1, 0)).validate(torus)
    skewed = parse_presentation("gens x y\nrel x^2 y^-1\n")
    with pytest.raises(InconsistentPhiError):
        h1_rank_of_cover(skewed, (1, 0))
    assert h1_rank_of_cover(skewed, (1, 2)) == 0
    assert PhiMap.parse("1, 0,-3").n == (1, 0, -3)
    with pytest.raises(WordSyntaxError):
        PhiMap.parse("1,a")


def test_alexander_matrix_of_torus():
    torus = load_presentation("torus")
    matrix = alexander_matrix(torus)
    assert matrix.shape == (3, 3)
    assert matrix.arity == 3
    assert specialized_matrix(torus, (1, 0, 0)).arity == 1


def test_torus_cover_has_rank_zero():
    torus = load_presentation("torus")
    assert h1_rank_of_cover(torus, (1, 0, 0)) == 0
    phis = sample_primitive_phis(torus, 20, make_rng(47))
    assert len(phis) == 20
    for phi in phis:
        assert phi.is_primitive()
        assert h1_rank_of_cover(torus, phi) == 0


def test_free_group_cover_has_rank_one():
    assert h1_rank_of_cover(load_presentation("free2"), (1, 0)) == 1
    assert free_cover_rank_check(3, (1, 2, 3))
    assert free_cover_rank_check(1, (1,))


def test_free_abelian_presentation():
    p = free_abelian_presentation(4)
    assert len(p.relators) == 6
    assert p.betti_number() == 4
    assert h1_rank_of_cover(p, (1, -1, 2, 0)) == 0
    assert free_group_presentation(2).betti_number() == 2


@pytest.mark.parametrize("m", [1, 2, 3])
def test_fundamental_identity_for_model_presentations(m):
    presentation = model_group_presentation(m)
    for phi in ([1] + [0] * (m - 1), [1] * m, [0] * (m - 1) + [1]):
        assert fundamental_identity_check(presentation, phi)


def test_rank_is_invariant_under_adding_consequences():
    rng = make_rng(53)
    torus = load_presentation("torus")
    model = load_presentation("model2")
    for _ in range(3):
        assert h1_rank_of_cover(add_consequence(torus, rng), (1, 1, 0)) == 0
        assert h1_rank_of_cover(add_consequence(model, rng), (2, 3)) == 0
    free = load_presentation("free2")
    assert h1_rank_of_cover(add_consequence(free, rng), (1, 0)) == 1


def test_rank_is_invariant_under_adding_a_generator():
    torus = load_presentation("torus")
    x, y, _ = torus.alphabet.generators()
    extended = torus.with_generator("w", x * y)
    assert extended.betti_number() == 3
    assert h1_rank_of_cover(extended, (1, 2, 0, 3)) == 0
    free = load_presentation("free2")
    a, b = free.alphabet.generators()
    assert h1_rank_of_cover(free.with_generator("c", a * b * a), (1, 0, 2)) == 1


def test_cut_number_bounds():
    assert cut_number_bounds(3, True) == (1, 1)
    assert cut_number_bounds(3, False) == (1, 3)
    with pytest.raises(InvalidParametersError):
        cut_number_bounds(0, True)


def test_sampling_is_seeded():
    torus = load_presentation("torus")
    first = sample_primitive_phis(torus, 5, make_rng(59))
    second = sample_primitive_phis(torus, 5, make_rng(59))
    assert first == second
    keys = {max(p.n, p.negate().n) for p in first}
    assert len(keys) == 5


def test_corank_obstruction_for_sampled_torus_characters():
    torus = load_presentation("torus")
    phis = sample_primitive_phis(torus, 4, make_rng(61))
    certificate = corank_obstruction(torus, phis, seed=61)
    assert certificate.beta1 == 3
    assert all(r.rank == 0 for r in certificate.phis)
    assert certificate.cut_number_bounds == [1, 3]
    assert certificate.seed == 61
    statements = [c.statement for c in certificate.conclusions]
    assert len(statements) == 5
    assert all(s.startswith("c(X, phi) = 1") for s in statements[:4])
    assert statements[4] == "1 <= c(X) <= 3"


def test_single_character_licenses_only_its_own_conclusion():
    certificate = corank_obstruction(free_abelian_presentation(3), [(1, 0, 0)])
    statements = [c.statement for c in certificate.conclusions]
    assert statements == ["c(X, phi) = 1 for phi = (1,0,0)", "1 <= c(X) <= 3"]


def test_exhaustive_sample_gives_global_conclusions():
    certificate = corank_obstruction(free_abelian_presentation(1), [(1,)], exhaustive=True)
    statements = [c.statement for c in certificate.conclusions]
    assert "c(X) = 1" in statements
    assert "no epimorphism onto F/F'' with F free of rank 2" in statements
    assert certificate.cut_number_bounds == [1, 1]


def test_corank_obstruction_for_free_group():
    free = load_presentation("free2")
    certificate = corank_obstruction(free, [(1, 0)])
    assert certificate.phis[0].rank == 1
    assert [c.statement for c in certificate.conclusions] == ["1 <= c(X) <= 2"]
    with pytest.raises(InvalidParametersError):
        corank_obstruction(free, [])


def _random_presentation(rng):
    alphabet = Alphabet.standard(3)
    x1, x2, _ = alphabet.generators()
    w = random_word(alphabet, 4, rng)
    relators = (
        random_commutator_word(alphabet, rng),
        random_commutator_word(alphabet, rng),
        w * x1 * x2.inverse() * w.inverse(),
    )
    return Presentation(alphabet, relators)


def test_fundamental_identity_on_random_presentations():
    rng = make_rng(151)
    for _ in range(10):
        presentation = _random_presentation(rng)
        phis = sample_primitive_phis(presentation, 3, rng)
        assert phis
        for phi in phis:
            assert phi.n[0] == phi.n[1]
            assert fundamental_identity_check(presentation, phi)


def test_rank_is_invariant_under_negating_the_character():
    rng = make_rng(157)
    for _ in range(10):
        presentation = _random_presentation(rng)
        for phi in sample_primitive_phis(presentation, 2, rng):
            rank = specialized_matrix(presentation, phi).rank()
            assert specialized_matrix(presentation, phi.negate()).rank() == rank
    torus = load_presentation("torus")
    assert h1_rank_of_cover(torus, (-1, 0, 2)) == h1_rank_of_cover(torus, (1, 0, -2))
