"""Generator sets, exact metrics, the norm-sum identity, and dominance."""

import random

import pytest

from zonolat import (
    INF,
    Dominance,
    DomainError,
    GeneratorSet,
    counted_metrics,
    dominance_check,
    metrics,
    norm_sum_identity,
    positive_primitive_zonotope,
    primitive_zonotope,
)
from zonolat.zonotope import (
    ball_split_check,
    orthant_split_check,
    quadrant_identity_check,
    random_generator_set,
)


def test_generator_set_rejects_zero_vector():
    with pytest.raises(DomainError):
        GeneratorSet(d=2, generators=((0, 0),))


def test_generator_set_rejects_non_canonical():
    with pytest.raises(DomainError):
        GeneratorSet(d=2, generators=((-1, 2),))
    with pytest.raises(DomainError):
        GeneratorSet(d=2, generators=((0, -1),))


def test_generator_set_rejects_collinear():
    with pytest.raises(DomainError):
        GeneratorSet(d=2, generators=((1, 0), (2, 0)))
    with pytest.raises(DomainError):
        GeneratorSet(d=2, generators=((1, 2), (2, 4)))


def test_generator_set_rejects_dimension_mismatch():
    with pytest.raises(DomainError):
        GeneratorSet(d=2, generators=((1, 0, 0),))


def test_generator_set_allows_imprimitive():
    # arbitrary lattice zonotopes are admissible, only collinearity is barred
    zono = GeneratorSet(d=2, generators=((2, 4), (1, 0)))
    assert metrics(zono).widths == (3, 4)


def test_build_examples():
    assert len(primitive_zonotope(2, 2)) == 4
    assert primitive_zonotope(2, 1).generators == ((0, 1), (1, 0))
    assert len(primitive_zonotope(3, 2)) == 9


def test_build_positive_examples():
    assert set(positive_primitive_zonotope(2, 2).generators) == {(1, 0), (0, 1), (1, 1)}
    assert len(positive_primitive_zonotope(2, 3)) == 5
    assert positive_primitive_zonotope(1, 7).generators == ((1,),)


def test_metrics_examples():
    m = metrics(primitive_zonotope(2, 2))
    assert (m.diameter, m.widths, m.k) == (4, (3, 3), 3)
    m = metrics(primitive_zonotope(3, 2))
    assert (m.diameter, m.widths, m.k) == (9, (5, 5, 5), 5)
    m = metrics(GeneratorSet(d=2, generators=((1, 0),)))
    assert (m.diameter, m.widths, m.k) == (1, (1, 0), 1)


def test_diameter_is_square_of_dimension_at_radius_two():
    for d in range(2, 7):
        assert len(primitive_zonotope(d, 2)) == d * d


def test_width_uniformity_of_one_norm_family():
    for d in (2, 3, 4):
        for p in (1, 2, 3):
            w = metrics(primitive_zonotope(d, p)).widths
            assert len(set(w)) == 1


def test_counted_metrics_matches_enumerated():
    for p in range(1, 21):
        assert counted_metrics(2, p) == metrics(primitive_zonotope(2, p))
    for p in range(1, 7):
        assert counted_metrics(3, p) == metrics(primitive_zonotope(3, p))


def test_counted_metrics_trivial_radii():
    assert counted_metrics(2, 0).diameter == 0
    assert counted_metrics(2, 0).k == 0
    assert counted_metrics(1, 5) == metrics(primitive_zonotope(1, 5))


def test_norm_sum_identity_examples():
    assert norm_sum_identity(2, 2) == (6, 6, True)
    assert norm_sum_identity(3, 2) == (15, 15, True)
    check = norm_sum_identity(2, 3)
    assert check == (18, 18, True)
    assert counted_metrics(2, 3).k == 9


def test_norm_sum_identity_holds_broadly():
    for p in range(1, 16):
        assert norm_sum_identity(2, p).equal
    for p in range(1, 6):
        assert norm_sum_identity(3, p).equal
        assert norm_sum_identity(4, p).equal


@pytest.mark.parametrize("q", [1, INF])
def test_orthant_split(q):
    for d in (2, 3):
        for p in range(1, 8):
            assert orthant_split_check(d, p, q), (d, p, q)


@pytest.mark.parametrize("q", [1, INF])
def test_ball_split(q):
    for d in (2, 3):
        for p in range(1, 8):
            assert ball_split_check(d, p, q), (d, p, q)


@pytest.mark.parametrize("q", [1, 2, INF])
def test_quadrant_identity(q):
    for p in range(1, 26):
        assert quadrant_identity_check(p, q), (p, q)


def test_dominance_tie_is_translate():
    assert dominance_check(primitive_zonotope(2, 2), 2) is Dominance.TIE_IS_TRANSLATE


def test_dominance_strict():
    zono = GeneratorSet(d=2, generators=((1, 0), (0, 1), (2, 1), (1, 2), (1, 1)))
    m = metrics(zono)
    assert (m.diameter, m.widths, m.k) == (5, (5, 5), 5)
    assert dominance_check(zono, 2) is Dominance.STRICTLY_DOMINATED


def test_dominance_not_applicable():
    zono = GeneratorSet(d=2, generators=((1, 0), (0, 1)))
    assert dominance_check(zono, 2) is Dominance.NOT_APPLICABLE


def test_dominance_rejects_degenerate():
    flat = GeneratorSet(d=2, generators=((1, 0),))
    with pytest.raises(DomainError):
        dominance_check(flat, 1)
    line = GeneratorSet(d=3, generators=((1, 0, 0), (1, 1, 0), (2, 1, 0)))
    with pytest.raises(DomainError):
        dominance_check(line, 1)


def test_dominance_never_violates_on_random_sets():
    rng = random.Random(7)
    for _ in range(60):
        d = rng.choice((2, 3))
        zono = random_generator_set(rng, d, norm_max=5, m_max=9)
        for p in (1, 2, 3):
            verdict = dominance_check(zono, p)
            assert verdict in Dominance


def test_random_generator_set_is_valid_and_spans():
    rng = random.Random(42)
    for _ in range(20):
        zono = random_generator_set(rng, 3, norm_max=4, m_max=8)
        assert 3 <= len(zono) <= 8
        # construction re-validates invariants; spanning is requested
        m = metrics(zono)
        assert all(w >= 1 for w in m.widths)


def test_serialization_round_trip():
    zono = primitive_zonotope(2, 2)
    assert zono.as_dict() == {
        "d": 2,
        "generators": [[0, 1], [1, -1], [1, 0], [1, 1]],
    }
    assert metrics(zono).as_dict() == {"diameter": 4, "widths": [3, 3], "k": 3}
