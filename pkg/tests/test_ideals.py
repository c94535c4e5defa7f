import random
from fractions import Fraction

import pytest

from nestquiv import (
    AdhmData,
    NestedIdealPair,
    NotAnIdeal,
    NotCostable,
    Poly2,
    ShapeMismatch,
    ZeroCycleIdeal,
    adhm_from_ideal,
    colength,
    contains,
    enumerate_nested_monomial,
    ideal_from_adhm,
    inclusion_matrix,
    monomial_ideal,
    partitions,
    support_approx,
)
from nestquiv.corpus import ideal_of_points, random_points

from conftest import M, nu


def test_poly2_basics():
    p = Poly2.from_dict({(0, 0): Fraction(1), (2, 0): Fraction(-1)})
    q = Poly2.from_dict({(1, 0): Fraction(1)})
    assert p.leading_monomial() == (2, 0)
    assert (p * q).leading_monomial() == (3, 0)
    assert (p - p).is_zero()
    assert str(q) == "x"
    assert p.degree() == 2


def test_validate_rejects_non_ideal():
    # span{x} alone is not closed under multiplication at degree 2
    rows = [[0, 1, 0, 0, 0, 0]]
    with pytest.raises(NotAnIdeal):
        ZeroCycleIdeal.from_rows([[Fraction(v) for v in r] for r in rows], c=5, d=2)


def test_monomial_ideal_staircase():
    i = monomial_ideal((2,))
    assert i.c == 2 and i.d == 2
    assert i.standard_monomials() == [(0, 0), (1, 0)]
    j = monomial_ideal((2, 1))
    assert j.standard_monomials() == [(0, 0), (1, 0), (0, 1)]
    assert colength(j) == 3


def test_adhm_from_ideal_frozen():
    a = adhm_from_ideal(monomial_ideal((2,)))
    assert a.b1 == M([[0, 1], [0, 0]])
    assert a.b2 == M([[0, 0], [0, 0]])
    assert a.e == M([[1, 0]])


def test_adhm_from_ideal_non_monomial():
    # (y, x^2 - x): multiplication by x fixes x and sends 1 to x
    i = ZeroCycleIdeal.from_rows(
        [
            [0, 0, 1, 0, 0, 0],
            [0, -1, 0, 1, 0, 0],
            [0, 0, 0, 0, 1, 0],
            [0, 0, 0, 0, 0, 1],
        ],
        c=2,
        d=2,
    )
    a = adhm_from_ideal(i)
    assert a.b1 == M([[0, 1], [0, 1]])
    assert a.b2 == M([[0, 0], [0, 0]])
    assert a.e == M([[1, 0]])


def test_dictionary_is_inverse_both_ways():
    rng = random.Random(12)
    for c in (1, 2, 3, 4):
        ideal = ideal_of_points(random_points(rng, c))
        assert ideal_from_adhm(adhm_from_ideal(ideal)) == ideal
    for lam in partitions(3):
        ideal = monomial_ideal(lam)
        assert ideal_from_adhm(adhm_from_ideal(ideal)) == ideal


def test_ideal_from_adhm_needs_costable():
    b1 = M([[1, 1], [0, 2]])
    with pytest.raises(NotCostable):
        ideal_from_adhm(AdhmData(c=2, b1=b1, b2=b1 @ b1, e=M([[0, 1]])))


def test_contains_direction():
    big = monomial_ideal((2,))
    small = monomial_ideal((1,))
    assert contains(big, small)
    assert not contains(small, big)
    assert contains(big, big)


def test_nested_pair_strictness():
    big = monomial_ideal((2,))
    with pytest.raises(ShapeMismatch):
        NestedIdealPair(nu=nu(1, 0), big=big, small=monomial_ideal((2,)))


def test_inclusion_matrix_frozen():
    big = monomial_ideal((2,))
    small = monomial_ideal((1,))
    assert inclusion_matrix(big, small) == M([[1], [0]])


def test_inclusion_matrix_reduction():
    # origin plus (1, 0), with the point (1, 0) inside: x reduces to the
    # constant 1 modulo (x - 1, y)
    big = ideal_of_points([(Fraction(0), Fraction(0)), (Fraction(1), Fraction(0))])
    small = ideal_of_points([(Fraction(1), Fraction(0))])
    assert contains(big, small)
    assert inclusion_matrix(big, small) == M([[1], [1]])


def test_partitions_frozen():
    assert partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert partitions(0) == [()]


def test_enumerate_counts_frozen():
    assert len(enumerate_nested_monomial(1, 2, charts=1)) == 2
    assert len(enumerate_nested_monomial(1, 2, charts=2)) == 6
    assert [len(enumerate_nested_monomial(0, c, charts=1)) for c in (1, 2, 3, 4, 5)] == [
        1,
        2,
        3,
        5,
        7,
    ]


def test_enumerate_pairs_are_nested():
    for pair in enumerate_nested_monomial(1, 3, charts=2):
        assert contains(pair.big, pair.small)
        assert pair.big.c == 3 and pair.small.c == 1


def test_support_approx():
    pts = [(Fraction(1), Fraction(2)), (Fraction(-1, 2), Fraction(3))]
    a = adhm_from_ideal(ideal_of_points(pts))
    sup = support_approx(a)
    assert len(sup) == 2
    (p1, m1), (p2, m2) = sup
    assert m1 == 1 and m2 == 1
    assert abs(p1[0] - (-0.5)) < 1e-7 and abs(p1[1] - 3) < 1e-7
    assert abs(p2[0] - 1) < 1e-7 and abs(p2[1] - 2) < 1e-7


def test_support_approx_multiplicity():
    a = adhm_from_ideal(monomial_ideal((2,)))
    sup = support_approx(a)
    assert len(sup) == 1
    assert sup[0][1] == 2
    assert abs(sup[0][0][0]) < 1e-9 and abs(sup[0][0][1]) < 1e-9
