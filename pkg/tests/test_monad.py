import random
from fractions import Fraction

import pytest

from nestquiv import (
    CoxPoly,
    ExcludedLocus,
    NotWellDefined,
    ShapeMismatch,
    SingularAnu,
    build_monad,
    chart_embed,
    check_complex,
    complex_residuals,
    cox_mul,
    fiber_ranks,
    hirz_residuals,
)
from nestquiv.corpus import ideal_of_points, random_points
from nestquiv.ideals import adhm_from_ideal
from nestquiv.monad import SE, SINF, Y1, Y2
from nestquiv.quiver import HirzRep

from conftest import M, nu, point_rep


def test_coxpoly_algebra():
    p = Y1 + Y2.scale(2)
    q = cox_mul(p, p)
    assert str(q) == "4*y2^2 + 4*y1*y2 + y1^2"
    assert q.evaluate((1, 1, 0, 0)) == 9
    assert (p - p).is_zero()
    assert Y1.pow(3).evaluate((2, 0, 0, 0)) == 8
    assert CoxPoly.from_json(q.to_json()) == q


def test_coxpoly_bidegree():
    n = 2
    assert cox_mul(Y2.pow(n), SE).bidegree(n) == (1, 0)
    assert Y1.bidegree(n) == (0, 1)
    assert SINF.bidegree(n) == (1, 0)
    assert CoxPoly.zero().bidegree(n) is None
    with pytest.raises(NotWellDefined):
        (Y1 + SE).bidegree(n)


def test_monad_frozen_point():
    m = build_monad(point_rep(), nu(1, 0))
    assert [str(m.Amat[k][0]) for k in range(3)] == ["y2*se", "y1", "0"]
    assert [str(m.Bmat[0][k]) for k in range(3)] == ["y1", "-1*y2*se", "sinf"]
    comp = check_complex(m)
    assert all(p.is_zero() for row in comp for p in row)
    assert fiber_ranks(m, (1, 0, 1, 1)) == (1, 1)


def test_monad_requires_square_and_regular():
    tall = HirzRep(
        n=1, c0=1, c1=2, A1=M([[0], [0]]), A2=M([[1], [0]]),
        C=(M([[0, 0]]),), I=(), J=M([[1]]),
    )
    with pytest.raises(ShapeMismatch):
        build_monad(tall, nu(1, 0))
    pencil = HirzRep(
        n=1, c0=1, c1=1, A1=M([[1]]), A2=M([[0]]), C=(M([[0]]),), I=(), J=M([[1]])
    )
    with pytest.raises(SingularAnu):
        build_monad(pencil, nu(1, 0))


def test_complex_vanishes_iff_relations():
    rng = random.Random(31)
    a = adhm_from_ideal(ideal_of_points(random_points(rng, 3)))
    x = chart_embed(a, nu(1, 2), 2)
    charts = [nu(1, 0), nu(1, 1), nu(1, 2), nu(1, 3)]
    for point in charts:
        comp = check_complex(build_monad(x, point))
        assert all(p.is_zero() for row in comp for p in row)
    # break one relation entry: the composite must witness it somewhere
    rows = [list(r) for r in x.C[0].data]
    rows[1][2] += Fraction(1)
    bad = HirzRep(
        n=2, c0=3, c1=3, A1=x.A1, A2=x.A2,
        C=(M(rows), x.C[1]), I=x.I, J=x.J,
    )
    assert any(not r.is_zero() for r in hirz_residuals(bad))
    hits = []
    for point in charts:
        comp = check_complex(build_monad(bad, point))
        hits.append(any(not p.is_zero() for row in comp for p in row))
    assert any(hits)
    assert any(not r.is_zero() for r in complex_residuals(bad))


def test_complex_residuals_blind_spot():
    # relation defects that intertwine with the pencil build an honest
    # complex in every chart; complex_residuals names exactly that boundary
    x = HirzRep(
        n=2, c0=1, c1=1,
        A1=M([[1]]), A2=M([[1]]),
        C=(M([[1]]), M([[0]])), I=(M([[0]]),), J=M([[1]]),
    )
    assert any(not r.is_zero() for r in hirz_residuals(x))
    assert all(r.is_zero() for r in complex_residuals(x))
    for point in [nu(1, 0), nu(0, 1), nu(1, 1), nu(1, -2), nu(2, 3)]:
        comp = check_complex(build_monad(x, point))
        assert all(p.is_zero() for row in comp for p in row)


def test_complex_residuals_follow_relations():
    rng = random.Random(77)
    a = adhm_from_ideal(ideal_of_points(random_points(rng, 3)))
    for n in (1, 2, 3):
        x = chart_embed(a, nu(1, 1), n)
        assert all(r.is_zero() for r in complex_residuals(x))
        assert len(complex_residuals(x)) == n


def test_entries_are_bihomogeneous():
    rng = random.Random(32)
    a = adhm_from_ideal(ideal_of_points(random_points(rng, 2)))
    for n in (1, 2, 3):
        x = chart_embed(a, nu(1, 1), n)
        m = build_monad(x, nu(1, 1))
        c = x.c0
        for i, row in enumerate(m.Amat):
            want = (1, 0) if i < c else (0, 1)
            for p in row:
                assert p.bidegree(n) in (None, want)
        for row in m.Bmat:
            for j, p in enumerate(row):
                want = (0, 1) if j < c else (1, 0)
                assert p.bidegree(n) in (None, want)


def test_fiber_ranks_full_on_stable():
    rng = random.Random(33)
    a = adhm_from_ideal(ideal_of_points(random_points(rng, 2)))
    x = chart_embed(a, nu(1, 0), 2)
    m = build_monad(x, nu(1, 0))
    for pt in ((1, 0, 1, 1), (0, 1, 1, 1), (1, 1, 1, 0), (1, -1, 2, 3), (1, 2, 0, 1)):
        assert fiber_ranks(m, pt) == (2, 2)


def test_fiber_rank_drops_without_framing():
    dead = HirzRep(
        n=1, c0=1, c1=1, A1=M([[0]]), A2=M([[1]]), C=(M([[0]]),), I=(), J=M([[0]])
    )
    m = build_monad(dead, nu(1, 0))
    assert fiber_ranks(m, (0, 1, 0, 1))[1] == 0


def test_excluded_locus():
    m = build_monad(point_rep(), nu(1, 0))
    with pytest.raises(ExcludedLocus):
        fiber_ranks(m, (0, 0, 1, 1))
    with pytest.raises(ExcludedLocus):
        fiber_ranks(m, (1, 1, 0, 0))
