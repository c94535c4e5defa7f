import random

import pytest

from nestquiv import (
    EnhRep,
    GaugeElement,
    HirzRep,
    ShapeMismatch,
    Singular,
    act,
    enh_residuals,
    hirz_residuals,
)
from nestquiv.corpus import random_gauge

from conftest import M, injected_family, point_rep


def test_shape_validation():
    with pytest.raises(ShapeMismatch):
        HirzRep(n=1, c0=1, c1=1, A1=M([[0, 0]]), A2=M([[1]]), C=(M([[0]]),), I=(), J=M([[1]]))
    with pytest.raises(ShapeMismatch):
        HirzRep(n=2, c0=1, c1=1, A1=M([[0]]), A2=M([[1]]), C=(M([[0]]),), I=(), J=M([[1]]))
    with pytest.raises(ShapeMismatch):
        # n = 2 needs one I column
        HirzRep(
            n=2, c0=1, c1=1, A1=M([[0]]), A2=M([[1]]), C=(M([[0]]), M([[0]])), I=(), J=M([[1]])
        )


def test_point_rep_relations():
    x = point_rep()
    assert all(r.is_zero() for r in hirz_residuals(x))


def test_residual_order_n2():
    x = injected_family(2).left
    assert all(r.is_zero() for r in hirz_residuals(x))
    # perturb C2: breaks both the A-side (index 0) and mixed (index 1) rows
    bad = HirzRep(
        n=2, c0=2, c1=2, A1=x.A1, A2=x.A2, C=(x.C[0], x.C[1] + M([[0, 0], [1, 0]])), I=x.I, J=x.J
    )
    res = hirz_residuals(bad)
    assert len(res) == 2
    assert not res[0].is_zero() and not res[1].is_zero()


def test_enh_residuals_zero_on_family():
    for n in (2, 3):
        assert all(r.is_zero() for r in enh_residuals(injected_family(n)))


def test_enh_json_flat_keys():
    x = injected_family(2)
    obj = x.to_json()
    assert set(obj) == {
        "n", "c", "cp", "A1", "A2", "C1", "C2", "I1", "J", "Ap1", "Ap2", "Cp1", "Cp2", "F1", "F2",
    }
    assert EnhRep.from_json(obj) == x


def test_hirz_json_no_I_keys_for_n1():
    x = point_rep()
    obj = x.to_json()
    assert set(obj) == {"n", "c0", "c1", "A1", "A2", "C1", "J"}
    assert HirzRep.from_json(obj) == x


def test_gauge_must_be_invertible():
    with pytest.raises(Singular):
        GaugeElement(g1=M([[0]]), g2=M([[1]]))


def test_act_preserves_relations():
    rng = random.Random(2)
    for n in (2, 3):
        x = injected_family(n)
        g = random_gauge(rng, 2, 1)
        y = act(g, x)
        assert all(r.is_zero() for r in enh_residuals(y))
        assert y.cp == x.cp


def test_act_conjugates_residuals():
    # residual of the broken rep transforms as g1 (.) g1^-1 for the mixed row
    x = injected_family(2).left
    bad = HirzRep(n=2, c0=2, c1=2, A1=x.A1, A2=x.A2, C=x.C, I=(M([[0], [1]]),), J=x.J)
    rng = random.Random(3)
    g = random_gauge(rng, 2)
    res = hirz_residuals(bad)[1]
    res_g = hirz_residuals(act(g, bad))[1]
    assert res_g == g.g1 @ res @ g.inv1
