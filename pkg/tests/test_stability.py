from fractions import Fraction

import pytest

from nestquiv import (
    ConeViolation,
    EnhRep,
    EnhThetaParam,
    GammaParam,
    HirzRep,
    NotFixedForm,
    NotWellDefined,
    default_theta,
    hirz_residuals,
    in_enh_cone,
    in_gamma_c,
    is_costable,
    is_gamma_stable,
    is_theta_stable,
    kernel_subrep,
    oracle_semistable_fixed,
)

from conftest import M, injected_family, point_rep, theta_triple


def e3_rep() -> EnhRep:
    # length-2 cycle (y, x^2) with the reduced point inside, first chart
    left = HirzRep(
        n=1,
        c0=2,
        c1=2,
        A1=M([[0, 1], [0, 0]]),
        A2=M([[1, 0], [0, 1]]),
        C=(M([[0, 0], [0, 0]]),),
        I=(),
        J=M([[1, 0]]),
    )
    return EnhRep(
        left=left,
        cp=1,
        Ap1=M([[0]]),
        Ap2=M([[1]]),
        Cp=(M([[0]]),),
        F1=M([[0, 1]]),
        F2=M([[0, 1]]),
    )


def test_gamma_cone():
    assert in_gamma_c(GammaParam(Fraction(1), Fraction(-3, 4)), 2)
    assert not in_gamma_c(GammaParam(Fraction(1), Fraction(-1, 4)), 2)
    assert not in_gamma_c(GammaParam(Fraction(1), Fraction(-1)), 2)
    assert not in_gamma_c(GammaParam(Fraction(-1), Fraction(-3, 4)), 2)


def test_enh_cone_and_default():
    for c in (2, 3, 4, 5):
        for cp in range(0, c):
            p = default_theta(c, cp)
            assert in_enh_cone(p, c, cp)
    # positive theta3 leaves the cone
    bad = EnhThetaParam(Fraction(1), Fraction(-3, 4), Fraction(1, 16), Fraction(-1, 16))
    assert not in_enh_cone(bad, 2, 1)
    # sum condition: theta3 + theta4 too negative
    bad2 = EnhThetaParam(Fraction(1), Fraction(-3, 4), Fraction(-1), Fraction(-1))
    assert not in_enh_cone(bad2, 2, 1)


def test_theta_param_json():
    p = default_theta(2, 1)
    assert EnhThetaParam.from_json(p.to_json()) == p


def test_costable_verdicts():
    good = is_costable(M([[0, 1], [0, 0]]), M([[0, 0], [0, 0]]), M([[1, 0]]))
    assert good.stable
    b1 = M([[1, 1], [0, 2]])
    bad = is_costable(b1, b1 @ b1, M([[0, 1]]))
    assert not bad.stable
    assert bad.witness == "costability closure rank 1 < 2"


def test_gamma_stable_witnesses():
    assert is_gamma_stable(point_rep()).stable
    zero = HirzRep(
        n=1, c0=1, c1=1, A1=M([[0]]), A2=M([[1]]), C=(M([[0]]),), I=(), J=M([[0]])
    )
    v = is_gamma_stable(zero)
    assert not v.stable and v.witness == "costability closure rank 0 < 1"
    pencil = HirzRep(
        n=1, c0=1, c1=1, A1=M([[0]]), A2=M([[0]]), C=(M([[0]]),), I=(), J=M([[1]])
    )
    assert is_gamma_stable(pencil).witness == "irregular pencil"
    with_i = injected_family(2).left
    assert is_gamma_stable(with_i).witness == "nonzero I"


def test_theta_stable_witnesses():
    x = e3_rep()
    p = default_theta(2, 1)
    assert is_theta_stable(x, p).stable
    f1zero = EnhRep(
        left=x.left, cp=1, Ap1=x.Ap1, Ap2=x.Ap2, Cp=x.Cp, F1=M([[0, 0]]), F2=x.F2
    )
    assert is_theta_stable(f1zero, p).witness == "(C1) F1"
    f2zero = EnhRep(
        left=x.left, cp=1, Ap1=x.Ap1, Ap2=x.Ap2, Cp=x.Cp, F1=x.F1, F2=M([[0, 0]])
    )
    assert is_theta_stable(f2zero, p).witness == "(C1) F2"
    jzero_left = HirzRep(
        n=1, c0=2, c1=2, A1=x.left.A1, A2=x.left.A2, C=x.left.C, I=(), J=M([[0, 0]])
    )
    jzero = EnhRep(
        left=jzero_left, cp=1, Ap1=x.Ap1, Ap2=x.Ap2, Cp=x.Cp, F1=x.F1, F2=x.F2
    )
    assert is_theta_stable(jzero, p).witness == "(C2) costability closure rank 0 < 2"
    assert is_theta_stable(injected_family(2), p).witness == "(C2) nonzero I"
    outside = EnhThetaParam(Fraction(1), Fraction(-1, 4), Fraction(-1, 16), Fraction(-1, 16))
    with pytest.raises(ConeViolation):
        is_theta_stable(x, outside)


def test_kernel_subrep_frozen():
    kern = kernel_subrep(e3_rep())
    assert kern == point_rep()


def test_kernel_subrep_carries_framing_columns():
    kern = kernel_subrep(injected_family(2))
    assert kern.c0 == 1 and kern.c1 == 1
    assert kern.I[0] == M([[-1]])
    assert all(r.is_zero() for r in hirz_residuals(kern))


def test_kernel_subrep_not_well_defined():
    x = injected_family(2)
    broken = EnhRep(
        left=x.left, cp=1, Ap1=x.Ap1, Ap2=x.Ap2, Cp=x.Cp, F1=M([[1, 0]]), F2=x.F2
    )
    with pytest.raises(NotWellDefined):
        kernel_subrep(broken)


def test_oracle_plain():
    assert oracle_semistable_fixed(point_rep())
    zero = HirzRep(
        n=1, c0=1, c1=1, A1=M([[0]]), A2=M([[1]]), C=(M([[0]]),), I=(), J=M([[0]])
    )
    assert not oracle_semistable_fixed(zero)
    all_zero = HirzRep(
        n=1, c0=1, c1=1, A1=M([[0]]), A2=M([[0]]), C=(M([[0]]),), I=(), J=M([[0]])
    )
    assert not oracle_semistable_fixed(all_zero)
    dense = HirzRep(
        n=1, c0=2, c1=2, A1=M([[1, 1], [1, 1]]), A2=M([[1, 0], [0, 1]]),
        C=(M([[0, 0], [0, 0]]),), I=(), J=M([[1, 0]]),
    )
    with pytest.raises(NotFixedForm):
        oracle_semistable_fixed(dense)


def test_oracle_enhanced_matches_chain():
    x = e3_rep()
    fam = injected_family(2)
    for p in theta_triple(2, 1):
        assert oracle_semistable_fixed(x, p) is True
        assert is_theta_stable(x, p).stable is True
        assert oracle_semistable_fixed(fam, p) is False
        assert is_theta_stable(fam, p).stable is False
