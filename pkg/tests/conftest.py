from fractions import Fraction

from nestquiv import EnhRep, EnhThetaParam, HirzRep, NuPoint, RationalMatrix


def M(rows, cols=None):
    return RationalMatrix.from_rows(
        [[Fraction(v) for v in row] for row in rows], cols=cols
    )


def nu(a, b) -> NuPoint:
    return NuPoint(Fraction(a), Fraction(b))


def theta_triple(c: int, cp: int) -> list[EnhThetaParam]:
    """Three parameters spread across the enhanced cone: the package
    default direction, one with theta2 near the steep wall, and a scaled
    asymmetric one."""
    s = c - cp
    return [
        EnhThetaParam(
            Fraction(1),
            Fraction(-(2 * c - 1), 2 * c),
            Fraction(-1, 8 * c * s),
            Fraction(-1, 8 * c * s),
        ),
        EnhThetaParam(
            Fraction(1),
            Fraction(-(4 * c - 1), 4 * c),
            Fraction(-1, 16 * c * s),
            Fraction(-1, 16 * c * s),
        ),
        EnhThetaParam(
            Fraction(2),
            Fraction(-(2 * c - 1), c),
            Fraction(-1, 8 * c * s),
            Fraction(-3, 8 * c * s),
        ),
    ]


def point_rep() -> HirzRep:
    """n = 1 representation of the reduced point at the origin."""
    return HirzRep(
        n=1, c0=1, c1=1, A1=M([[0]]), A2=M([[1]]), C=(M([[0]]),), I=(), J=M([[1]])
    )


def injected_family(n: int) -> EnhRep:
    """Relation-satisfying enhanced rep with a nonzero framing column.

    Exists for n >= 2 only; the extra column is balanced by a modified
    C-stack so every relation still holds, which makes it the honest
    nonzero-I mutation (zeroing out I alone always breaks the relations).
    """
    a1 = M([[0, 1], [0, 0]])
    a2 = M([[1, 0], [0, 1]])
    c1 = M([[1, 0], [0, 2]])
    c2 = a1 @ c1
    i1 = M([[-1], [0]])
    j = M([[0, 1]])
    zero2 = M([[0, 0], [0, 0]])
    if n == 2:
        cs, iqs = (c1, c2), (i1,)
        cps = (M([[2]]), M([[0]]))
    elif n == 3:
        cs, iqs = (c1, c2, zero2), (i1, M([[0], [0]]))
        cps = (M([[2]]), M([[0]]), M([[0]]))
    else:
        raise ValueError("family is built for n = 2 or 3")
    left = HirzRep(n=n, c0=2, c1=2, A1=a1, A2=a2, C=cs, I=iqs, J=j)
    return EnhRep(
        left=left,
        cp=1,
        Ap1=M([[0]]),
        Ap2=M([[1]]),
        Cp=cps,
        F1=M([[0, 1]]),
        F2=M([[0, 1]]),
    )
