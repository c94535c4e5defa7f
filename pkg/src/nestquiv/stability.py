"""Stability: parameter cones, costability, the two-condition criterion,
kernel subrepresentations, and a brute-force oracle for torus-fixed data.

The criterion implemented by `is_theta_stable` is the chart-level one:
inside the parameter cone, an enhanced representation is stable iff

    (C1) F1 and F2 are surjective, and
    (C2) the left part is stable for the base cone,

and (C2) in turn reduces to: all I_q vanish (n >= 2), some sampled chart is
regular, and the extracted ADHM datum is costable.  The oracle re-derives
verdicts directly from the subrepresentation inequalities and is used by the
test suite to cross-check the chain on torus-fixed inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .chart import NuPoint, chart_extract, closure_rank, find_regular_nu
from .errors import (
    ConeViolation,
    IrregularPencil,
    NotCommuting,
    NotFixedForm,
    ShapeMismatch,
    Singular,
)
from .quiver import EnhRep, HirzRep
from .ratmat import RationalMatrix, kernel_basis, rank, rat, rat_str, solve_right


@dataclass(frozen=True)
class GammaParam:
    """Base-cone parameter (theta0, theta1)."""

    theta0: Fraction
    theta1: Fraction

    def __post_init__(self):
        object.__setattr__(self, "theta0", rat(self.theta0))
        object.__setattr__(self, "theta1", rat(self.theta1))


@dataclass(frozen=True)
class EnhThetaParam:
    """Enhanced-cone parameter (theta1, theta2, theta3, theta4)."""

    theta1: Fraction
    theta2: Fraction
    theta3: Fraction
    theta4: Fraction

    def __post_init__(self):
        for name in ("theta1", "theta2", "theta3", "theta4"):
            object.__setattr__(self, name, rat(getattr(self, name)))

    def to_json(self) -> list[str]:
        return [rat_str(getattr(self, f"theta{i}")) for i in range(1, 5)]

    @staticmethod
    def from_json(obj) -> "EnhThetaParam":
        return EnhThetaParam(*(rat(str(t)) for t in obj))


@dataclass(frozen=True)
class StabilityVerdict:
    stable: bool
    witness: str | None = None
    nu: NuPoint | None = None

    def to_json(self) -> dict:
        return {
            "verdict": "stable" if self.stable else "unstable",
            "witness": self.witness,
            "nu": self.nu.to_json() if self.nu is not None else None,
        }


def in_gamma_c(p: GammaParam, c: int) -> bool:
    """Strict membership in the base cone for colength c >= 1."""
    if c < 1:
        raise ShapeMismatch("cone is defined for c >= 1")
    t0, t1 = p.theta0, p.theta1
    return t0 > 0 and -t0 < t1 < -Fraction(c - 1, c) * t0


def in_enh_cone(p: EnhThetaParam, c: int, cp: int) -> bool:
    """Strict membership in the enhanced cone for colengths c > cp >= 0."""
    if not 0 <= cp < c:
        raise ShapeMismatch("need 0 <= cp < c")
    if not in_gamma_c(GammaParam(p.theta1, p.theta2), c):
        return False
    if not (p.theta3 < 0 and p.theta4 < 0):
        return False
    return p.theta1 + p.theta2 + (p.theta3 + p.theta4) * (c - cp) > 0


def default_theta(c: int, cp: int) -> EnhThetaParam:
    """A parameter in the interior of the enhanced cone.

    theta2 is the midpoint of the base interval; theta3 = theta4 =
    -1/(8c(c-cp)) keeps the sum condition at 1/(4c) > 0.  (The naive
    -1/(4(c-cp)) fails the sum condition for every c.)
    """
    p = EnhThetaParam(
        Fraction(1),
        Fraction(-(2 * c - 1), 2 * c),
        Fraction(-1, 8 * c * (c - cp)),
        Fraction(-1, 8 * c * (c - cp)),
    )
    if not in_enh_cone(p, c, cp):
        raise ConeViolation("default parameter left the cone; file a bug")
    return p


def is_costable(b1: RationalMatrix, b2: RationalMatrix, e: RationalMatrix) -> StabilityVerdict:
    """Costability: the covector closure span{e b1^a b2^b} has full rank."""
    if not (b1 @ b2 - b2 @ b1).is_zero():
        raise NotCommuting("[b1, b2] != 0")
    c = b1.rows
    r = closure_rank(b1, b2, e)
    if r == c:
        return StabilityVerdict(stable=True)
    return StabilityVerdict(stable=False, witness=f"costability closure rank {r} < {c}")


def is_gamma_stable(x: HirzRep) -> StabilityVerdict:
    """Base-cone stability of a plain representation with c0 = c1.

    Verdict order: nonzero I (n >= 2), then pencil regularity, then
    costability of the chart extraction; the verdict carries the chart used.
    """
    if x.c0 != x.c1:
        raise ShapeMismatch("stability needs c0 = c1")
    if any(not iq.is_zero() for iq in x.I):
        return StabilityVerdict(stable=False, witness="nonzero I")
    try:
        nu = find_regular_nu(x.A1, x.A2)
    except IrregularPencil:
        return StabilityVerdict(stable=False, witness="irregular pencil")
    a = chart_extract(x, nu)
    inner = is_costable(a.b1, a.b2, a.e)
    if inner.stable:
        return StabilityVerdict(stable=True, nu=nu)
    return StabilityVerdict(stable=False, witness=inner.witness, nu=nu)


def is_theta_stable(x: EnhRep, p: EnhThetaParam) -> StabilityVerdict:
    """Two-condition stability test inside the enhanced cone."""
    if not in_enh_cone(p, x.c, x.cp):
        raise ConeViolation("parameter outside the enhanced cone")
    s = x.c - x.cp
    if rank(x.F1) != s:
        return StabilityVerdict(stable=False, witness="(C1) F1")
    if rank(x.F2) != s:
        return StabilityVerdict(stable=False, witness="(C1) F2")
    left = is_gamma_stable(x.left)
    if not left.stable:
        return StabilityVerdict(stable=False, witness=f"(C2) {left.witness}", nu=left.nu)
    return StabilityVerdict(stable=True, nu=left.nu)


def kernel_subrep(x: EnhRep) -> HirzRep:
    """Restriction of the left part to (ker F1, ker F2).

    Well-defined because A_i(ker F1) <= ker F2, C_t(ker F2) <= ker F1 and
    Im I_q <= ker F1 whenever the intertwining relations hold; violations
    raise NotWellDefined.  Bases are the canonical kernel bases, so the
    output is deterministic.
    """
    from .errors import NotWellDefined

    k1 = kernel_basis(x.F1)
    k2 = kernel_basis(x.F2)
    l = x.left

    def restrict(big: RationalMatrix, into: RationalMatrix, src: RationalMatrix, name: str):
        try:
            sol = solve_right(into, big @ src)
        except Singular:
            raise NotWellDefined(f"{name} does not preserve the kernels") from None
        if not (into @ sol - big @ src).is_zero():
            raise NotWellDefined(f"{name} does not preserve the kernels")
        return sol

    a1 = restrict(l.A1, k2, k1, "A1")
    a2 = restrict(l.A2, k2, k1, "A2")
    cs = tuple(restrict(ct, k1, k2, f"C{t}") for t, ct in enumerate(l.C, start=1))
    iqs = []
    for q, iq in enumerate(l.I, start=1):
        try:
            sol = solve_right(k1, iq)
        except Singular:
            raise NotWellDefined(f"I{q} does not land in ker F1") from None
        if not (k1 @ sol - iq).is_zero():
            raise NotWellDefined(f"I{q} does not land in ker F1")
        iqs.append(sol)
    return HirzRep(
        n=l.n,
        c0=k1.cols,
        c1=k2.cols,
        A1=a1,
        A2=a2,
        C=cs,
        I=tuple(iqs),
        J=l.J @ k1,
    )


# -- brute-force oracle on torus-fixed data ---------------------------


def _check_fixed_form(mats) -> None:
    for m in mats:
        for j in range(m.cols):
            nz = sum(1 for i in range(m.rows) if m[i, j] != 0)
            if nz > 1:
                raise NotFixedForm("some column has more than one nonzero entry")


def _maps_into(m: RationalMatrix, src: int, dst: int) -> bool:
    """Does m send the coordinate subspace src into dst (bitmasks)?"""
    for j in range(m.cols):
        if src >> j & 1:
            for i in range(m.rows):
                if m[i, j] != 0 and not dst >> i & 1:
                    return False
    return True


def _support_mask(col: RationalMatrix) -> int:
    mask = 0
    for i in range(col.rows):
        if any(col[i, j] != 0 for j in range(col.cols)):
            mask |= 1 << i
    return mask


def _popcount(x: int) -> int:
    return bin(x).count("1")


def oracle_semistable_fixed(x: HirzRep | EnhRep, p: EnhThetaParam | None = None) -> bool:
    """Stability by direct enumeration of coordinate subrepresentations.

    Only sound for torus-fixed data (every column of every matrix has at
    most one nonzero entry): there the basis vectors carry distinct torus
    weights, so destabilizing subrepresentations can be taken to be
    spans of coordinate vectors.  Raises NotFixedForm otherwise.

    For an EnhRep the two framed-subrepresentation families are checked
    against the weighted dimension inequalities at parameter p (strictly,
    i.e. the stable verdict); for a HirzRep the parameter-free dimension
    comparisons are used.
    """
    if isinstance(x, EnhRep):
        if p is None:
            raise ShapeMismatch("enhanced oracle needs a parameter")
        return _oracle_enh(x, p)
    return _oracle_hirz(x)


def _oracle_hirz(x: HirzRep) -> bool:
    l = x
    _check_fixed_form([l.A1, l.A2, *l.C, *l.I, l.J])
    c0, c1 = l.c0, l.c1
    i_mask = 0
    for iq in l.I:
        i_mask |= _support_mask(iq)
    for s0, s1 in product(range(1 << c0), range(1 << c1)):
        if not all(_maps_into(a, s0, s1) for a in (l.A1, l.A2)):
            continue
        if not all(_maps_into(ct, s1, s0) for ct in l.C):
            continue
        d0, d1 = _popcount(s0), _popcount(s1)
        if _maps_into(l.J, s0, 0):
            # framing component zero: need dim S0 < dim S1 unless S = 0
            if (s0 or s1) and not d0 < d1:
                return False
        if i_mask & ~s0 == 0:
            # framing component full: need dim S0 <= dim S1
            if not d0 <= d1:
                return False
    return True


def _oracle_enh(x: EnhRep, p: EnhThetaParam) -> bool:
    l = x.left
    _check_fixed_form([l.A1, l.A2, *l.C, *l.I, l.J, x.Ap1, x.Ap2, *x.Cp, x.F1, x.F2])
    c = x.c
    s = c - x.cp
    i_mask = 0
    for iq in l.I:
        i_mask |= _support_mask(iq)
    total = (
        p.theta1 * c + p.theta2 * c + p.theta3 * s + p.theta4 * s
    )
    full = ((1 << c) - 1, (1 << c) - 1, (1 << s) - 1, (1 << s) - 1)
    for tup in product(range(1 << c), range(1 << c), range(1 << s), range(1 << s)):
        s1, s2, s3, s4 = tup
        if not all(_maps_into(a, s1, s2) for a in (l.A1, l.A2)):
            continue
        if not all(_maps_into(ct, s2, s1) for ct in l.C):
            continue
        if not _maps_into(x.F1, s1, s3) or not _maps_into(x.F2, s2, s4):
            continue
        if not all(_maps_into(a, s3, s4) for a in (x.Ap1, x.Ap2)):
            continue
        if not all(_maps_into(ct, s4, s3) for ct in x.Cp):
            continue
        weight = (
            p.theta1 * _popcount(s1)
            + p.theta2 * _popcount(s2)
            + p.theta3 * _popcount(s3)
            + p.theta4 * _popcount(s4)
        )
        if _maps_into(l.J, s1, 0):
            if tup != (0, 0, 0, 0) and not weight < 0:
                return False
        if i_mask & ~s1 == 0:
            if tup != full and not weight < total:
                return False
    return True
