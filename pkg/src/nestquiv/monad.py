"""Symbolic two-term monad attached to a representation in a chart.

Entries live in the bigraded coordinate ring with variables y1, y2 of
bidegree (0,1), s_e of bidegree (1,-n) and s_inf of bidegree (1,0).  With
the rotated coordinates

    y1_nu = nu1 y1 + nu2 y2,      y2_nu = -nu2 y1 + nu1 y2,

the complex is

    O(0,-1)^c  --alpha-->  O(1,-1)^c + O^c + O  --beta-->  O(1,0)^c

    alpha = [P; Q; R],        beta = [Q | -P | J^T s_inf],

    P = y2_nu^n s_e Id + (C_nu A_nu)^T s_inf,
    Q = y1_nu Id + (A_nu^{-1} D_nu)^T y2_nu,
    R = -I_nu^T y2_nu.

beta . alpha collapses to s_inf y2_nu (C_nu D_nu - A_nu^{-1} D_nu C_nu A_nu
- I_nu J)^T.  The quiver relations force this to vanish; the exact vanishing
condition across all charts is the smaller list of combinations returned by
`complex_residuals` (the relations imply it, not conversely).  Building the
monad needs no relations, only A_nu invertible, which is what makes it
usable as a detector for broken data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .chart import NuPoint, pencil_combos
from .errors import ExcludedLocus, NotWellDefined, ShapeMismatch, Singular, SingularAnu
from .quiver import HirzRep
from .ratmat import RationalMatrix, invert, rank, rat, rat_str

_VAR_NAMES = ("y1", "y2", "se", "sinf")


@dataclass(frozen=True)
class CoxPoly:
    """Polynomial in y1, y2, s_e, s_inf with rational coefficients.

    Terms are ((e1, e2, e3, e4), coefficient), sorted by exponent tuple,
    zero coefficients dropped.
    """

    terms: tuple

    @staticmethod
    def from_dict(d: dict) -> "CoxPoly":
        items = tuple((tuple(m), rat(v)) for m, v in sorted(d.items()) if v != 0)
        return CoxPoly(terms=items)

    @staticmethod
    def zero() -> "CoxPoly":
        return CoxPoly(terms=())

    @staticmethod
    def constant(v) -> "CoxPoly":
        return CoxPoly.from_dict({(0, 0, 0, 0): rat(v)})

    @staticmethod
    def variable(i: int) -> "CoxPoly":
        m = [0, 0, 0, 0]
        m[i] = 1
        return CoxPoly.from_dict({tuple(m): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "CoxPoly") -> "CoxPoly":
        d = dict(self.terms)
        for m, v in other.terms:
            d[m] = d.get(m, Fraction(0)) + v
        return CoxPoly.from_dict(d)

    def __neg__(self) -> "CoxPoly":
        return CoxPoly(terms=tuple((m, -v) for m, v in self.terms))

    def __sub__(self, other: "CoxPoly") -> "CoxPoly":
        return self + (-other)

    def scale(self, v) -> "CoxPoly":
        v = rat(v)
        if v == 0:
            return CoxPoly.zero()
        return CoxPoly(terms=tuple((m, c * v) for m, c in self.terms))

    def __mul__(self, other: "CoxPoly") -> "CoxPoly":
        return cox_mul(self, other)

    def pow(self, k: int) -> "CoxPoly":
        out = CoxPoly.constant(1)
        for _ in range(k):
            out = cox_mul(out, self)
        return out

    def evaluate(self, pt) -> Fraction:
        vals = [rat(v) for v in pt]
        total = Fraction(0)
        for m, c in self.terms:
            prod = c
            for e, v in zip(m, vals):
                prod *= v**e
            total += prod
        return total

    def bidegree(self, n: int):
        """Common bidegree of all terms under deg(y)=(0,1), deg(s_e)=(1,-n),
        deg(s_inf)=(1,0); None for the zero polynomial."""
        degs = {(e3 + e4, e1 + e2 - n * e3) for (e1, e2, e3, e4), _ in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise NotWellDefined(f"mixed bidegrees {sorted(degs)}")
        return next(iter(degs))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.terms:
            factors = [rat_str(c)] if c != 1 or all(e == 0 for e in m) else []
            for name, e in zip(_VAR_NAMES, m):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def to_json(self) -> list:
        return [{"exponents": list(m), "coeff": rat_str(c)} for m, c in self.terms]

    @staticmethod
    def from_json(obj) -> "CoxPoly":
        return CoxPoly.from_dict({tuple(t["exponents"]): rat(t["coeff"]) for t in obj})


def cox_mul(f: CoxPoly, g: CoxPoly) -> CoxPoly:
    d: dict = {}
    for m, a in f.terms:
        for q, b in g.terms:
            key = tuple(x + y for x, y in zip(m, q))
            d[key] = d.get(key, Fraction(0)) + a * b
    return CoxPoly.from_dict(d)


Y1 = CoxPoly.variable(0)
Y2 = CoxPoly.variable(1)
SE = CoxPoly.variable(2)
SINF = CoxPoly.variable(3)

SOURCE_TWIST = (0, -1)
MIDDLE_TWISTS = ((1, -1), (0, 0), (0, 0))
TARGET_TWIST = (1, 0)


@dataclass(frozen=True)
class MonadComplex:
    """alpha and beta as CoxPoly matrices, (2c+1) x c and c x (2c+1)."""

    n: int
    c: int
    nu: NuPoint
    Amat: tuple
    Bmat: tuple

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "c": self.c,
            "nu": self.nu.to_json(),
            "Amat": [[p.to_json() for p in row] for row in self.Amat],
            "Bmat": [[p.to_json() for p in row] for row in self.Bmat],
        }


def _scalar_matrix_polys(m: RationalMatrix, poly: CoxPoly):
    """m[i][j] * poly as a dense CoxPoly row-list."""
    return [[poly.scale(m[i, j]) if m[i, j] != 0 else CoxPoly.zero() for j in range(m.cols)] for i in range(m.rows)]


def build_monad(x: HirzRep, nu: NuPoint) -> MonadComplex:
    """Monad of x in the chart at nu.  Needs c0 = c1 and A_nu invertible;
    the relations are NOT assumed (check_complex is the relation test)."""
    if x.c0 != x.c1:
        raise ShapeMismatch("monad construction needs c0 = c1")
    c, n = x.c0, x.n
    a_nu, d_nu, c_nu, i_nu = pencil_combos(x, nu)
    try:
        a_inv = invert(a_nu)
    except Singular:
        raise SingularAnu(f"A_nu singular at nu = {nu.to_json()}") from None
    b1t = (a_inv @ d_nu).transpose()
    b2t = (c_nu @ a_nu).transpose()

    y1n = Y1.scale(nu.nu1) + Y2.scale(nu.nu2)
    y2n = Y1.scale(-nu.nu2) + Y2.scale(nu.nu1)
    lead = cox_mul(y2n.pow(n), SE)

    p_block = _scalar_matrix_polys(b2t, SINF)
    q_block = _scalar_matrix_polys(b1t, y2n)
    for i in range(c):
        p_block[i][i] = p_block[i][i] + lead
        q_block[i][i] = q_block[i][i] + y1n
    r_row = [cox_mul(CoxPoly.constant(-i_nu[j, 0]), y2n) if i_nu[j, 0] != 0 else CoxPoly.zero() for j in range(c)]

    amat = tuple(tuple(row) for row in p_block + q_block + [r_row])
    bmat = tuple(
        tuple(q_block[i]) + tuple(-p for p in p_block[i]) + (SINF.scale(x.J[0, i]),)
        for i in range(c)
    )

    for rows, expected in ((p_block, (1, 0)), (q_block, (0, 1)), ([r_row], (0, 1))):
        for row in rows:
            for p in row:
                deg = p.bidegree(n)
                if deg is not None and deg != expected:
                    raise NotWellDefined(f"entry bidegree {deg}, expected {expected}")
    return MonadComplex(n=n, c=c, nu=nu, Amat=amat, Bmat=bmat)


def check_complex(m: MonadComplex):
    """beta . alpha as a c x c CoxPoly matrix; all-zero iff the chart's
    combination C_nu D_nu - A_nu^{-1} D_nu C_nu A_nu - I_nu J vanishes."""
    c, width = m.c, 2 * m.c + 1
    out = []
    for i in range(c):
        row = []
        for j in range(c):
            acc = CoxPoly.zero()
            for k in range(width):
                acc = acc + cox_mul(m.Bmat[i][k], m.Amat[k][j])
            row.append(acc)
        out.append(row)
    return out


def complex_residuals(x: HirzRep) -> list[RationalMatrix]:
    """The n combinations whose vanishing makes the composite zero in every
    chart at once.

    Multiplying the composite kernel by A_nu clears the inverse and leaves a
    polynomial family in nu whose coefficients are, for q = 1 .. n,

        binom(n-1, q-1) (A2 C_q A1 - A1 C_q A2)
            - binom(n-2, q-1) A2 I_q J - binom(n-2, q-2) A1 I_{q-1} J,

    with the I terms dropped where the index leaves 1 .. n-1.  The quiver
    relations imply these vanish, but not conversely: data whose relation
    defects T_q = C_q A1 - C_{q+1} A2 - I_q J and S_q = A1 C_q - A2 C_{q+1}
    satisfy the intertwinings A_i T_q = S_q A_i still build an honest
    complex, so no chart can see them.
    """
    if x.c0 != x.c1:
        raise ShapeMismatch("complex residuals need c0 = c1")
    out = []
    for q in range(1, x.n + 1):
        cq = x.C[q - 1]
        m = (x.A2 @ cq @ x.A1 - x.A1 @ cq @ x.A2).scale(Fraction(comb(x.n - 1, q - 1)))
        if q <= x.n - 1:
            m = m - (x.A2 @ x.I[q - 1] @ x.J).scale(Fraction(comb(x.n - 2, q - 1)))
        if x.n >= 2 and q >= 2:
            m = m - (x.A1 @ x.I[q - 2] @ x.J).scale(Fraction(comb(x.n - 2, q - 2)))
        out.append(m)
    return out


def fiber_ranks(m: MonadComplex, pt) -> tuple[int, int]:
    """Exact ranks of (alpha, beta) at a point (y1, y2, s_e, s_inf).

    Points with y1 = y2 = 0 or s_e = s_inf = 0 lie outside the surface and
    raise ExcludedLocus.
    """
    vals = tuple(rat(v) for v in pt)
    if vals[0] == 0 and vals[1] == 0:
        raise ExcludedLocus("y1 = y2 = 0 is not on the surface")
    if vals[2] == 0 and vals[3] == 0:
        raise ExcludedLocus("s_e = s_inf = 0 is not on the surface")
    alpha = RationalMatrix.from_rows(
        [[p.evaluate(vals) for p in row] for row in m.Amat], cols=m.c
    )
    beta = RationalMatrix.from_rows(
        [[p.evaluate(vals) for p in row] for row in m.Bmat], cols=2 * m.c + 1
    )
    return rank(alpha), rank(beta)
