"""Ideals of 0-cycles in a chart, nested pairs, and the ADHM dictionary.

A cycle of length c in the chart C^2 is stored as the degree-c truncation of
its ideal: the subspace I cap M_c of the polynomials of total degree <= c,
as a canonical echelon basis.  Truncating at the colength loses nothing (a
colength-c ideal is generated in degrees <= c) and keeps everything finite
and exact.

Conventions frozen here:
  * monomials are ordered by the key (a + b, b) (degree, then y-exponent);
  * echelon bases are reduced against the DESCENDING monomial order, so the
    pivot of each row is its largest monomial and the non-pivot monomials
    form the divisor-closed staircase of standard monomials;
  * multiplication matrices act on the standard-monomial basis in ascending
    order, and the ADHM matrices are their transposes, which lands exactly
    in the gauge `canonical_form` produces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chart import AdhmData, NuPoint, closure_rank
from .errors import BadPair, IllConditioned, NotAnIdeal, NotCostable, ShapeMismatch
from .monomials import count_upto, deglex_key, monomials_upto
from .ratmat import RationalMatrix, kernel_basis, rat, rat_str


@dataclass(frozen=True)
class Poly2:
    """Polynomial in two variables with rational coefficients."""

    coeffs: tuple  # tuple of ((a, b), Fraction), sorted ascending, no zeros

    @staticmethod
    def from_dict(d: dict) -> "Poly2":
        items = tuple(
            (m, rat(v)) for m, v in sorted(d.items(), key=lambda kv: deglex_key(kv[0])) if v != 0
        )
        return Poly2(items)

    @staticmethod
    def from_coeffs(vec, d: int) -> "Poly2":
        mons = monomials_upto(d)
        if len(vec) != len(mons):
            raise ShapeMismatch("coefficient vector has wrong length")
        return Poly2.from_dict(dict(zip(mons, vec)))

    def to_coeffs(self, d: int) -> list[Fraction]:
        mons = monomials_upto(d)
        index = {m: i for i, m in enumerate(mons)}
        out = [Fraction(0)] * len(mons)
        for m, v in self.coeffs:
            if m not in index:
                raise ShapeMismatch(f"monomial {m} exceeds degree bound {d}")
            out[index[m]] = v
        return out

    def degree(self) -> int:
        return max((a + b for (a, b), _ in self.coeffs), default=-1)

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_monomial(self) -> tuple[int, int]:
        """Largest monomial in the frozen order."""
        if not self.coeffs:
            raise ShapeMismatch("zero polynomial has no leading monomial")
        return self.coeffs[-1][0]

    def shift(self, da: int, db: int) -> "Poly2":
        return Poly2(tuple(((a + da, b + db), v) for (a, b), v in self.coeffs))

    def __add__(self, other: "Poly2") -> "Poly2":
        d = dict(self.coeffs)
        for m, v in other.coeffs:
            d[m] = d.get(m, Fraction(0)) + v
        return Poly2.from_dict(d)

    def __sub__(self, other: "Poly2") -> "Poly2":
        d = dict(self.coeffs)
        for m, v in other.coeffs:
            d[m] = d.get(m, Fraction(0)) - v
        return Poly2.from_dict(d)

    def scale(self, f) -> "Poly2":
        f = rat(f)
        if f == 0:
            return Poly2(())
        return Poly2(tuple((m, v * f) for m, v in self.coeffs))

    def __mul__(self, other: "Poly2") -> "Poly2":
        d: dict = {}
        for (a1, b1), v1 in self.coeffs:
            for (a2, b2), v2 in other.coeffs:
                m = (a1 + a2, b1 + b2)
                d[m] = d.get(m, Fraction(0)) + v1 * v2
        return Poly2.from_dict(d)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (a, b), v in reversed(self.coeffs):
            mon = ""
            if a:
                mon += "x" + (f"^{a}" if a > 1 else "")
            if b:
                mon += ("*" if mon else "") + "y" + (f"^{b}" if b > 1 else "")
            coeff = rat_str(v)
            parts.append(f"{coeff}*{mon}" if mon and coeff not in ("1", "-1") else (f"-{mon}" if mon and coeff == "-1" else mon or coeff))
        return " + ".join(parts).replace("+ -", "- ")


def _desc_rref(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Reduced echelon against descending columns; zero rows dropped,
    rows ordered by descending pivot."""
    a = [list(r) for r in rows]
    pivots: list[int] = []
    out: list[list[Fraction]] = []
    r = 0
    nrows = len(a)
    for c in range(ncols - 1, -1, -1):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a[:r]


def _desc_pivots(rows) -> list[int]:
    """Pivot (largest-monomial) column of each row of a desc-echelon basis."""
    out = []
    for row in rows:
        p = next((j for j in range(len(row) - 1, -1, -1) if row[j] != 0), None)
        if p is not None:
            out.append(p)
    return out


def _desc_reduce(rows, v: list[Fraction]) -> list[Fraction]:
    """Reduce v modulo a desc-echelon basis (normal form on standard
    monomials)."""
    v = list(v)
    for row in rows:
        p = next((j for j in range(len(row) - 1, -1, -1) if row[j] != 0), None)
        if p is not None and v[p] != 0:
            f = v[p] / row[p]
            v = [x - f * y for x, y in zip(v, row)]
    return v


@dataclass(frozen=True)
class ZeroCycleIdeal:
    """Degree-d truncation of a colength-c ideal, canonical echelon basis.

    basis rows are coefficient vectors over monomials_upto(d) in ascending
    order, reduced against the descending order (see module docstring).
    """

    c: int
    d: int
    basis: RationalMatrix

    def __post_init__(self):
        nmon = count_upto(self.d)
        if self.basis.cols != nmon:
            raise ShapeMismatch("basis width must match the monomial count")
        if self.basis.rows != nmon - self.c:
            raise ShapeMismatch("basis row count must match the colength")

    @staticmethod
    def from_rows(rows, c: int, d: int, check: bool = True) -> "ZeroCycleIdeal":
        """Canonicalize spanning rows; verifies colength and (optionally)
        closure under multiplication within the degree bound."""
        nmon = count_upto(d)
        red = _desc_rref([[rat(x) for x in r] for r in rows], nmon)
        ideal = ZeroCycleIdeal(c=c, d=d, basis=RationalMatrix.from_rows(red, cols=nmon))
        if check:
            ideal.validate()
        return ideal

    def validate(self) -> None:
        """Closure of the truncation under multiplication, where checkable:
        x*f and y*f must reduce to zero whenever they stay within degree d."""
        mons = monomials_upto(self.d)
        index = {m: i for i, m in enumerate(mons)}
        rows = [list(r) for r in self.basis.data]
        for row in rows:
            deg = max((a + b for (a, b), v in zip(mons, row) if v != 0), default=-1)
            if deg < 0 or deg >= self.d:
                continue
            for da, db in ((1, 0), (0, 1)):
                shifted = [Fraction(0)] * len(mons)
                for (a, b), v in zip(mons, row):
                    if v != 0:
                        shifted[index[(a + da, b + db)]] = v
                if any(x != 0 for x in _desc_reduce(rows, shifted)):
                    raise NotAnIdeal("truncation is not closed under multiplication")

    def standard_monomials(self) -> list[tuple[int, int]]:
        """Divisor-closed staircase spanning the quotient, ascending order."""
        mons = monomials_upto(self.d)
        piv = set(_desc_pivots(self.basis.data))
        return [m for j, m in enumerate(mons) if j not in piv]

    def reduce(self, p: Poly2) -> Poly2:
        """Normal form of p modulo the ideal (p must fit the degree bound)."""
        v = _desc_reduce(list(self.basis.data), p.to_coeffs(self.d))
        return Poly2.from_coeffs(v, self.d)

    def member(self, p: Poly2) -> bool:
        return self.reduce(p).is_zero()

    def to_json(self) -> dict:
        return {"c": self.c, "d": self.d, "basis": self.basis.to_json()}

    @staticmethod
    def from_json(obj) -> "ZeroCycleIdeal":
        return ZeroCycleIdeal.from_rows(
            RationalMatrix.from_json(obj["basis"]).data, c=int(obj["c"]), d=int(obj["d"])
        )


@dataclass(frozen=True)
class NestedIdealPair:
    """A colength-c ideal inside a colength-c' one, tagged with the chart."""

    nu: NuPoint
    big: ZeroCycleIdeal
    small: ZeroCycleIdeal

    def __post_init__(self):
        if self.small.c >= self.big.c:
            raise ShapeMismatch("small cycle must be strictly shorter than the big one")

    def to_json(self) -> dict:
        return {
            "nu": self.nu.to_json(),
            "big": self.big.to_json(),
            "small": self.small.to_json(),
        }

    @staticmethod
    def from_json(obj) -> "NestedIdealPair":
        return NestedIdealPair(
            nu=NuPoint.from_json(obj["nu"]),
            big=ZeroCycleIdeal.from_json(obj["big"]),
            small=ZeroCycleIdeal.from_json(obj["small"]),
        )


def colength(i: ZeroCycleIdeal) -> int:
    return count_upto(i.d) - i.basis.rows


def _extend_rows(i: ZeroCycleIdeal, d: int) -> list[list[Fraction]]:
    """Rows spanning the degree-d truncation of the ideal, valid when the
    ideal is generated within its stored bound (true for d >= colength)."""
    mons_small = monomials_upto(i.d)
    index = {m: j for j, m in enumerate(monomials_upto(d))}
    out: list[list[Fraction]] = []
    for row in i.basis.data:
        deg = max((a + b for (a, b), v in zip(mons_small, row) if v != 0), default=-1)
        if deg < 0:
            continue
        for da, db in [(a, b) for a in range(d - deg + 1) for b in range(d - deg + 1 - a)]:
            shifted = [Fraction(0)] * len(index)
            for (a, b), v in zip(mons_small, row):
                if v != 0:
                    shifted[index[(a + da, b + db)]] = v
            out.append(shifted)
    return out


def contains(i: ZeroCycleIdeal, j: ZeroCycleIdeal) -> bool:
    """Whether i is contained in j (every element of i reduces to zero
    modulo j), compared at the common degree bound max(i.d, j.d).

    Sound when each ideal is generated within its own stored bound, which
    holds for d >= colength.  Note the argument order: contains(big, small)
    is the nesting of a pair of cycles Z' subset Z.
    """
    d = max(i.d, j.d)
    rows_j = _desc_rref(_extend_rows(j, d), count_upto(d))
    for row in _extend_rows(i, d):
        if any(x != 0 for x in _desc_reduce(rows_j, row)):
            return False
    return True


def ideal_from_adhm(a: AdhmData) -> ZeroCycleIdeal:
    """Ideal of the cycle encoded by a costable datum.

    The kernel of f |-> e f(b1, b2) on polynomials of degree <= c is exactly
    the truncated ideal; costability makes the evaluation matrix full rank.
    """
    c = a.c
    if closure_rank(a.b1, a.b2, a.e) != c:
        raise NotCostable("datum is not costable")
    mons = monomials_upto(c)
    vectors: dict = {}
    rows = []
    for m in mons:
        if m == (0, 0):
            vectors[m] = list(a.e.data[0]) if c else []
        else:
            aa, bb = m
            prev = vectors[(aa - 1, bb)] if aa > 0 else vectors[(aa, bb - 1)]
            step = a.b1 if aa > 0 else a.b2
            vectors[m] = [
                sum(p * step.data[i][j] for i, p in enumerate(prev)) for j in range(c)
            ]
        rows.append(vectors[m])
    ev = RationalMatrix.from_rows(rows, cols=c)
    ker = kernel_basis(ev.transpose()).transpose()
    return ZeroCycleIdeal.from_rows(list(ker.data), c=c, d=c, check=False)


def adhm_from_ideal(i: ZeroCycleIdeal) -> AdhmData:
    """Multiplication action on the standard-monomial basis, transposed.

    Returns the datum in the canonical gauge: composing with ideal_from_adhm
    is the identity, and adhm_from_ideal(ideal_from_adhm(a)) equals
    canonical_form(a).
    """
    std = i.standard_monomials()
    c = len(std)
    if c != i.c:
        raise NotAnIdeal(f"staircase size {c} != recorded colength {i.c}")
    if any(a + b >= i.d for a, b in std) and c > 0:
        raise NotAnIdeal("degree bound too small to read off multiplication")
    mons = monomials_upto(i.d)
    index = {m: j for j, m in enumerate(mons)}
    pos = {m: k for k, m in enumerate(std)}
    rows_basis = list(i.basis.data)
    mats = []
    for da, db in ((1, 0), (0, 1)):
        cols = []
        for a, b in std:
            vec = [Fraction(0)] * len(mons)
            vec[index[(a + da, b + db)]] = Fraction(1)
            red = _desc_reduce(rows_basis, vec)
            col = [Fraction(0)] * c
            for j, v in enumerate(red):
                if v != 0:
                    col[pos[mons[j]]] = v
            cols.append(col)
        # cols[k] holds the coordinates of x*std[k]; transpose twice cancels
        mats.append(RationalMatrix.from_rows(cols, cols=c))
    e = [[Fraction(1) if m == (0, 0) else Fraction(0) for m in std]]
    return AdhmData(c=c, b1=mats[0], b2=mats[1], e=RationalMatrix.from_rows(e, cols=c))


def inclusion_matrix(big: ZeroCycleIdeal, small: ZeroCycleIdeal) -> RationalMatrix:
    """Dual of the quotient reduction for a nested pair big <= small.

    Column t of the reduction pi expresses big's standard monomials modulo
    the small ideal in small's standard basis; the returned matrix is pi
    transposed, which is the inclusion of the small-cycle datum into the
    big-cycle datum in the canonical gauges of adhm_from_ideal.
    """
    if not contains(big, small):
        raise BadPair("ideals are not nested")
    big_std = big.standard_monomials()
    small_std = small.standard_monomials()
    d = max(big.d, small.d)
    mons = monomials_upto(d)
    index = {m: j for j, m in enumerate(mons)}
    pos = {m: t for t, m in enumerate(small_std)}
    small_rows = _desc_rref(_extend_rows(small, d), count_upto(d))
    rows = []
    for m in big_std:
        vec = [Fraction(0)] * len(mons)
        vec[index[m]] = Fraction(1)
        red = _desc_reduce(small_rows, vec)
        row = [Fraction(0)] * len(small_std)
        for j, v in enumerate(red):
            if v != 0:
                row[pos[mons[j]]] = v
        rows.append(row)
    return RationalMatrix.from_rows(rows, cols=len(small_std))


def partitions(k: int, max_part: int | None = None) -> list[tuple[int, ...]]:
    """Partitions of k as descending tuples, largest first part first."""
    if k == 0:
        return [()]
    if max_part is None:
        max_part = k
    out = []
    for first in range(min(k, max_part), 0, -1):
        for rest in partitions(k - first, first):
            out.append((first,) + rest)
    return out


def _partition_contains(lam: tuple[int, ...], mu: tuple[int, ...]) -> bool:
    if len(mu) > len(lam):
        return False
    return all(mu[i] <= lam[i] for i in range(len(mu)))


def monomial_ideal(lam: tuple[int, ...], d: int | None = None) -> ZeroCycleIdeal:
    """Ideal whose staircase is the Young diagram of the partition:
    x^a y^b lies in the ideal iff a >= lam[b] (rows beyond the diagram have
    width zero)."""
    c = sum(lam)
    if d is None:
        d = c
    rows = []
    mons = monomials_upto(d)
    for j, (a, b) in enumerate(mons):
        width = lam[b] if b < len(lam) else 0
        if a >= width:
            row = [Fraction(0)] * len(mons)
            row[j] = Fraction(1)
            rows.append(row)
    return ZeroCycleIdeal.from_rows(rows, c=c, d=d, check=False)


def enumerate_nested_monomial(cp: int, c: int, charts: int = 1, n: int = 1) -> list[NestedIdealPair]:
    """All torus-fixed nested pairs of colengths (cp, c).

    charts=1: both cycles at the origin of the chart [1, 0]; one pair per
    nested partition pair mu <= lam.  charts=2: cycles split between the two
    torus-fixed points of the base; pure splits keep their own chart label,
    genuinely mixed splits are assembled by transporting both blocks to the
    chart [1, 1] (where both fixed fibers are visible) and summing.  The
    surface degree n enters only through that transport.

    Order: chart-1 colength descending, then partitions in generation order.
    """
    if not 0 <= cp <= c:
        raise ShapeMismatch("need 0 <= cp <= c")
    if charts not in (1, 2):
        raise ShapeMismatch("charts must be 1 or 2")
    nu1 = NuPoint(Fraction(1), Fraction(0))
    if charts == 1:
        out = []
        for lam in partitions(c):
            for mu in partitions(cp):
                if _partition_contains(lam, mu):
                    out.append(
                        NestedIdealPair(
                            nu=nu1, big=monomial_ideal(lam), small=monomial_ideal(mu, d=cp)
                        )
                    )
        return out
    nu2 = NuPoint(Fraction(0), Fraction(1))
    nu_mix = NuPoint(Fraction(1), Fraction(1))
    out = []
    for c1 in range(c, -1, -1):
        c2 = c - c1
        for lam1 in partitions(c1):
            for lam2 in partitions(c2):
                for cp1 in range(min(cp, c1), -1, -1):
                    cp2 = cp - cp1
                    if cp2 > c2:
                        continue
                    for mu1 in partitions(cp1):
                        if not _partition_contains(lam1, mu1):
                            continue
                        for mu2 in partitions(cp2):
                            if not _partition_contains(lam2, mu2):
                                continue
                            out.append(
                                _two_chart_pair(lam1, mu1, lam2, mu2, nu1, nu2, nu_mix, n)
                            )
    return out


def _two_chart_pair(lam1, mu1, lam2, mu2, nu1, nu2, nu_mix, n: int) -> NestedIdealPair:
    from .chart import transform_chart
    from .ratmat import block_diag

    c1, c2 = sum(lam1), sum(lam2)
    if c2 == 0:
        return NestedIdealPair(
            nu=nu1, big=monomial_ideal(lam1), small=monomial_ideal(mu1, d=sum(mu1))
        )
    if c1 == 0:
        return NestedIdealPair(
            nu=nu2, big=monomial_ideal(lam2), small=monomial_ideal(mu2, d=sum(mu2))
        )

    def assemble(l1, l2):
        a1 = adhm_from_ideal(monomial_ideal(l1, d=sum(l1)))
        a2 = adhm_from_ideal(monomial_ideal(l2, d=sum(l2)))
        t1 = transform_chart(a1, nu1, nu_mix, n)
        t2 = transform_chart(a2, nu2, nu_mix, n)
        joined = AdhmData(
            c=a1.c + a2.c,
            b1=block_diag([t1.b1, t2.b1]),
            b2=block_diag([t1.b2, t2.b2]),
            e=t1.e.hstack(t2.e),
        )
        return ideal_from_adhm(joined)

    return NestedIdealPair(nu=nu_mix, big=assemble(lam1, lam2), small=assemble(mu1, mu2))


def support_approx(a: AdhmData, tol: float = 1e-9):
    """Approximate support of the cycle: joint eigenvalue pairs of (b1, b2)
    with multiplicities, via a complex Schur flag of a fixed generic
    combination.  Floating point is quarantined to this function.

    Raises IllConditioned when the flag fails to triangularize both matrices
    to within tol, or when two clusters come closer than 10*tol (the answer
    would then depend on the tolerance).
    """
    import numpy as np
    from scipy.linalg import schur

    c = a.c
    if c == 0:
        return []
    b1 = np.array([[float(x) for x in row] for row in a.b1.data], dtype=complex)
    b2 = np.array([[float(x) for x in row] for row in a.b2.data], dtype=complex)
    # fixed generic weights: avoids ties between distinct joint eigenvalues
    w = 0.7390851332151607 + 0.3678794411714423j
    _, q = schur(b1 + w * b2, output="complex")
    t1 = q.conj().T @ b1 @ q
    t2 = q.conj().T @ b2 @ q
    scale = max(1.0, float(np.max(np.abs(t1))), float(np.max(np.abs(t2))))
    for t in (t1, t2):
        low = np.tril(t, -1)
        if float(np.max(np.abs(low))) > tol * scale:
            raise IllConditioned("matrices do not share the computed flag")
    pts = [(complex(t1[i, i]), complex(t2[i, i])) for i in range(c)]
    parent = list(range(c))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def dist(p, q):
        return max(abs(p[0] - q[0]), abs(p[1] - q[1]))

    for i in range(c):
        for j in range(i + 1, c):
            if dist(pts[i], pts[j]) <= tol:
                parent[find(i)] = find(j)
    clusters: dict = {}
    for i in range(c):
        clusters.setdefault(find(i), []).append(i)
    reps = []
    for members in clusters.values():
        zx = sum(pts[i][0] for i in members) / len(members)
        zy = sum(pts[i][1] for i in members) / len(members)
        reps.append(((zx, zy), len(members)))
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            if dist(reps[i][0], reps[j][0]) < 10 * tol:
                raise IllConditioned("clusters too close for the tolerance")
    reps.sort(key=lambda r: (r[0][0].real, r[0][0].imag, r[0][1].real, r[0][1].imag))
    return reps
