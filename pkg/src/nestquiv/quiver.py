"""Representations of the length-n surface quiver and its framed enhancement.

A `HirzRep` is a representation of the quiver with two vertices of dimensions
(c0, c1), arrows A1, A2: V0 -> V1, return arrows C1..Cn: V1 -> V0, framing
row J: V0 -> W = k, and (for n >= 2) framing columns I1..I_{n-1}: W -> V0.
An `EnhRep` glues a c-dimensional left copy to a (c - c')-dimensional right
copy through surjections F1, F2.

Relation residuals are returned as matrices, in a frozen documented order,
so "all relations hold" is exactly "every residual is zero".

Sign convention, frozen package-wide: the mixed relation reads

    C_q A1 - C_{q+1} A2 - I_q J = 0        (q = 1 .. n-1)

This is the sign under which the monad built in `monad` composes to zero;
see test_monad for the locked check.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ShapeMismatch, Singular
from .ratmat import RationalMatrix, invert


def _expect_shape(m: RationalMatrix, rows: int, cols: int, name: str):
    if m.rows != rows or m.cols != cols:
        raise ShapeMismatch(f"{name} must be {rows}x{cols}, got {m.rows}x{m.cols}")


@dataclass(frozen=True)
class HirzRep:
    """Representation datum (A1, A2, C1..Cn, I1..I_{n-1}, J).

    I is the empty list for n = 1.  J has shape 1 x c0, each I_q is c0 x 1.
    """

    n: int
    c0: int
    c1: int
    A1: RationalMatrix
    A2: RationalMatrix
    C: tuple[RationalMatrix, ...]
    I: tuple[RationalMatrix, ...]
    J: RationalMatrix

    def __post_init__(self):
        if self.n < 1:
            raise ShapeMismatch("n must be >= 1")
        object.__setattr__(self, "C", tuple(self.C))
        object.__setattr__(self, "I", tuple(self.I))
        _expect_shape(self.A1, self.c1, self.c0, "A1")
        _expect_shape(self.A2, self.c1, self.c0, "A2")
        if len(self.C) != self.n:
            raise ShapeMismatch(f"need {self.n} C-matrices, got {len(self.C)}")
        for t, Ct in enumerate(self.C, start=1):
            _expect_shape(Ct, self.c0, self.c1, f"C{t}")
        if len(self.I) != max(self.n - 1, 0):
            raise ShapeMismatch(f"need {self.n - 1} I-matrices, got {len(self.I)}")
        for q, Iq in enumerate(self.I, start=1):
            _expect_shape(Iq, self.c0, 1, f"I{q}")
        _expect_shape(self.J, 1, self.c0, "J")

    def to_json(self) -> dict:
        out = {"n": self.n, "c0": self.c0, "c1": self.c1}
        out["A1"] = self.A1.to_json()
        out["A2"] = self.A2.to_json()
        for t, Ct in enumerate(self.C, start=1):
            out[f"C{t}"] = Ct.to_json()
        for q, Iq in enumerate(self.I, start=1):
            out[f"I{q}"] = Iq.to_json()
        out["J"] = self.J.to_json()
        return out

    @staticmethod
    def from_json(obj: dict) -> "HirzRep":
        n = int(obj["n"])
        return HirzRep(
            n=n,
            c0=int(obj["c0"]),
            c1=int(obj["c1"]),
            A1=RationalMatrix.from_json(obj["A1"]),
            A2=RationalMatrix.from_json(obj["A2"]),
            C=tuple(RationalMatrix.from_json(obj[f"C{t}"]) for t in range(1, n + 1)),
            I=tuple(RationalMatrix.from_json(obj[f"I{q}"]) for q in range(1, n)),
            J=RationalMatrix.from_json(obj["J"]),
        )


@dataclass(frozen=True)
class EnhRep:
    """Enhanced representation: left HirzRep of size c plus a right copy of
    size c - c' and the connecting surjection data F1, F2."""

    left: HirzRep
    cp: int
    Ap1: RationalMatrix
    Ap2: RationalMatrix
    Cp: tuple[RationalMatrix, ...]
    F1: RationalMatrix
    F2: RationalMatrix

    def __post_init__(self):
        object.__setattr__(self, "Cp", tuple(self.Cp))
        c = self.left.c0
        if self.left.c1 != c:
            raise ShapeMismatch("enhanced left part needs c0 = c1")
        if not 0 <= self.cp < c:
            raise ShapeMismatch(f"need 0 <= cp < c, got cp={self.cp}, c={c}")
        s = c - self.cp
        _expect_shape(self.Ap1, s, s, "Ap1")
        _expect_shape(self.Ap2, s, s, "Ap2")
        if len(self.Cp) != self.left.n:
            raise ShapeMismatch("wrong number of Cp matrices")
        for t, Ct in enumerate(self.Cp, start=1):
            _expect_shape(Ct, s, s, f"Cp{t}")
        _expect_shape(self.F1, s, c, "F1")
        _expect_shape(self.F2, s, c, "F2")

    @property
    def n(self) -> int:
        return self.left.n

    @property
    def c(self) -> int:
        return self.left.c0

    def to_json(self) -> dict:
        out = {"n": self.n, "c": self.c, "cp": self.cp}
        out["A1"] = self.left.A1.to_json()
        out["A2"] = self.left.A2.to_json()
        for t, Ct in enumerate(self.left.C, start=1):
            out[f"C{t}"] = Ct.to_json()
        for q, Iq in enumerate(self.left.I, start=1):
            out[f"I{q}"] = Iq.to_json()
        out["J"] = self.left.J.to_json()
        out["Ap1"] = self.Ap1.to_json()
        out["Ap2"] = self.Ap2.to_json()
        for t, Ct in enumerate(self.Cp, start=1):
            out[f"Cp{t}"] = Ct.to_json()
        out["F1"] = self.F1.to_json()
        out["F2"] = self.F2.to_json()
        return out

    @staticmethod
    def from_json(obj: dict) -> "EnhRep":
        n, c = int(obj["n"]), int(obj["c"])
        left = HirzRep(
            n=n,
            c0=c,
            c1=c,
            A1=RationalMatrix.from_json(obj["A1"]),
            A2=RationalMatrix.from_json(obj["A2"]),
            C=tuple(RationalMatrix.from_json(obj[f"C{t}"]) for t in range(1, n + 1)),
            I=tuple(RationalMatrix.from_json(obj[f"I{q}"]) for q in range(1, n)),
            J=RationalMatrix.from_json(obj["J"]),
        )
        return EnhRep(
            left=left,
            cp=int(obj["cp"]),
            Ap1=RationalMatrix.from_json(obj["Ap1"]),
            Ap2=RationalMatrix.from_json(obj["Ap2"]),
            Cp=tuple(RationalMatrix.from_json(obj[f"Cp{t}"]) for t in range(1, n + 1)),
            F1=RationalMatrix.from_json(obj["F1"]),
            F2=RationalMatrix.from_json(obj["F2"]),
        )


@dataclass(frozen=True)
class GaugeElement:
    """(g1, g2, g3, g4), each invertible; invertibility checked eagerly."""

    g1: RationalMatrix
    g2: RationalMatrix
    g3: RationalMatrix | None = None
    g4: RationalMatrix | None = None
    _inv: tuple = field(init=False, repr=False, compare=False, default=())

    def __post_init__(self):
        invs = []
        for g in (self.g1, self.g2, self.g3, self.g4):
            if g is None:
                invs.append(None)
                continue
            try:
                invs.append(invert(g))
            except Singular:
                raise Singular("gauge element must be invertible") from None
        object.__setattr__(self, "_inv", tuple(invs))

    @property
    def inv1(self):
        return self._inv[0]

    @property
    def inv2(self):
        return self._inv[1]

    @property
    def inv3(self):
        return self._inv[2]

    @property
    def inv4(self):
        return self._inv[3]


def hirz_residuals(x: HirzRep) -> list[RationalMatrix]:
    """Relation residuals of the plain quiver, in the frozen order.

    n = 1:  [A1 C1 A2 - A2 C1 A1].
    n >= 2: first the n-1 residuals A1 C_q - A2 C_{q+1}, then the n-1
    residuals C_q A1 - C_{q+1} A2 - I_q J, both for q = 1 .. n-1.
    """
    if x.n == 1:
        c1 = x.C[0]
        return [x.A1 @ c1 @ x.A2 - x.A2 @ c1 @ x.A1]
    out = []
    for q in range(x.n - 1):
        out.append(x.A1 @ x.C[q] - x.A2 @ x.C[q + 1])
    for q in range(x.n - 1):
        out.append(x.C[q] @ x.A1 - x.C[q + 1] @ x.A2 - x.I[q] @ x.J)
    return out


def enh_residuals(x: EnhRep) -> list[RationalMatrix]:
    """Residuals of every enhanced relation, in the frozen order.

    The left-part residuals come first and equal hirz_residuals(x.left)
    entry by entry.  Then, for n = 1:
        right loop, F2 A1 - Ap1 F1, F2 A2 - Ap2 F1, F1 C1 - Cp1 F2.
    For n >= 2:
        right residuals Ap1 Cp_q - Ap2 Cp_{q+1} (q = 1..n-1),
        right residuals Cp_q Ap1 - Cp_{q+1} Ap2 (q = 1..n-1),
        F1 I_q (q = 1..n-1),
        F2 A_p - Ap_p F1 (p = 1, 2),
        F1 C_t - Cp_t F2 (t = 1..n).
    """
    out = list(hirz_residuals(x.left))
    l = x.left
    if x.n == 1:
        cp1 = x.Cp[0]
        out.append(x.Ap1 @ cp1 @ x.Ap2 - x.Ap2 @ cp1 @ x.Ap1)
        out.append(x.F2 @ l.A1 - x.Ap1 @ x.F1)
        out.append(x.F2 @ l.A2 - x.Ap2 @ x.F1)
        out.append(x.F1 @ l.C[0] - cp1 @ x.F2)
        return out
    for q in range(x.n - 1):
        out.append(x.Ap1 @ x.Cp[q] - x.Ap2 @ x.Cp[q + 1])
    for q in range(x.n - 1):
        out.append(x.Cp[q] @ x.Ap1 - x.Cp[q + 1] @ x.Ap2)
    for q in range(x.n - 1):
        out.append(x.F1 @ l.I[q])
    out.append(x.F2 @ l.A1 - x.Ap1 @ x.F1)
    out.append(x.F2 @ l.A2 - x.Ap2 @ x.F1)
    for t in range(x.n):
        out.append(x.F1 @ l.C[t] - x.Cp[t] @ x.F2)
    return out


def act(g: GaugeElement, x: HirzRep | EnhRep):
    """Base-change action.  On the left part (g1 on V0, g2 on V1):
    A -> g2 A g1^-1, C -> g1 C g2^-1, I -> g1 I, J -> J g1^-1; on the right
    part (g3, g4) likewise, and F1 -> g3 F1 g1^-1, F2 -> g4 F2 g2^-1.
    """
    if isinstance(x, HirzRep):
        if g.g1.rows != x.c0 or g.g2.rows != x.c1:
            raise ShapeMismatch("gauge sizes do not match representation")
        return HirzRep(
            n=x.n,
            c0=x.c0,
            c1=x.c1,
            A1=g.g2 @ x.A1 @ g.inv1,
            A2=g.g2 @ x.A2 @ g.inv1,
            C=tuple(g.g1 @ Ct @ g.inv2 for Ct in x.C),
            I=tuple(g.g1 @ Iq for Iq in x.I),
            J=x.J @ g.inv1,
        )
    if g.g3 is None or g.g4 is None:
        raise ShapeMismatch("enhanced action needs all four gauge blocks")
    if g.g3.rows != x.c - x.cp or g.g4.rows != x.c - x.cp:
        raise ShapeMismatch("gauge sizes do not match representation")
    sub = GaugeElement(g1=g.g1, g2=g.g2)
    return EnhRep(
        left=act(sub, x.left),
        cp=x.cp,
        Ap1=g.g4 @ x.Ap1 @ g.inv3,
        Ap2=g.g4 @ x.Ap2 @ g.inv3,
        Cp=tuple(g.g3 @ Ct @ g.inv4 for Ct in x.Cp),
        F1=g.g3 @ x.F1 @ g.inv1,
        F2=g.g4 @ x.F2 @ g.inv2,
    )
