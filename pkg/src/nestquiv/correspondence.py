"""Conversions between stable enhanced representations and nested cycles.

The bridge runs through a chart: restrict the representation to a patch
where the pencil A_nu is invertible, extract commuting ADHM data for the
dimension-c part and for the kernel subrepresentation cut out by F1, F2,
and read off the two ideals.  The reverse direction rebuilds the canonical
gauge of both cycles and splices them along the inclusion of quotients.

Both directions are deterministic: charts are tried in the fixed order
[1,0], [0,1], [1,1], [1,2], ... and the first regular one wins, so a
converted representation always reports its cycle in the earliest chart
that sees it.  Conversions need 0 < c' < c; length-zero small cycles have
no enhancement to speak of and are rejected with DomainError.
"""

from __future__ import annotations

from fractions import Fraction

from .chart import AdhmData, NuPoint, build_nested_adhm, chart_embed, chart_extract
from .errors import BadPair, ChartUnavailable, DomainError, NotStable, ShapeMismatch
from .ideals import NestedIdealPair, adhm_from_ideal, contains, ideal_from_adhm, inclusion_matrix
from .quiver import EnhRep, HirzRep, enh_residuals
from .ratmat import RationalMatrix, rank
from .stability import EnhThetaParam, is_theta_stable, kernel_subrep


def _pencil_at(x: HirzRep, nu: NuPoint) -> RationalMatrix:
    return x.A2.scale(nu.nu1) + x.A1.scale(nu.nu2)


def _candidate_charts(count: int) -> list[NuPoint]:
    pts = [NuPoint(Fraction(1), Fraction(0)), NuPoint(Fraction(0), Fraction(1))]
    pts += [NuPoint(Fraction(1), Fraction(k)) for k in range(1, count + 1)]
    return pts


def _pair_at(x: EnhRep, kern: HirzRep, nu: NuPoint) -> NestedIdealPair:
    big = ideal_from_adhm(chart_extract(x.left, nu))
    small = ideal_from_adhm(chart_extract(kern, nu))
    if not contains(big, small):
        raise BadPair("extracted cycles are not nested")
    return NestedIdealPair(nu=nu, big=big, small=small)


def rep_to_nested(x: EnhRep, p: EnhThetaParam, nu: NuPoint | None = None) -> NestedIdealPair:
    """Nested pair of cycles cut out by a Theta-stable representation.

    The big cycle comes from the dimension-c part, the small one from the
    kernel subrepresentation of (F1, F2).  When nu is not given, the
    chart is the first of [1,0], [0,1], [1,1], ..., [1,c] that is regular
    for both; a stable pencil has at most c singular directions, so the
    scan cannot exhaust.
    """
    if x.cp == 0:
        raise DomainError("c' = 0 has no nested structure; use the chart dictionary directly")
    verdict = is_theta_stable(x, p)
    if not verdict.stable:
        raise NotStable(f"representation is not stable: {verdict.witness}")
    kern = kernel_subrep(x)
    if nu is not None:
        return _pair_at(x, kern, nu)
    c = x.left.c1
    for cand in _candidate_charts(c):
        if rank(_pencil_at(x.left, cand)) == c and rank(_pencil_at(kern, cand)) == kern.c1:
            return _pair_at(x, kern, cand)
    raise ChartUnavailable("no regular chart among the candidate sample")


def nested_to_rep(pair: NestedIdealPair, n: int) -> EnhRep:
    """Theta-stable representation presenting a nested pair on the n-th surface.

    Both cycles are put in the canonical costable gauge, the inclusion is
    the transpose of the reduction onto the small standard monomials, and
    the quotient datum supplies the dimension-c' arrows.  The output uses
    the pair's own chart, so converting back with rep_to_nested returns
    the pair verbatim whenever its chart is the first regular candidate
    (always true for pairs this package produces).
    """
    if n < 1:
        raise DomainError("the surface index n must be a positive integer")
    c, cp = pair.big.c, pair.small.c
    if cp < 1:
        raise DomainError("conversion needs 0 < c' < c")
    big = adhm_from_ideal(pair.big)
    small = adhm_from_ideal(pair.small)
    incl = inclusion_matrix(pair.big, pair.small)
    nested = build_nested_adhm(small, big, incl)
    left = chart_embed(big, pair.nu, n)
    zero_e = RationalMatrix.zeros(1, c - cp)
    quot_rep = chart_embed(AdhmData(c - cp, nested.qb1, nested.qb2, zero_e), pair.nu, n)
    x = EnhRep(
        left=left,
        cp=cp,
        Ap1=quot_rep.A1,
        Ap2=quot_rep.A2,
        Cp=quot_rep.C,
        F1=nested.quot,
        F2=nested.quot,
    )
    bad = [r for r in enh_residuals(x) if not r.is_zero()]
    if bad:
        raise BadPair("internal error: spliced representation violates the relations")
    return x


def same_orbit(x: EnhRep, y: EnhRep, p: EnhThetaParam) -> bool:
    """Whether two stable representations lie on one orbit of the gauge group.

    Stable orbits are separated by their nested cycles, so the test
    extracts both pairs in a chart regular for the two pencils at once and
    compares the ideals entrywise.  Raises NotStable if either input
    fails the stability check.
    """
    if x.left.n != y.left.n:
        raise ShapeMismatch("representations live on different surfaces")
    if x.left.c1 != y.left.c1 or x.cp != y.cp:
        return False
    for z in (x, y):
        verdict = is_theta_stable(z, p)
        if not verdict.stable:
            raise NotStable(f"representation is not stable: {verdict.witness}")
    kx, ky = kernel_subrep(x), kernel_subrep(y)
    c = x.left.c1
    for cand in _candidate_charts(2 * c + 1):
        if all(
            rank(_pencil_at(r, cand)) == r.c1 for r in (x.left, y.left, kx, ky)
        ):
            px = _pair_at(x, kx, cand)
            py = _pair_at(y, ky, cand)
            return px.big == py.big and px.small == py.small
    raise ChartUnavailable("no common regular chart among the candidate sample")
