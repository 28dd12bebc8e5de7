"""Rational covers of the projective line and their ramification analysis.

A cover is a nonconstant separable t = g(x)/h(x) in F_q(x).  Everything
downstream is exact: fibers come from factoring the fiber polynomial,
different exponents from the divisor identity

    Diff = divisor(dt/dx) + (dx) + 2 * Conorm(pole divisor of t),

and the structural identities (fundamental equality, Dedekind different
bounds, the Hurwitz degree, and the tame branch-count formula) are
recomputed on every report.  A failed identity is a bug in the engine and
raises InternalCheckError rather than ever being reported quietly.
"""

import dataclasses

from . import polyring
from .errors import InternalCheckError, PreconditionError
from .funcfield import Divisor, Place, RationalFunction, divisor_of
from .galois import FieldElement
from .linalg import RelationTracker
from .polyring import Polynomial


class RationalCover:
    """t = g(x)/h(x): the field extension F_q(x) over F_q(t)."""

    __slots__ = ("field", "map", "var_up", "var_down", "normalization")

    def __init__(self, field, rfmap, var_up="x", var_down="t", normalization=None):
        self.field = field
        self.map = rfmap
        self.var_up = var_up
        self.var_down = var_down
        self.normalization = normalization

    @property
    def degree(self):
        return self.map.num.degree

    @property
    def num(self):
        return self.map.num

    @property
    def den(self):
        return self.map.den

    def __eq__(self, other):
        return (
            isinstance(other, RationalCover)
            and self.field == other.field
            and self.map == other.map
            and self.var_up == other.var_up
            and self.var_down == other.var_down
        )

    def __hash__(self):
        return hash((self.map, self.var_up, self.var_down))

    def to_text(self):
        return f"{self.var_down} = {self.map.to_text(self.var_up)}"

    def __repr__(self):
        return f"RationalCover({self.to_text()})"


def cover_create(field, g, h=None, var_up="x", var_down="t"):
    """Build a cover from numerator and denominator polynomials.

    The fraction is reduced and the denominator made monic.  When the
    numerator degree does not exceed the denominator degree the map is
    post-composed with t -> 1/(t + alpha) (alpha kills the leading term
    when degrees tie, else 0) so that deg num > deg den always holds; the
    move is recorded in `normalization`.
    """
    if h is None:
        h = Polynomial.constant(field, 1)
    if g.field != field or h.field != field:
        raise PreconditionError("polynomials over the wrong field")
    if h.is_zero():
        raise PreconditionError("zero denominator")
    if g.is_zero():
        raise PreconditionError("the zero map is not a cover")
    f = RationalFunction(g, h)
    if f.is_constant():
        raise PreconditionError("constant map is not a cover")
    normalization = None
    if f.num.degree <= f.den.degree:
        if f.num.degree == f.den.degree:
            alpha = -(f.num.leading_coefficient / f.den.leading_coefficient)
        else:
            alpha = field.element(0)
        # t -> 1/(t + alpha): new map is h / (g + alpha*h)
        f = RationalFunction(f.den, f.num + f.den * alpha)
        normalization = {"kind": "reciprocal_shift", "alpha": alpha}
        if f.num.degree <= f.den.degree:  # pragma: no cover
            raise InternalCheckError("normalization failed to raise the degree")
    if f.derivative().is_zero():
        raise PreconditionError(
            "inseparable map: dt/dx = 0 (a p-th power of another map)"
        )
    return RationalCover(field, f, var_up, var_down, normalization)


# ---------------------------------------------------------------------------
# fibers and pushforward


@dataclasses.dataclass(frozen=True)
class RamPoint:
    above: Place
    below: Place
    e: int
    f: int
    d: int
    wild: bool


def fiber(cover, Q):
    """The places above Q with ramification indices and residue degrees.

    Returns a list of (Place, e, f) sorted by place.  The fundamental
    equality sum(e*f) = degree is enforced.
    """
    K = cover.field
    if Q.field != K:
        raise PreconditionError("place over the wrong field")
    g, h = cover.map.num, cover.map.den
    n = cover.degree
    pts = []
    if Q.is_infinite:
        e_inf = n - h.degree
        if e_inf < 1:  # pragma: no cover
            raise InternalCheckError("normalized cover with deg g <= deg h")
        pts.append((Place.infinite(K), e_inf, 1))
        for pl, e in polyring.factor(h).factors if h.degree > 0 else ():
            pts.append((Place(K, pl), e, pl.degree))
    else:
        s = Q.degree
        qc = Q.poly.coeffs
        N = Polynomial.constant(K, 0)
        for i, c in enumerate(qc):
            if not c.is_zero():
                N = N + c * g**i * h ** (s - i)
        if N.degree != n * s:  # pragma: no cover
            raise InternalCheckError("fiber polynomial degree mismatch")
        for pl, e in polyring.factor(N).factors:
            if pl.degree % s:  # pragma: no cover
                raise InternalCheckError("residue degree not divisible")
            pts.append((Place(K, pl), e, pl.degree // s))
    pts.sort(key=lambda t: t[0].sort_key())
    total = sum(e * f for _, e, f in pts)
    if total != n:
        raise InternalCheckError(
            f"fundamental equality violated over {Q.text(cover.var_down)}: "
            f"sum(e*f) = {total} != {n}"
        )
    return pts


def pushforward_place(cover, P):
    """The place of the downstairs field lying under P."""
    K = cover.field
    g, h = cover.map.num, cover.map.den
    if P.is_infinite:
        return Place.infinite(K)
    p = P.poly
    if (h % p).is_zero():
        return Place.infinite(K)
    hinv = polyring.invert_mod(h % p, p)
    w = (g % p) * hinv % p
    d = p.degree
    tracker = RelationTracker(K, d)
    power = Polynomial.constant(K, 1)
    while True:
        vec = [power._c[i] if i < len(power._c) else 0 for i in range(d)]
        combo = tracker.add(vec)
        if combo is not None:
            return Place(K, Polynomial(K, combo))
        power = power * w % p


def conorm(cover, D):
    """Pull a downstairs divisor back, weighting by ramification indices."""
    items = []
    for Q, nq in D.items():
        for P, e, _ in fiber(cover, Q):
            items.append((P, nq * e))
    return Divisor(cover.field, items)


# ---------------------------------------------------------------------------
# the ramification report


@dataclasses.dataclass(frozen=True)
class RamificationReport:
    cover: RationalCover
    fibers: tuple  # of (below Place, tuple of RamPoint)
    different_divisor: Divisor
    branch_locus: tuple  # of below Places
    tame: bool
    checks: dict


def _different_divisor(cover):
    """Diff = div(dt/dx) + (dx) + 2 * Conorm(pole divisor of t)."""
    K = cover.field
    tp = cover.map.derivative()
    inf = Place.infinite(K)
    diff = divisor_of(tp) + Divisor(K, [(inf, -2)])
    con = Divisor(
        K, [(P, e) for P, e, _ in fiber(cover, Place.infinite(K))]
    )
    return diff + 2 * con


def ramification_report(cover):
    """Full fiber-by-fiber analysis with every structural identity checked."""
    K = cover.field
    n = cover.degree
    diff = _different_divisor(cover)

    if not (diff.is_zero() or diff.is_effective()):
        raise InternalCheckError(
            f"different divisor not effective: {diff.to_text(cover.var_up)}"
        )

    below = {}
    tp_num = cover.map.derivative().num
    candidates = [Place(K, pl) for pl, _ in polyring.factor(tp_num).factors]
    if cover.map.den.degree > 0:
        candidates += [
            Place(K, pl) for pl, _ in polyring.factor(cover.map.den).factors
        ]
    candidates.append(Place.infinite(K))
    for P in candidates:
        Q = pushforward_place(cover, P)
        below[Q] = None
    for P, _ in diff.items():
        Q = pushforward_place(cover, P)
        below[Q] = None

    fibers = []
    for Q in sorted(below, key=Place.sort_key):
        pts = tuple(
            RamPoint(
                above=P,
                below=Q,
                e=e,
                f=f,
                d=diff.coefficient(P),
                wild=e % K.p == 0,
            )
            for P, e, f in fiber(cover, Q)
        )
        fibers.append((Q, pts))

    all_points = [pt for _, pts in fibers for pt in pts]
    branch = tuple(
        Q for Q, pts in fibers if any(pt.e > 1 for pt in pts)
    )
    tame = all(not pt.wild for pt in all_points)

    checks = {}
    checks["fundamental_equality"] = all(
        sum(pt.e * pt.f for pt in pts) == n for _, pts in fibers
    )
    ok = True
    for pt in all_points:
        if pt.wild:
            ok = ok and pt.d >= pt.e
        else:
            ok = ok and pt.d == pt.e - 1
        ok = ok and ((pt.d > 0) == (pt.e > 1))
    checks["dedekind"] = ok
    checks["hurwitz"] = diff.degree() == 2 * n - 2
    if tame:
        k = sum(Q.degree for Q in branch)
        n_geo = sum(
            pt.f * Q.degree
            for Q, pts in fibers
            if Q in branch
            for pt in pts
        )
        checks["remark4"] = diff.degree() == k * n - n_geo
    else:
        checks["remark4"] = None

    failed = [name for name, ok in checks.items() if ok is False]
    if failed:
        raise InternalCheckError(
            f"structural identities failed for {cover.to_text()}: "
            + ", ".join(failed),
            payload={"checks": checks, "cover": cover.to_text()},
        )

    return RamificationReport(
        cover=cover,
        fibers=tuple(fibers),
        different_divisor=diff,
        branch_locus=branch,
        tame=tame,
        checks=checks,
    )


# ---------------------------------------------------------------------------
# composition


def compose(inner, outer):
    """The composite cover x -> y of inner x -> t and outer t -> y."""
    if inner.field != outer.field:
        raise PreconditionError("covers over different fields")
    if inner.var_down != outer.var_up:
        raise PreconditionError(
            f"variable mismatch: inner maps to {inner.var_down!r}, "
            f"outer starts from {outer.var_up!r}"
        )
    K = inner.field
    g1, h1 = inner.map.num, inner.map.den
    n2 = outer.degree

    def homogenize(poly):
        acc = Polynomial.constant(K, 0)
        for i, c in enumerate(poly.coeffs):
            if not c.is_zero():
                acc = acc + c * g1**i * h1 ** (n2 - i)
        return acc

    N = homogenize(outer.map.num)
    D = homogenize(outer.map.den)
    comp = cover_create(K, N, D, var_up=inner.var_up, var_down=outer.var_down)
    if comp.degree != inner.degree * outer.degree:
        raise InternalCheckError(
            f"composite degree {comp.degree} != "
            f"{inner.degree} * {outer.degree}"
        )
    return comp


# ---------------------------------------------------------------------------
# serialization


def report_as_dict(report):
    cov = report.cover
    up, down = cov.var_up, cov.var_down
    return {
        "field": {"p": cov.field.p, "m": cov.field.m},
        "map": {
            "num": cov.map.num.to_text(up),
            "den": cov.map.den.to_text(up),
        },
        "degree": cov.degree,
        "fibers": [
            {
                "below": Q.text(down),
                "points": [
                    {"above": pt.above.text(up), "e": pt.e, "f": pt.f, "d": pt.d}
                    for pt in pts
                ],
            }
            for Q, pts in report.fibers
        ],
        "different": [
            {"place": pl.text(up), "coeff": c}
            for pl, c in report.different_divisor.items()
        ],
        "different_degree": report.different_divisor.degree(),
        "branch_locus": [Q.text(down) for Q in report.branch_locus],
        "tame": report.tame,
        "checks": dict(report.checks),
    }
