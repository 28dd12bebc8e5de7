"""Characteristic-2 pseudo-tameness toolkit on the rational field F_{2^m}(w).

An element x is pseudo-tame at a place P when x + z^4 is tame at P for
some z.  The working criterion is local: every non-vanishing Laurent
exponent below v_P(dx) + 1 must be divisible by 4.  Around that sit the
quartic decomposition x = x0^4 + x1^4 y + x2^4 y^2 + x3^4 y^3, the
obstruction invariant a(x, y), its cocycle identity, and the two
constructive lemmas (square completion at a place, quartic pole
reduction) -- all exact, all verified on the way out.

The quartic decomposition is computed by splitting twice along
F = F^2 + F^2 y (no linear algebra needed); squares are recognized by a
vanishing derivative, which over a perfect constant field is exact.
"""

import dataclasses
import math

from . import polyring
from .errors import InternalCheckError, PreconditionError
from .funcfield import (
    Place,
    RationalFunction,
    laurent_expand,
    pole_divisor_of,
    valuation,
)
from .galois import FieldElement
from .polyring import Polynomial


def _require_char2(field):
    if field.p != 2:
        raise PreconditionError("this toolkit requires characteristic 2")


def _is_square(f):
    """f in F^2, i.e. df/dw = 0 (char 2, perfect constants)."""
    return f.derivative().is_zero()


def _sqrt_poly(poly):
    """Exact square root of a polynomial lying in F[w^2]."""
    K = poly.field
    out = []
    for i in range(0, len(poly._c), 2):
        out.append(K.pth_root_raw(poly._c[i]))
    return Polynomial(K, out)


def _even_odd_split(x):
    """x = A^2 + B^2 * w: the coordinates of x in the F^2-basis {1, w}."""
    K = x.field
    N = x.num * x.den
    even = [0] * ((len(N._c) + 1) // 2)
    odd = [0] * (len(N._c) // 2)
    for k, c in enumerate(N._c):
        if k % 2 == 0:
            even[k // 2] = c
        else:
            odd[(k - 1) // 2] = c
    A = Polynomial(K, [K.pth_root_raw(c) for c in even])
    B = Polynomial(K, [K.pth_root_raw(c) for c in odd])
    return RationalFunction(A, x.den), RationalFunction(B, x.den)


def _split_wrt(x, y):
    """x = s^2 + r^2 * y for y not a square: returns (s, r).

    Uses the w-split of both x and y: with y = c^2 + e^2 w (e != 0),
    w = (y + c^2)/e^2, and substitution gives the closed form.
    """
    A, B = _even_odd_split(x)
    c, e = _even_odd_split(y)
    if e.is_zero():
        raise PreconditionError("y is a square; {1, y} does not split F")
    r = B / e
    s = A + r * c
    return s, r


@dataclasses.dataclass(frozen=True)
class QuarticDecomposition:
    x: RationalFunction
    y: RationalFunction
    coords: tuple  # (x0, x1, x2, x3)

    def expand(self):
        x0, x1, x2, x3 = self.coords
        y = self.y
        return x0**4 + x1**4 * y + x2**4 * y**2 + x3**4 * y**3


def quartic_decompose(x, y):
    """The unique x0..x3 with x = x0^4 + x1^4 y + x2^4 y^2 + x3^4 y^3."""
    _require_char2(x.field)
    if x.field != y.field:
        raise PreconditionError("x and y over different fields")
    if _is_square(y):
        raise PreconditionError("y must not be a square")
    s, r = _split_wrt(x, y)
    x0, x2 = _split_wrt(s, y)
    x1, x3 = _split_wrt(r, y)
    dec = QuarticDecomposition(x=x, y=y, coords=(x0, x1, x2, x3))
    if dec.expand() != x:
        raise InternalCheckError("quartic decomposition failed to re-expand")
    return dec


def a_invariant(x, y):
    """a(x, y) = ((x1^2 x3^2 + x2^4) y) / (x3^4 y^2 + x1^4)."""
    _require_char2(x.field)
    if _is_square(x) or _is_square(y):
        raise PreconditionError("x and y must both be non-squares")
    _, x1, x2, x3 = quartic_decompose(x, y).coords
    den = x3**4 * y**2 + x1**4
    if den.is_zero():  # pragma: no cover
        raise InternalCheckError("a(x, y) denominator vanished for non-square x")
    return ((x1 * x3) ** 2 + x2**4) * y / den


def verify_a_solution(x, y, a):
    """Whether a agrees with a(x, y) modulo squares."""
    from .funcfield import pth_power_test

    return pth_power_test(a_invariant(x, y) + a) is not None


def cocycle_defect(x, y, t):
    """a(x,y) + a(y,t) + a(t,x); always a square (that is the identity)."""
    return a_invariant(x, y) + a_invariant(y, t) + a_invariant(t, x)


# ---------------------------------------------------------------------------
# local tameness and pseudo-tameness


def v_dx(x, P):
    """Valuation of the differential dx at P (dw carries -2 at infinity)."""
    xp = x.derivative()
    if xp.is_zero():
        raise PreconditionError("dx = 0: x is a square")
    v = valuation(xp, P)
    return v - 2 if P.is_infinite else v


def _series_terms(x, P, upto):
    """Laurent terms (exponent, coeff) of x at P, exact for exponents < upto."""
    start = valuation(x, P)
    prec = max(upto - start, 1)
    return laurent_expand(x, P, prec).terms()


def element_is_tame_at(x, P):
    """Tame at P: the leading nonconstant exponent of x at P is odd."""
    if x.derivative().is_zero():
        return False
    bound = v_dx(x, P) + 2
    for k, _ in _series_terms(x, P, bound):
        if k != 0:
            return k % 2 == 1
    return False  # pragma: no cover


def is_pseudotame_at(x, P):
    """Every nonzero exponent below v_P(dx) + 1 is divisible by 4."""
    _require_char2(x.field)
    if x.derivative().is_zero():
        raise PreconditionError("x is a square; pseudo-tameness is undefined")
    bound = v_dx(x, P) + 1
    for k, _ in _series_terms(x, P, bound):
        if k < bound and k % 4 != 0:
            return False
    return True


def critical_places(x):
    """Places where pseudo-tameness is not automatic.

    Everywhere else v_P(dx) = 0 and x is regular, so the criterion holds
    trivially; the sweep covers the poles of x, the zeros of dx/dw, and
    the infinite place.
    """
    K = x.field
    places = {Place.infinite(K)}
    for P, _ in pole_divisor_of(x).items():
        places.add(P)
    xp = x.derivative()
    if not xp.is_zero():
        for g, _ in polyring.factor(xp.num).factors:
            places.add(Place(K, g))
    return sorted(places, key=Place.sort_key)


def is_pseudotame_everywhere(x):
    return all(is_pseudotame_at(x, P) for P in critical_places(x))


def apply_quartic_moebius(x, a, b, c, d):
    """(a^4 x + b^4) / (c^4 x + d^4); requires ad + bc != 0."""
    K = x.field
    _require_char2(K)

    def rf(v):
        if isinstance(v, RationalFunction):
            return v
        if isinstance(v, Polynomial):
            return RationalFunction(v)
        return RationalFunction.constant(K, v)

    a, b, c, d = rf(a), rf(b), rf(c), rf(d)
    if (a * d - b * c).is_zero():
        raise PreconditionError("singular quartic Moebius transform")
    den = c**4 * x + d**4
    if den.is_zero():
        raise PreconditionError("transform maps x to infinity identically")
    return (a**4 * x + b**4) / den


# ---------------------------------------------------------------------------
# constructive lemmas


def _place_stream(field, forbidden):
    """Canonical inexhaustible stream of places: degree-1 finite by
    encoding, then infinity, then higher degrees by encoding."""
    for v in range(field.q):
        P = Place.from_root(field.element(v))
        if P not in forbidden:
            yield P
    inf = Place.infinite(field)
    if inf not in forbidden:
        yield inf
    d = 2
    while True:
        base = field.q**d
        for j in range(base):
            f = Polynomial(
                field,
                _digits(field, base + j),
            )
            if polyring.is_irreducible(f):
                P = Place(field, f)
                if P not in forbidden:
                    yield P
        d += 1


def _digits(field, k):
    out = []
    while k:
        out.append(k % field.q)
        k //= field.q
    return out


def _sqrt_const(c):
    return c.pth_root()


def _fourth_root_const(c):
    return c.pth_root().pth_root()


def _exact_order_element(basis, P, n):
    for b in basis:
        if valuation(b, P) == n:
            return b
    return None  # pragma: no cover


def square_completion(x, P, Q, pole_budget=None):
    """A z with simple poles, v_Q(z) >= 0, and x + z^2 tame at P.

    The loop reads the leading nonconstant Laurent exponent j of the
    running element at P.  Odd j means tame: a nonzero constant works.
    Even j = 2n is cancelled by a multiple of an element with valuation
    exactly n at P and simple poles inside a growing reservoir R of
    places away from P and Q; squares only touch even exponents, so the
    first odd exponent v_P(dx)+1 is an immovable finish line.
    """
    from .funcfield import Divisor, rr_basis

    K = x.field
    _require_char2(K)
    if _is_square(x):
        raise PreconditionError("x is a square; no odd exponent to finish at")
    if P == Q:
        raise PreconditionError("P and Q must differ")
    if P.degree > 1 and not P.is_infinite:
        raise PreconditionError(
            "square completion supports degree-1 and infinite places"
        )
    if valuation(x, P) < 0 or valuation(x, Q) < 0:
        raise PreconditionError("P and Q must avoid the poles of x")
    j_odd = v_dx(x, P) + 1
    n_max = max((j_odd - 1) // 2, 0)
    if pole_budget is None:
        pole_budget = max(x.num.degree, x.den.degree) + 4
    if pole_budget < n_max:
        raise PreconditionError(
            f"pole_budget {pole_budget} insufficient: the Riemann-Roch step "
            f"may need pole room {n_max}"
        )

    stream = _place_stream(K, {P, Q})
    reservoir = []

    def reservoir_divisor(min_degree):
        while sum(pl.degree for pl in reservoir) < min_degree:
            reservoir.append(next(stream))
        return Divisor(K, [(pl, 1) for pl in reservoir])

    one = RationalFunction.constant(K, 1)
    z = RationalFunction.constant(K, 0)
    for _ in range(n_max + 2):
        cur = x + z * z
        j = None
        coeff = None
        for k, c in _series_terms(cur, P, j_odd + 1):
            if k != 0:
                j, coeff = k, c
                break
        if j is None:  # pragma: no cover
            raise InternalCheckError("ran out of Laurent terms before dx+1")
        if j % 2 == 1:
            result = z if not z.is_zero() else one
            if not element_is_tame_at(x + result * result, P):
                raise InternalCheckError("square completion output not tame")
            return result
        n = j // 2
        R = reservoir_divisor(n)
        z0 = _exact_order_element(rr_basis(R - Divisor(K, [(P, n)])), P, n)
        if z0 is None:  # pragma: no cover
            raise InternalCheckError("no exact-order element in L(R - nP)")
        b = laurent_expand(z0, P, 1).coeffs[0]
        z = z + z0 * (_sqrt_const(coeff) / b)
    raise InternalCheckError("square completion failed to terminate")


def quartic_pole_reduction(x, Q):
    """Strip the multiple-of-4 pole orders of x at its single pole Q.

    Returns (z, reduced) with reduced = x + z^4, poles of z only at Q,
    and -v_Q(reduced) = -v_Q(dx) - 1 exactly (so reduced is tame at Q).
    """
    K = x.field
    _require_char2(K)
    if _is_square(x):
        raise PreconditionError("x is a square")
    poles = pole_divisor_of(x).support()
    if any(pl != Q for pl in poles):
        raise PreconditionError("x must have poles only at Q")
    if Q.degree > 1 and not Q.is_infinite:
        raise PreconditionError(
            "quartic pole reduction supports degree-1 and infinite places"
        )
    if not is_pseudotame_at(x, Q):
        raise PreconditionError("x is not pseudo-tame at Q")

    if Q.is_infinite:
        base = RationalFunction(Polynomial.x(K))
    else:
        root = -Q.poly.coefficient(0)
        base = RationalFunction.constant(K, 1) / RationalFunction(
            Polynomial(K, [(-root).val, 1])
        )
    z = RationalFunction.constant(K, 0)
    cur = x
    while True:
        v = valuation(cur, Q)
        if v is math.inf or v >= 0 or v % 4 != 0:
            break
        k = -v // 4
        lead = laurent_expand(cur, Q, 1).coeffs[0]
        step = base**k * _fourth_root_const(lead)
        z = z + step
        nxt = cur + step**4
        if not (valuation(nxt, Q) > v):  # pragma: no cover
            raise InternalCheckError("pole reduction made no progress")
        cur = nxt
    target = -v_dx(x, Q) - 1
    if -valuation(cur, Q) != target:
        raise InternalCheckError(
            f"reduced pole order {-valuation(cur, Q)} != target {target}"
        )
    if not element_is_tame_at(cur, Q):
        raise InternalCheckError("reduced element is not tame at Q")
    return z, cur


def regular_mod_squares(a, P):
    """An a-tilde = a + s^2 regular at P, when the pole part allows it.

    The pole part of a at P must contain only even exponents; each is
    removed exactly by the square of sqrt(c) * u^(k/2) in the canonical
    prime element u.  Odd pole exponents survive modulo squares: None.
    """
    K = a.field
    _require_char2(K)
    if P.degree > 1 and not P.is_infinite:
        raise PreconditionError(
            "regular_mod_squares supports degree-1 and infinite places"
        )
    if a.is_zero() or valuation(a, P) >= 0:
        return a
    if P.is_infinite:
        u = RationalFunction.constant(K, 1) / RationalFunction(Polynomial.x(K))
    else:
        u = RationalFunction(P.poly)
    s = RationalFunction.constant(K, 0)
    for k, c in _series_terms(a, P, 0):
        if k >= 0:
            break
        if k % 2 == 1:
            return None
        s = s + u ** (k // 2) * _sqrt_const(c)
    out = a + s * s
    if valuation(out, P) < 0:  # pragma: no cover
        raise InternalCheckError("square subtraction left a pole behind")
    return out
