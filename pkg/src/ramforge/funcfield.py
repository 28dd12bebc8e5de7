"""The rational function field F_q(x): places, divisors, valuations,
Laurent expansions, differentials, and genus-0 Riemann-Roch machinery.

Places of the projective line are monic irreducible polynomials plus one
infinite place.  Divisors are immutable sorted coefficient maps.  Laurent
expansions are taken in a fixed prime element per place: x - alpha at a
degree-1 finite place, 1/x at infinity, and for higher-degree places the
function is base-changed to GF(q^d) where the place splits off a canonical
(encoding-minimal) root.  Riemann-Roch spaces are written down explicitly,
which is what genus 0 buys us.
"""

import math

from . import polyring
from .config import DEFAULT_LIMITS
from .errors import ParseError, PreconditionError, SizeBoundError
from .galois import GF, FieldElement, embed
from .polyring import Polynomial

# ---------------------------------------------------------------------------
# places


class Place:
    """A closed point of the projective line: monic irreducible or infinity."""

    __slots__ = ("field", "poly")

    def __init__(self, field, poly=None):
        if poly is not None:
            if poly.field != field:
                raise PreconditionError("place polynomial over a different field")
            if not poly.is_monic():
                raise PreconditionError("place polynomial must be monic")
            if poly.degree < 1:
                raise PreconditionError("place polynomial must be nonconstant")
        self.field = field
        self.poly = poly

    @classmethod
    def infinite(cls, field):
        return cls(field, None)

    @classmethod
    def finite(cls, poly):
        if not polyring.is_irreducible(poly):
            raise PreconditionError(f"{poly} is not irreducible")
        return cls(poly.field, poly.monic())

    @classmethod
    def from_root(cls, alpha):
        """The degree-1 place x = alpha."""
        f = alpha.field
        return cls(f, Polynomial(f, [(-alpha).val, 1]))

    @property
    def is_infinite(self):
        return self.poly is None

    @property
    def degree(self):
        return 1 if self.poly is None else self.poly.degree

    def sort_key(self):
        if self.poly is None:
            return (1, 1, 0)
        return (0, self.poly.degree, self.poly.encoding())

    def text(self, var="x"):
        """Bare text form: the polynomial, or `inf`."""
        return "inf" if self.poly is None else self.poly.to_text(var)

    def pretty(self, var="x"):
        """Display form used in fiber diagrams: (x=inf), (x=3), (x^2+x+1=0)."""
        if self.poly is None:
            return f"({var}=inf)"
        if self.poly.degree == 1:
            root = -self.poly.coefficient(0)
            return f"({var}={root})"
        return f"({self.poly.to_text(var)}=0)"

    def __eq__(self, other):
        return (
            isinstance(other, Place)
            and self.field == other.field
            and self.poly == other.poly
        )

    def __hash__(self):
        return hash((self.field.p, self.field.m, self.poly))

    def __repr__(self):
        return f"Place({self.text()})"


def parse_place(text, field, var="x"):
    text = text.strip()
    if text in ("inf", "infinity", "oo"):
        return Place.infinite(field)
    poly = polyring.parse_polynomial(text, field, var)
    if poly.degree < 1:
        raise ParseError(f"{text!r} is not a place")
    return Place.finite(poly.monic())


# ---------------------------------------------------------------------------
# divisors


class Divisor:
    """An immutable finite Z-linear combination of places."""

    __slots__ = ("field", "_items")

    def __init__(self, field, items=()):
        acc = {}
        for place, n in items:
            if place.field != field:
                raise PreconditionError("place over a different field")
            if n:
                acc[place] = acc.get(place, 0) + n
        cleaned = [(pl, n) for pl, n in acc.items() if n]
        cleaned.sort(key=lambda t: t[0].sort_key())
        self.field = field
        self._items = tuple(cleaned)

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    def items(self):
        return self._items

    def support(self):
        return tuple(pl for pl, _ in self._items)

    def coefficient(self, place):
        for pl, n in self._items:
            if pl == place:
                return n
        return 0

    def degree(self):
        return sum(n * pl.degree for pl, n in self._items)

    def is_zero(self):
        return not self._items

    def is_effective(self):
        return all(n > 0 for _, n in self._items)

    def __add__(self, other):
        if not isinstance(other, Divisor) or other.field != self.field:
            return NotImplemented
        return Divisor(self.field, self._items + other._items)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Divisor(self.field, [(pl, -n) for pl, n in self._items])

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return Divisor(self.field, [(pl, k * n) for pl, n in self._items])

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, Divisor)
            and self.field == other.field
            and self._items == other._items
        )

    def __hash__(self):
        return hash((self.field.p, self.field.m, self._items))

    def __ge__(self, other):
        return (self - other).is_effective() or self == other

    def to_text(self, var="x"):
        if not self._items:
            return "0"
        parts = []
        for i, (pl, n) in enumerate(self._items):
            sign = "-" if n < 0 else "+"
            body = f"{abs(n)}*({pl.text(var)})"
            if i == 0:
                parts.append(body if n > 0 else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Divisor({self.to_text()})"


def parse_divisor(text, field, var="x"):
    """Parse `3*(x) - 1*(x+1) - 2*(inf)` back into a Divisor."""
    s = text.strip()
    if s == "0":
        return Divisor.zero(field)
    items = []
    i = 0
    sign = 1
    while i < len(s):
        ch = s[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-":
            sign = -1 if ch == "-" else 1
            i += 1
            continue
        j = i
        while j < len(s) and s[j].isdigit():
            j += 1
        if j == i:
            raise ParseError(f"expected coefficient at position {i}")
        n = int(s[i:j])
        k = j
        while k < len(s) and s[k].isspace():
            k += 1
        if k >= len(s) or s[k] != "*":
            raise ParseError(f"expected '*' at position {k}")
        k += 1
        while k < len(s) and s[k].isspace():
            k += 1
        if k >= len(s) or s[k] != "(":
            raise ParseError(f"expected '(' at position {k}")
        depth = 1
        e = k + 1
        while e < len(s) and depth:
            if s[e] == "(":
                depth += 1
            elif s[e] == ")":
                depth -= 1
            e += 1
        if depth:
            raise ParseError("unbalanced parentheses in divisor")
        items.append((parse_place(s[k + 1 : e - 1], field, var), sign * n))
        i = e
        sign = 1
    return Divisor(field, items)


# ---------------------------------------------------------------------------
# rational functions


class RationalFunction:
    """num/den with gcd cancelled and the denominator monic."""

    __slots__ = ("field", "num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, Polynomial):
            raise PreconditionError("numerator must be a Polynomial")
        field = num.field
        if den is None:
            den = Polynomial.constant(field, 1)
        if den.field != field:
            raise PreconditionError("num and den over different fields")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = num, Polynomial.constant(field, 1)
        else:
            g = polyring.gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
            lc = den.leading_coefficient
            if lc != 1:
                inv = lc.inverse()
                num, den = num * inv, den * inv
        self.field = field
        self.num = num
        self.den = den

    @classmethod
    def constant(cls, field, c):
        return cls(Polynomial.constant(field, c))

    @classmethod
    def x(cls, field):
        return cls(Polynomial.x(field))

    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.field != self.field:
                raise PreconditionError("functions over different fields")
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        if isinstance(other, (int, FieldElement)):
            return RationalFunction.constant(self.field, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RationalFunction(
            self.num * o.den + o.num * self.den, self.den * o.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o / self

    def __pow__(self, e):
        if e < 0:
            return (RationalFunction.constant(self.field, 1) / self) ** (-e)
        r = RationalFunction.constant(self.field, 1)
        base = self
        while e:
            if e & 1:
                r = r * base
            base = base * base
            e >>= 1
        return r

    def inverse(self):
        return RationalFunction.constant(self.field, 1) / self

    def derivative(self):
        n, d = self.num, self.den
        return RationalFunction(
            n.derivative() * d - n * d.derivative(), d * d
        )

    def evaluate(self, x):
        dv = self.den.evaluate(x)
        if dv.is_zero():
            raise ZeroDivisionError("evaluation at a pole")
        return self.num.evaluate(x) * dv.inverse()

    def degree_map(self):
        """Degree as a map of the projective line: max(deg num, deg den)."""
        return max(self.num.degree, self.den.degree)

    def __eq__(self, other):
        if isinstance(other, (int, FieldElement, Polynomial)):
            other = self._coerce(other)
        return (
            isinstance(other, RationalFunction)
            and self.field == other.field
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.field.p, self.field.m, self.num, self.den))

    def __bool__(self):
        return not self.num.is_zero()

    def to_text(self, var="x"):
        nt = self.num.to_text(var)
        if self.den.degree < 1:
            return nt
        if len([c for c in self.num._c if c]) > 1:
            nt = f"({nt})"
        dt = self.den.to_text(var)
        if len([c for c in self.den._c if c]) > 1:
            dt = f"({dt})"
        return f"{nt}/{dt}"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"RationalFunction({self.to_text()!r} over {self.field!r})"


def rf_normalize(num, den):
    """Public constructor name for RationalFunction(num, den)."""
    return RationalFunction(num, den)


def parse_rational(text, field, var="x"):
    """Parse `num/den` (either side a polynomial expression)."""
    depth = 0
    slash = None
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            if slash is not None:
                raise ParseError("more than one top-level '/'")
            slash = i
    if slash is None:
        return RationalFunction(polyring.parse_polynomial(text, field, var))
    num = polyring.parse_polynomial(text[:slash], field, var)
    den = polyring.parse_polynomial(text[slash + 1 :], field, var)
    if den.is_zero():
        raise ParseError("zero denominator")
    return RationalFunction(num, den)


# ---------------------------------------------------------------------------
# valuations and divisors of functions


def _poly_valuation(f, p):
    """Multiplicity of the monic irreducible p in the polynomial f."""
    if f.is_zero():
        return math.inf
    v = 0
    while True:
        q, r = divmod(f, p)
        if not r.is_zero():
            return v
        v += 1
        f = q


def valuation(f, place):
    if f.is_zero():
        return math.inf
    if place.is_infinite:
        return f.den.degree - f.num.degree
    vn = _poly_valuation(f.num, place.poly)
    if vn:
        return vn
    return -_poly_valuation(f.den, place.poly)


def divisor_of(f):
    if f.is_zero():
        raise PreconditionError("the zero function has no divisor")
    K = f.field
    items = []
    for g, e in polyring.factor(f.num).factors:
        items.append((Place(K, g), e))
    for g, e in polyring.factor(f.den).factors:
        items.append((Place(K, g), -e))
    v_inf = f.den.degree - f.num.degree
    if v_inf:
        items.append((Place.infinite(K), v_inf))
    return Divisor(K, items)


def zero_divisor_of(f):
    d = divisor_of(f)
    return Divisor(f.field, [(pl, n) for pl, n in d.items() if n > 0])


def pole_divisor_of(f):
    d = divisor_of(f)
    return Divisor(f.field, [(pl, -n) for pl, n in d.items() if n < 0])


# ---------------------------------------------------------------------------
# Laurent expansion


class LaurentSeries:
    """Finitely many exact terms of a Laurent expansion at a place.

    Exponents run from `start` (the valuation) for `precision` terms;
    coefficients live in the residue field of the place.
    """

    __slots__ = ("place", "start", "coeffs", "coeff_field")

    def __init__(self, place, start, coeffs, coeff_field):
        self.place = place
        self.start = start
        self.coeffs = tuple(coeffs)
        self.coeff_field = coeff_field

    @property
    def precision(self):
        return len(self.coeffs)

    def coefficient(self, k):
        i = k - self.start
        if i < 0:
            return self.coeff_field.element(0)
        if i >= len(self.coeffs):
            raise PreconditionError(f"exponent {k} beyond precision")
        return self.coeffs[i]

    def terms(self):
        return [
            (self.start + i, c)
            for i, c in enumerate(self.coeffs)
            if not c.is_zero()
        ]

    def is_zero(self):
        return not self.terms()

    def to_text(self, var="u"):
        terms = self.terms()
        if not terms:
            return "0"
        parts = []
        for k, c in terms:
            ct = str(c)
            if "+" in ct:
                ct = f"({ct})"
            if k == 0:
                parts.append(ct)
                continue
            xp = var if k == 1 else f"{var}^{k}"
            parts.append(xp if c == 1 else f"{ct}*{xp}")
        return "+".join(parts)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"LaurentSeries({self.to_text()!r} start={self.start})"


def _series_quotient(K, num, den, prec):
    """Laurent coefficients of num/den in the local parameter u.

    num and den are raw ascending coefficient lists over K, den != 0.
    Returns (start, coeffs list of raw values, length prec).
    """
    a = 0
    while a < len(num) and num[a] == 0:
        a += 1
    if a == len(num):
        return 0, [0] * prec
    b = 0
    while den[b] == 0:
        b += 1
    n = num[a:]
    d = den[b:]
    inv0 = K.inv_raw(d[0])
    inv = [inv0]
    for k in range(1, prec):
        s = 0
        for j in range(1, min(k, len(d) - 1) + 1):
            s = K.add_raw(s, K.mul_raw(d[j], inv[k - j]))
        inv.append(K.mul_raw(K.neg_raw(s), inv0))
    out = []
    for k in range(prec):
        s = 0
        for j in range(min(k, len(n) - 1) + 1):
            s = K.add_raw(s, K.mul_raw(n[j], inv[k - j]))
        out.append(s)
    return a - b, out


def default_precision(f, limits=DEFAULT_LIMITS):
    return 2 * max(f.num.degree, f.den.degree, 1) + limits.laurent_margin


def laurent_expand(f, place, precision=None):
    """Expand f at a place in the canonical prime element.

    Degree-1 finite place with root alpha: parameter x - alpha.  Infinite
    place: parameter 1/x.  Degree d > 1: the function is base-changed to
    GF(q^d), where the place acquires the encoding-minimal root alpha, and
    the parameter is x - alpha; coefficients then live in GF(q^d).
    """
    if f.is_zero():
        raise PreconditionError("cannot expand the zero function")
    if precision is None:
        precision = default_precision(f)
    if precision < 1:
        raise PreconditionError("precision must be positive")
    K = f.field
    if place.is_infinite:
        num = list(reversed(f.num._c))
        den = list(reversed(f.den._c))
        pad = f.den.degree - f.num.degree
        if pad > 0:
            num = [0] * pad + num
        elif pad < 0:
            den = [0] * (-pad) + den
        start, raw = _series_quotient(K, num, den, precision)
        coeffs = [FieldElement(K, v) for v in raw]
        return LaurentSeries(place, start, coeffs, K)
    d = place.degree
    if d == 1:
        alpha = -place.poly.coefficient(0)
        num = f.num.shift(alpha)
        den = f.den.shift(alpha)
        start, raw = _series_quotient(K, list(num._c), list(den._c), precision)
        coeffs = [FieldElement(K, v) for v in raw]
        return LaurentSeries(place, start, coeffs, K)
    E = GF(K.p, K.m * d)
    lift_num = Polynomial(E, [embed(K, E, c) for c in f.num.coeffs])
    lift_den = Polynomial(E, [embed(K, E, c) for c in f.den.coeffs])
    lift_pl = Polynomial(E, [embed(K, E, c) for c in place.poly.coeffs])
    rts = polyring.roots(lift_pl)
    if not rts:
        raise PreconditionError("place polynomial has no root after base change")
    alpha = rts[0]
    num = lift_num.shift(alpha)
    den = lift_den.shift(alpha)
    start, raw = _series_quotient(E, list(num._c), list(den._c), precision)
    coeffs = [FieldElement(E, v) for v in raw]
    return LaurentSeries(place, start, coeffs, E)


def uniformizer_text(place, var="x"):
    if place.is_infinite:
        return f"1/{var}"
    if place.degree == 1:
        return place.poly.to_text(var)
    return (
        f"{var}-alpha, alpha the canonical root of {place.poly.to_text(var)} "
        f"in GF({place.field.q}^{place.degree})"
    )


# ---------------------------------------------------------------------------
# differentials and p-th powers


def differential_divisor(f):
    """Divisor of the differential df = f' dx; degree is always -2."""
    fp = f.derivative()
    if fp.is_zero():
        raise PreconditionError(
            "df = 0: the function is a p-th power and does not separate"
        )
    K = f.field
    d = divisor_of(fp) + Divisor(K, [(Place.infinite(K), -2)])
    if d.degree() != -2:
        raise AssertionError("canonical degree violated")  # pragma: no cover
    return d


def pth_power_test(f):
    """Return the p-th root of f when f lies in F^p, else None."""
    if f.is_zero():
        return RationalFunction.constant(f.field, 0)
    K = f.field
    p = K.p

    def root_of(poly):
        if poly.degree % p:
            return None
        out = []
        for i in range(0, len(poly._c), p):
            for j in range(1, p):
                if i + j < len(poly._c) and poly._c[i + j]:
                    return None
            out.append(K.pth_root_raw(poly._c[i]))
        # powers between stored blocks already checked; rebuild and verify
        return Polynomial(K, out)

    rn = root_of(f.num)
    rd = root_of(f.den)
    if rn is None or rd is None:
        return None
    g = RationalFunction(rn, rd)
    if g**p == f:
        return g
    return None


# ---------------------------------------------------------------------------
# genus-0 Riemann-Roch


def rr_basis(D):
    """A basis of L(D) = {f : (f) + D >= 0} for the genus-0 field F_q(x).

    Shape: required * x^i / h_pos, where h_pos collects allowed finite
    poles, required forces prescribed zeros, and i sweeps the range allowed
    at infinity.  Length is max(0, deg D + 1).
    """
    K = D.field
    h_pos = Polynomial.constant(K, 1)
    required = Polynomial.constant(K, 1)
    n_inf = 0
    for pl, n in D.items():
        if pl.is_infinite:
            n_inf = n
        elif n > 0:
            h_pos = h_pos * pl.poly**n
        else:
            required = required * pl.poly ** (-n)
    top = h_pos.degree + n_inf
    out = []
    i = 0
    while required.degree + i <= top:
        out.append(
            RationalFunction(required * Polynomial.monomial(K, i), h_pos)
        )
        i += 1
    return out


def _nonvanishing_at(f, place):
    """Whether v_place(f) == 0 given that v_place(f) >= 0 structurally."""
    return valuation(f, place) == 0


def prescribed_element(
    D, P, n=None, avoid=(), zero_at=None, search_limit=65536
):
    """An f with (f)_0 >= D, pole divisor exactly n*P, v_R(f) = 0 on avoid.

    zero_at = (Q, k) additionally forces v_Q(f) >= k.  With n=None the
    least feasible pole order is found by upward sweep.  Candidates are
    combinations of the Riemann-Roch basis of n*P - D - k*Q, enumerated
    deterministically with the highest basis elements varying first; the
    search is exhaustive whenever q^dim <= search_limit, so a failure in
    that regime is a proof of infeasibility.
    """
    K = D.field
    if not D.is_zero() and not D.is_effective():
        raise PreconditionError("D must be effective")
    if D.coefficient(P):
        raise PreconditionError("P must avoid the support of D")
    for R in avoid:
        if R == P or D.coefficient(R):
            raise PreconditionError("avoid places must differ from P and supp(D)")
    kq = Divisor.zero(K)
    if zero_at is not None:
        Q, k = zero_at
        if Q == P or k < 1:
            raise PreconditionError("zero_at place must differ from P, order >= 1")
        kq = Divisor(K, [(Q, k)])
    need = D.degree() + kq.degree()
    if n is None:
        n0 = max(D.degree(), -(-need // P.degree), 0)
        last_err = None
        for cand_n in range(n0, n0 + 65):
            try:
                return prescribed_element(
                    D, P, cand_n, avoid, zero_at, search_limit
                )
            except (PreconditionError, SizeBoundError) as e:
                last_err = e
        raise SizeBoundError(
            f"no feasible pole order found in [{n0}, {n0 + 64}]: {last_err}"
        )
    if n < D.degree():
        raise PreconditionError(f"pole order n={n} below deg D = {D.degree()}")
    E = Divisor(K, [(P, n)]) - D - kq
    if E.degree() < 0:
        raise PreconditionError(
            f"n*deg(P) = {n * P.degree} cannot dominate deg D + zeros = {need}"
        )
    basis = rr_basis(E)
    if not basis:
        raise PreconditionError("empty Riemann-Roch space")
    if all(valuation(b, P) > -n for b in basis):
        raise PreconditionError(
            f"every candidate has pole order below {n} at {P.text()}"
        )
    for R in avoid:
        if all(valuation(b, R) > 0 for b in basis):
            raise PreconditionError(
                f"every candidate vanishes at {R.text()}"
            )
    dim = len(basis)
    q = K.q
    total = q**dim
    exhaustive = total <= search_limit
    limit = total if exhaustive else search_limit + 1
    for idx in range(1, limit):
        # digits of idx, highest basis elements first
        f = None
        v = idx
        pos = dim - 1
        while v:
            c = v % q
            if c:
                term = basis[pos] * FieldElement(K, c)
                f = term if f is None else f + term
            v //= q
            pos -= 1
        if valuation(f, P) != -n:
            continue
        if any(not _nonvanishing_at(f, R) for R in avoid):
            continue
        return f
    if exhaustive:
        raise PreconditionError(
            "constraint system is infeasible: exhaustive search over "
            f"{total - 1} candidates found no element"
        )
    raise SizeBoundError(
        f"search budget {search_limit} exhausted over a space of size {total}"
    )
