"""Dense univariate polynomials over a finite field, with full factorization.

Coefficients are stored ascending as raw integer encodings (see galois);
the zero polynomial has an empty coefficient tuple.  Every routine here is
deterministic: equal-degree splitting walks candidate polynomials in the
integer-encoding order instead of sampling, so factor lists come out the
same on every run and platform.  Irreducible factors are reported monic and
sorted by (degree, encoding).

The factor chain is classical: squarefree decomposition (with p-th root
extraction when the derivative vanishes), then distinct-degree splitting by
Frobenius powers, then equal-degree splitting; characteristic 2 splits with
the absolute trace map x + x**2 + ... + x**(2**(k*d-1)), odd characteristic
with (q**d - 1)/2 powers.
"""

import dataclasses

from .errors import ParseError, PreconditionError
from .galois import FieldElement

# ---------------------------------------------------------------------------
# raw kernels: coefficient lists of integer encodings, ascending, trimmed


def _trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _add(K, a, b):
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out[i] = K.add_raw(x, y)
    return _trim(out)


def _sub(K, a, b):
    return _add(K, a, [K.neg_raw(y) for y in b])


def _mul(K, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    mul, add = K.mul_raw, K.add_raw
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add(out[i + j], mul(x, y))
    return _trim(out)


def _scalar(K, a, s):
    if s == 0:
        return []
    return _trim([K.mul_raw(c, s) for c in a])


def _divmod(K, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db, dl = len(b) - 1, b[-1]
    inv = K.inv_raw(dl)
    q = [0] * max(0, len(a) - db)
    while len(a) - 1 >= db and a:
        k = len(a) - 1 - db
        c = K.mul_raw(a[-1], inv)
        q[k] = c
        for i, y in enumerate(b):
            if y:
                a[k + i] = K.sub_raw(a[k + i], K.mul_raw(c, y))
        _trim(a)
    return _trim(q), a


def _mod(K, a, b):
    return _divmod(K, a, b)[1]


def _monic(K, a):
    if not a:
        return [], 1
    lc = a[-1]
    if lc == 1:
        return list(a), 1
    inv = K.inv_raw(lc)
    return [K.mul_raw(c, inv) for c in a], lc


def _gcd(K, a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, _mod(K, a, b)
    return _monic(K, a)[0]


def _ext_gcd(K, a, b):
    """(g, s, t) with s*a + t*b = g, g the monic gcd."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _divmod(K, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _sub(K, s0, _mul(K, q, s1))
        t0, t1 = t1, _sub(K, t0, _mul(K, q, t1))
    if not r0:
        return [], s0, t0
    lc = r0[-1]
    if lc != 1:
        inv = K.inv_raw(lc)
        r0 = [K.mul_raw(c, inv) for c in r0]
        s0 = [K.mul_raw(c, inv) for c in s0]
        t0 = [K.mul_raw(c, inv) for c in t0]
    return r0, s0, t0


def _derivative(K, a):
    out = []
    for i in range(1, len(a)):
        out.append(K.mul_raw(a[i], i % K.p))
    return _trim(out)


def _eval(K, a, x):
    acc = 0
    for c in reversed(a):
        acc = K.add_raw(K.mul_raw(acc, x), c)
    return acc


def _frob_mod(K, h, f):
    """h**p mod f, via the additivity of x -> x**p."""
    if not h:
        return []
    spread = [0] * ((len(h) - 1) * K.p + 1)
    for i, c in enumerate(h):
        if c:
            spread[i * K.p] = K.frobenius_raw(c)
    return _mod(K, spread, f)


def _frob_q_mod(K, h, f):
    for _ in range(K.m):
        h = _frob_mod(K, h, f)
    return h


def _powmod(K, a, e, f):
    r = [1]
    base = _mod(K, a, f)
    while e:
        if e & 1:
            r = _mod(K, _mul(K, r, base), f)
        base = _mod(K, _mul(K, base, base), f)
        e >>= 1
    return r


def _pth_root_poly(K, a):
    """The p-th root of a polynomial lying in F[x**p]."""
    out = []
    for i in range(0, len(a), K.p):
        out.append(K.pth_root_raw(a[i]))
    return _trim(out)


def _decode(K, k):
    digits = []
    while k:
        digits.append(k % K.q)
        k //= K.q
    return digits


def _encode(K, a):
    v = 0
    for c in reversed(a):
        v = v * K.q + c
    return v


# ---------------------------------------------------------------------------


class Polynomial:
    """A dense univariate polynomial over a fixed finite field."""

    __slots__ = ("field", "_c")

    def __init__(self, field, coeffs=()):
        raw = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.field != field:
                    raise PreconditionError("coefficient from a different field")
                raw.append(c.val)
            else:
                raw.append(field.element(c).val)
        _trim(raw)
        self.field = field
        self._c = tuple(raw)

    @classmethod
    def _raw(cls, field, coeffs):
        p = cls.__new__(cls)
        p.field = field
        p._c = tuple(coeffs)
        return p

    @classmethod
    def x(cls, field):
        return cls._raw(field, (0, 1))

    @classmethod
    def constant(cls, field, c):
        v = field.element(c).val
        return cls._raw(field, (v,) if v else ())

    @classmethod
    def monomial(cls, field, k, c=1):
        v = field.element(c).val
        if v == 0:
            return cls._raw(field, ())
        return cls._raw(field, (0,) * k + (v,))

    # -- inspection ----------------------------------------------------

    @property
    def coeffs(self):
        return tuple(FieldElement(self.field, v) for v in self._c)

    def coefficient(self, i):
        v = self._c[i] if 0 <= i < len(self._c) else 0
        return FieldElement(self.field, v)

    @property
    def degree(self):
        return len(self._c) - 1

    def is_zero(self):
        return not self._c

    def is_constant(self):
        return len(self._c) <= 1

    def is_monic(self):
        return bool(self._c) and self._c[-1] == 1

    @property
    def leading_coefficient(self):
        if not self._c:
            return FieldElement(self.field, 0)
        return FieldElement(self.field, self._c[-1])

    def encoding(self):
        """Integer key sum(raw_i * q**i); the canonical ordering of polynomials."""
        return _encode(self.field, self._c)

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.field != self.field:
                raise PreconditionError("polynomials over different fields")
            return other
        if isinstance(other, (int, FieldElement)):
            return Polynomial.constant(self.field, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Polynomial._raw(self.field, _add(self.field, self._c, o._c))

    __radd__ = __add__

    def __neg__(self):
        K = self.field
        return Polynomial._raw(K, [K.neg_raw(c) for c in self._c])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Polynomial._raw(self.field, _sub(self.field, self._c, o._c))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Polynomial._raw(self.field, _mul(self.field, self._c, o._c))

    __rmul__ = __mul__

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        q, r = _divmod(self.field, self._c, o._c)
        return Polynomial._raw(self.field, q), Polynomial._raw(self.field, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e):
        if e < 0:
            raise PreconditionError("negative polynomial power")
        r = Polynomial.constant(self.field, 1)
        base = self
        while e:
            if e & 1:
                r = r * base
            base = base * base
            e >>= 1
        return r

    def monic(self):
        return Polynomial._raw(self.field, _monic(self.field, self._c)[0])

    def derivative(self):
        return Polynomial._raw(self.field, _derivative(self.field, self._c))

    def evaluate(self, x):
        x = self.field.element(x)
        return FieldElement(self.field, _eval(self.field, self._c, x.val))

    def compose(self, other):
        """self(other), by Horner."""
        o = self._coerce(other)
        acc = Polynomial._raw(self.field, ())
        for c in reversed(self._c):
            acc = acc * o + Polynomial._raw(self.field, (c,) if c else ())
        return acc

    def shift(self, alpha):
        """self(x + alpha)."""
        a = self.field.element(alpha)
        return self.compose(Polynomial._raw(self.field, (a.val, 1)))

    def reversed(self):
        """Coefficients reversed: x**deg * self(1/x)."""
        return Polynomial._raw(self.field, _trim(list(reversed(self._c))))

    # -- misc -----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.field == other.field
            and self._c == other._c
        )

    def __hash__(self):
        return hash((self.field.p, self.field.m, self._c))

    def __bool__(self):
        return bool(self._c)

    def to_text(self, var="T"):
        return format_polynomial(self, var)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Polynomial({self.to_text()!r} over {self.field!r})"


# ---------------------------------------------------------------------------
# factorization


@dataclasses.dataclass(frozen=True)
class Factorization:
    unit: FieldElement
    factors: tuple  # of (Polynomial, int), monic, sorted by (degree, encoding)

    def expand(self):
        field = self.unit.field
        out = Polynomial.constant(field, self.unit)
        for g, e in self.factors:
            out = out * g**e
        return out

    def __iter__(self):
        return iter(self.factors)


def gcd(a, b):
    if a.field != b.field:
        raise PreconditionError("polynomials over different fields")
    return Polynomial._raw(a.field, _gcd(a.field, a._c, b._c))


def squarefree_decompose(f):
    """Pairwise-coprime squarefree parts: f = lc * prod(g_i ** m_i).

    Parts are monic, merged when multiplicities collide, and sorted by
    (degree, encoding).
    """
    if f.is_zero():
        raise PreconditionError("cannot decompose the zero polynomial")
    K = f.field
    found = {}

    def emit(part, mult):
        if len(part) - 1 > 0:
            cur = found.get(mult)
            found[mult] = _mul(K, cur, part) if cur else part

    def rec(a, scale):
        if len(a) - 1 <= 0:
            return
        d = _derivative(K, a)
        if not d:
            rec(_pth_root_poly(K, a), scale * K.p)
            return
        c = _gcd(K, a, d)
        w = _divmod(K, a, c)[0]
        i = 1
        while len(w) - 1 > 0:
            y = _gcd(K, w, c)
            z = _divmod(K, w, y)[0]
            emit(z, i * scale)
            i += 1
            w = y
            c = _divmod(K, c, y)[0]
        if len(c) - 1 > 0:
            rec(_pth_root_poly(K, c), scale * K.p)

    rec(_monic(K, f._c)[0], 1)
    out = [(Polynomial._raw(K, part), mult) for mult, part in found.items()]
    out.sort(key=lambda t: (t[0].degree, t[0].encoding()))
    return out


def _ddf(K, f):
    """Distinct-degree split of a monic squarefree f: list of (product, d)."""
    out = []
    x = [0, 1]
    h = _mod(K, x, f)
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = _frob_q_mod(K, h, f)
        g = _gcd(K, _sub(K, h, x), f)
        if len(g) - 1 > 0:
            out.append((g, d))
            f = _divmod(K, f, g)[0]
            h = _mod(K, h, f)
    if len(f) - 1 > 0:
        out.append((f, len(f) - 1))
    return out


def _try_split(K, part, cand, d):
    """One deterministic split attempt; returns a proper monic factor or None."""
    c = _mod(K, cand, part)
    g = _gcd(K, c, part)
    if 0 < len(g) - 1 < len(part) - 1:
        return g
    if not c:
        return None
    if K.p == 2:
        acc = list(c)
        t = c
        for _ in range(K.m * d - 1):
            t = _frob_mod(K, t, part)
            acc = _add(K, acc, t)
        g = _gcd(K, acc, part)
    else:
        t = _powmod(K, c, (K.q**d - 1) // 2, part)
        g = _gcd(K, _sub(K, t, [1]), part)
    if 0 < len(g) - 1 < len(part) - 1:
        return g
    return None


def _edf(K, f, d):
    """All monic irreducible factors of f, each of degree d."""
    out = []
    stack = [f]
    while stack:
        part = stack.pop()
        if len(part) - 1 == d:
            out.append(part)
            continue
        k = K.q  # first degree-1 candidate in encoding order
        while True:
            g = _try_split(K, part, _decode(K, k), d)
            if g is not None:
                stack.append(g)
                stack.append(_divmod(K, part, g)[0])
                break
            k += 1
    return out


def factor(f):
    """Complete factorization into monic irreducibles times the unit."""
    if f.is_zero():
        raise PreconditionError("cannot factor the zero polynomial")
    K = f.field
    unit = f.leading_coefficient
    pieces = []
    for g, mult in squarefree_decompose(f):
        for prod, d in _ddf(K, list(g._c)):
            for irr in _edf(K, prod, d):
                pieces.append((Polynomial._raw(K, irr), mult))
    pieces.sort(key=lambda t: (t[0].degree, t[0].encoding()))
    fac = Factorization(unit=unit, factors=tuple(pieces))
    return fac


def invert_mod(a, f):
    """The inverse of a modulo f; requires gcd(a, f) = 1."""
    K = a.field
    g, s, _ = _ext_gcd(K, a._c, f._c)
    if len(g) - 1 != 0:
        raise PreconditionError("element not invertible modulo f")
    inv0 = K.inv_raw(g[0])
    return Polynomial._raw(K, _mod(K, _scalar(K, s, inv0), f._c))


def roots(f):
    """Distinct roots in the coefficient field, sorted by encoding."""
    rs = []
    K = f.field
    for g, _ in factor(f).factors:
        if g.degree == 1:
            rs.append(FieldElement(K, K.neg_raw(g._c[0])))
    rs.sort(key=lambda r: r.val)
    return rs


def is_irreducible(f):
    """Rabin's criterion via Frobenius powers."""
    if f.degree < 1:
        return False
    K = f.field
    n = f.degree
    if n == 1:
        return True
    fm = _monic(K, f._c)[0]
    x = [0, 1]
    checkpoints = {n // ell for ell in _prime_divisors(n)}
    h = _mod(K, x, fm)
    for i in range(1, n + 1):
        h = _frob_q_mod(K, h, fm)
        if i in checkpoints:
            g = _gcd(K, _sub(K, h, x), fm)
            if len(g) - 1 != 0:
                return False
        if i == n:
            return h == _mod(K, x, fm)
    return False  # pragma: no cover


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def irreducible_poly(field, d):
    """The canonical (encoding-minimal) monic irreducible of degree d."""
    if d < 1:
        raise PreconditionError("degree must be >= 1")
    base = field.q**d
    for j in range(base):
        f = Polynomial._raw(field, _decode(field, base + j))
        if is_irreducible(f):
            return f
    raise AssertionError("unreachable")  # pragma: no cover


# ---------------------------------------------------------------------------
# text form: terms c*X^k joined by + (or -), emitted in descending degree


def format_polynomial(f, var="T"):
    if f.is_zero():
        return "0"
    terms = []
    for i in reversed(range(len(f._c))):
        v = f._c[i]
        if not v:
            continue
        c = FieldElement(f.field, v)
        ct = str(c)
        if "+" in ct:
            ct = f"({ct})"
        if i == 0:
            terms.append(ct)
            continue
        xp = var if i == 1 else f"{var}^{i}"
        terms.append(xp if c == 1 else f"{ct}*{xp}")
    return "+".join(terms)


def _tokenize(s):
    toks = []
    i = 0
    while i < len(s):
        ch = s[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(s) and s[j].isdigit():
                j += 1
            toks.append(("INT", int(s[i:j]), i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < len(s) and s[j].isalpha():
                j += 1
            toks.append(("NAME", s[i:j], i))
            i = j
            continue
        if ch in "+-*^()":
            toks.append((ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r} at position {i}")
    toks.append(("END", None, len(s)))
    return toks


class _PolyParser:
    def __init__(self, text, field, var):
        self.toks = _tokenize(text)
        self.pos = 0
        self.field = field
        self.var = var

    def peek(self):
        return self.toks[self.pos]

    def take(self, kind=None):
        tok = self.toks[self.pos]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind} at position {tok[2]}")
        self.pos += 1
        return tok

    def parse(self):
        out = self.expr()
        tok = self.peek()
        if tok[0] != "END":
            raise ParseError(f"trailing input at position {tok[2]}")
        return out

    def expr(self):
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while self.peek()[0] in "+-":
            op = self.take()[0]
            t = self.term()
            acc = acc - t if op == "-" else acc + t
        return acc

    def term(self):
        acc = self.factor()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self):
        base = self.base()
        if self.peek()[0] == "^":
            self.take()
            tok = self.take("INT")
            if tok[1] < 0:
                raise ParseError(f"negative exponent at position {tok[2]}")
            return base ** tok[1]
        return base

    def base(self):
        tok = self.peek()
        if tok[0] == "INT":
            self.take()
            return Polynomial.constant(self.field, tok[1] % self.field.p)
        if tok[0] == "NAME":
            self.take()
            if tok[1] == self.var:
                return Polynomial.x(self.field)
            if tok[1] == "z" and self.field.m > 1:
                return Polynomial.constant(self.field, self.field.gen)
            raise ParseError(f"unknown name {tok[1]!r} at position {tok[2]}")
        if tok[0] == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        raise ParseError(f"unexpected token at position {tok[2]}")


def parse_polynomial(text, field, var="T"):
    if not text.strip():
        raise ParseError("empty polynomial text")
    return _PolyParser(text, field, var).parse()
