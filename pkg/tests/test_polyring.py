"""Polynomial arithmetic, factorization, parsing."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from ramforge import GF
from ramforge.errors import ParseError, PreconditionError
from ramforge.polyring import (
    Polynomial,
    factor,
    format_polynomial,
    gcd,
    invert_mod,
    irreducible_poly,
    is_irreducible,
    parse_polynomial,
    roots,
    squarefree_decompose,
)

F2 = GF(2)
F3 = GF(3)
F4 = GF(2, 2)
F5 = GF(5)
F9 = GF(3, 2)


def poly(field, text):
    return parse_polynomial(text, field, "T")


def polys(field, max_deg=6, min_deg=0):
    return st.lists(
        st.integers(0, field.q - 1),
        min_size=min_deg + 1,
        max_size=max_deg + 1,
    ).map(lambda c: Polynomial(field, c))


def nonzero_polys(field, max_deg=6):
    return polys(field, max_deg).filter(lambda f: not f.is_zero())


# ---------------------------------------------------------------------------
# frozen examples


def test_factor_frozen_f2():
    fact = factor(poly(F2, "T^6+T^4"))
    assert fact.unit == 1
    assert [(g.to_text("T"), e) for g, e in fact.factors] == [
        ("T", 4),
        ("T+1", 2),
    ]


def test_factor_frozen_f5():
    fact = factor(poly(F5, "T^2+1"))
    assert [(g.to_text("T"), e) for g, e in fact.factors] == [
        ("T+2", 1),
        ("T+3", 1),
    ]


def test_squarefree_frozen():
    parts = squarefree_decompose(poly(F2, "T^4+T^2"))
    assert [(g.to_text("T"), e) for g, e in parts] == [("T^2+T", 2)]


def test_irreducible_poly_frozen():
    assert irreducible_poly(F2, 3).to_text("T") == "T^3+T+1"
    assert irreducible_poly(F2, 1).to_text("T") == "T"
    assert irreducible_poly(F3, 2).to_text("T") == "T^2+1"


def test_factor_of_zero_raises():
    with pytest.raises(PreconditionError):
        factor(Polynomial(F2, [0]))


# ---------------------------------------------------------------------------
# irreducibility against the trial-division oracle


@pytest.mark.parametrize("p,max_deg", [(2, 6), (3, 4), (5, 3)])
def test_is_irreducible_matches_oracle(p, max_deg):
    field = GF(p)
    for deg in range(1, max_deg + 1):
        for code in range(p**deg):
            digits = []
            v = code
            for _ in range(deg):
                digits.append(v % p)
                v //= p
            coeffs = tuple(digits) + (1,)
            f = Polynomial(field, coeffs)
            assert is_irreducible(f) == oracles.pf_is_irreducible(coeffs, p)


@pytest.mark.parametrize("p,m_deg", [(2, 5), (3, 3), (5, 2)])
def test_irreducible_poly_is_encoding_minimal(p, m_deg):
    field = GF(p)
    best = irreducible_poly(field, m_deg)
    for code in range(best.encoding() % p**m_deg):
        digits = []
        v = code
        for _ in range(m_deg):
            digits.append(v % p)
            v //= p
        assert not oracles.pf_is_irreducible(tuple(digits) + (1,), p)
    assert is_irreducible(best)


# ---------------------------------------------------------------------------
# properties


@given(f=nonzero_polys(F4, 5))
def test_factor_round_trip_f4(f):
    fact = factor(f)
    assert fact.expand() == f
    keys = [(g.degree, g.encoding()) for g, _ in fact.factors]
    assert keys == sorted(keys)
    for g, e in fact.factors:
        assert g.is_monic()
        assert e >= 1
        assert is_irreducible(g)


@given(f=nonzero_polys(F3, 6))
def test_factor_round_trip_f3(f):
    fact = factor(f)
    assert fact.expand() == f


@given(f=nonzero_polys(F2, 8))
def test_squarefree_structure(f):
    parts = squarefree_decompose(f)
    acc = Polynomial(F2, [1])
    for g, e in parts:
        acc = acc * g**e
        assert gcd(g, g.derivative()).is_constant()
    assert acc == f
    for i, (g, _) in enumerate(parts):
        for h, _ in parts[i + 1 :]:
            assert gcd(g, h).is_constant()


@given(f=nonzero_polys(F5, 5), g=nonzero_polys(F5, 5))
def test_gcd_divides(f, g):
    d = gcd(f, g)
    assert d.is_monic()
    assert (f % d).is_zero()
    assert (g % d).is_zero()


@given(f=polys(F9, 5), g=nonzero_polys(F9, 5))
def test_divmod_invariant(f, g):
    q, r = divmod(f, g)
    assert q * g + r == f
    assert r.is_zero() or r.degree < g.degree


@given(f=polys(F4, 5), g=polys(F4, 5))
def test_derivative_product_rule(f, g):
    lhs = (f * g).derivative()
    assert lhs == f.derivative() * g + f * g.derivative()


@given(f=nonzero_polys(F5, 5))
def test_roots_are_roots(f):
    rs = roots(f)
    assert len(rs) <= f.degree
    for r in rs:
        assert f.evaluate(r).is_zero()
    assert [r.val for r in rs] == sorted(r.val for r in rs)


def test_roots_frozen():
    f = poly(F5, "T^2+1")
    assert [r.val for r in roots(f)] == [2, 3]
    assert roots(poly(F2, "T^2+T+1")) == []


@given(f=nonzero_polys(F3, 4))
def test_invert_mod(f):
    m = poly(F3, "T^3+2*T+1")  # irreducible over F3
    if gcd(f, m).is_constant() and not (f % m).is_zero():
        inv = invert_mod(f, m)
        assert (f * inv) % m == Polynomial(F3, [1])


@given(f=polys(F9, 4), a=st.integers(0, 8), b=st.integers(0, 8))
def test_shift_matches_evaluation(f, a, b):
    alpha, x0 = F9.element(a), F9.element(b)
    assert f.shift(alpha).evaluate(x0) == f.evaluate(x0 + alpha)


# ---------------------------------------------------------------------------
# text round trips


@pytest.mark.parametrize("field", [F2, F5, F9])
@given(data=st.data())
def test_parse_format_round_trip(field, data):
    f = data.draw(polys(field, 6))
    text = f.to_text("T")
    assert parse_polynomial(text, field, "T") == f
    assert format_polynomial(f, "T") == text


def test_parse_rejects_garbage():
    for bad in ["T^^2", "T +", "x^2", "(T", "T^2 + q", ""]:
        with pytest.raises(ParseError):
            parse_polynomial(bad, F2, "T")


def test_parse_extension_coefficients():
    f = parse_polynomial("(z+1)*T^2+z*T+1", F4, "T")
    assert f.coefficient(2).val == 3
    assert f.coefficient(1).val == 2
    assert f.to_text("T") == "(z+1)*T^2+z*T+1"


def test_parse_rejects_z_over_prime_field():
    with pytest.raises(ParseError):
        parse_polynomial("z*T", F2, "T")
