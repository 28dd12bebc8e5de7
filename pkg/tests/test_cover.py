"""Covers of the projective line: fibers, different, report checks."""

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ramforge import GF
from ramforge.cover import (
    RationalCover,
    compose,
    conorm,
    cover_create,
    fiber,
    pushforward_place,
    ramification_report,
    report_as_dict,
)
from ramforge.errors import PreconditionError
from ramforge.funcfield import Divisor, Place, parse_divisor, parse_place
from ramforge.polyring import Polynomial, parse_polynomial

F2 = GF(2)
F3 = GF(3)
F5 = GF(5)


def mk(field, num, den="1", var_up="x", var_down="t"):
    return cover_create(
        field,
        parse_polynomial(num, field, var_up),
        parse_polynomial(den, field, var_up),
        var_up=var_up,
        var_down=var_down,
    )


# ---------------------------------------------------------------------------
# construction and normalization


def test_cover_degree_and_text():
    c = mk(F2, "x^3+1", "x")
    assert c.degree == 3
    assert c.to_text() == "t = (x^3+1)/x"
    assert c.normalization is None


def test_cover_reduces_fraction():
    c = mk(F2, "x^3+x^2", "x")
    assert c.map.num.to_text("x") == "x^2+x"
    assert c.map.den.to_text("x") == "1"
    assert c.degree == 2


def test_cover_normalizes_small_numerator():
    c = mk(F2, "x", "x^2+1")
    assert c.degree == 2
    assert c.map.num.to_text("x") == "x^2+1"
    assert c.normalization["kind"] == "reciprocal_shift"
    assert c.normalization["alpha"].is_zero()


def test_cover_normalizes_equal_degrees():
    c = mk(F2, "x^2+1", "x^2+x+1")
    assert c.map.num.to_text("x") == "x^2+x+1"
    assert c.map.den.to_text("x") == "x"
    assert c.normalization["alpha"].val == 1


def test_cover_rejects_degenerate():
    with pytest.raises(PreconditionError):
        mk(F2, "1")  # constant map
    with pytest.raises(PreconditionError):
        mk(F2, "x^2")  # square in characteristic 2 is inseparable
    with pytest.raises(PreconditionError):
        mk(F3, "x^3+1")  # p-th power shift


# ---------------------------------------------------------------------------
# frozen reports


def test_report_artin_schreier():
    r = ramification_report(mk(F2, "x^2+x"))
    assert r.different_divisor.to_text("x") == "2*(inf)"
    assert [q.text("t") for q in r.branch_locus] == ["inf"]
    assert not r.tame
    assert r.checks == {
        "fundamental_equality": True,
        "dedekind": True,
        "hurwitz": True,
        "remark4": None,
    }
    (below, pts), = r.fibers
    assert below.is_infinite
    assert [(p.above.text("x"), p.e, p.f, p.d, p.wild) for p in pts] == [
        ("inf", 2, 1, 2, True)
    ]


def test_report_kummer_cube():
    r = ramification_report(mk(F2, "x^3"))
    assert r.different_divisor.to_text("x") == "2*(x) + 2*(inf)"
    assert [q.text("t") for q in r.branch_locus] == ["t", "inf"]
    assert r.tame
    assert r.checks["remark4"] is True
    assert r.different_divisor.degree() == 2 * 3 - 2


def test_report_wild_step_shape():
    r = ramification_report(mk(F2, "t^3+1", "t", "t", "u"))
    assert r.different_divisor.to_text("t") == "4*(inf)"
    assert [q.text("u") for q in r.branch_locus] == ["inf"]
    (below, pts), = r.fibers
    assert [(p.above.text("t"), p.e, p.f, p.d, p.wild) for p in pts] == [
        ("t", 1, 1, 0, False),
        ("inf", 2, 1, 4, True),
    ]


def test_report_as_dict_schema():
    d = report_as_dict(ramification_report(mk(F2, "x^3")))
    assert sorted(d.keys()) == [
        "branch_locus",
        "checks",
        "degree",
        "different",
        "different_degree",
        "fibers",
        "field",
        "map",
        "tame",
    ]
    assert d["field"] == {"p": 2, "m": 1}
    assert d["map"] == {"num": "x^3", "den": "1"}
    assert d["degree"] == 3
    assert d["different"] == [
        {"place": "x", "coeff": 2},
        {"place": "inf", "coeff": 2},
    ]
    assert d["different_degree"] == 4
    assert d["branch_locus"] == ["t", "inf"]
    assert d["tame"] is True
    point_keys = sorted(d["fibers"][0]["points"][0].keys())
    assert point_keys == ["above", "d", "e", "f"]


# ---------------------------------------------------------------------------
# fibers, pushforward, conorm


def test_fiber_unramified_degree_two():
    c = mk(F2, "x^3+1", "x")
    pts = fiber(c, parse_place("t^2+t+1", F2, "t"))
    assert [(pl.text("x"), e, f) for pl, e, f in pts] == [
        ("x^6+x^4+x^2+x+1", 1, 3)
    ]


def test_fiber_fundamental_equality_enforced():
    c = mk(F5, "x^2+1", "x")
    for root in range(5):
        Q = Place.from_root(F5.element(root))
        assert sum(e * f for _, e, f in fiber(c, Q)) == 2


def test_pushforward_frozen():
    c = mk(F3, "x^2")
    assert pushforward_place(c, parse_place("x+1", F3, "x")).text("t") == "t+2"
    assert pushforward_place(c, parse_place("inf", F3, "x")).text("t") == "inf"


def test_pushforward_consistent_with_fiber():
    c = mk(F3, "x^3+x", "x+1")
    for v in range(3):
        P = Place.from_root(F3.element(v))
        Q = pushforward_place(c, P)
        assert any(pl == P for pl, _, _ in fiber(c, Q))


def test_conorm_frozen():
    c = mk(F3, "x^2")
    D = parse_divisor("1*(inf) + 1*(t)", F3, "t")
    up = conorm(c, D)
    assert up.to_text("x") == "2*(x) + 2*(inf)"
    assert up.degree() == c.degree * D.degree()


@given(coeff=st.integers(1, 3), root=st.integers(0, 2))
def test_conorm_degree_multiplicative(coeff, root):
    c = mk(F3, "x^3+x", "x+1")
    Q = Place.from_root(F3.element(root))
    D = parse_divisor(f"{coeff}*(inf)", F3, "t") + Divisor(F3, [(Q, coeff)])
    up = conorm(c, D)
    assert up.degree() == c.degree * D.degree()


# ---------------------------------------------------------------------------
# composition


def test_compose_monomials():
    inner = mk(F3, "x^2", "1", "x", "t")
    outer = mk(F3, "t^2", "1", "t", "u")
    comp = compose(inner, outer)
    assert comp.to_text() == "u = x^4"
    assert comp.degree == 4


def test_compose_with_denominators():
    inner = mk(F2, "x^3+1", "1", "x", "t")
    outer = mk(F2, "t^3+1", "t", "t", "u")
    comp = compose(inner, outer)
    assert comp.degree == 9
    assert comp.to_text() == "u = (x^9+x^6+x^3)/(x^3+1)"
    r = ramification_report(comp)
    assert [q.text("u") for q in r.branch_locus] == ["u", "inf"]
    inf_pts = dict()
    for q, pts in r.fibers:
        if q.is_infinite:
            inf_pts = {p.above.text("x"): p.e for p in pts}
    assert inf_pts["inf"] == 6


def test_compose_requires_matching_variables():
    inner = mk(F2, "x^3+1", "1", "x", "t")
    outer = mk(F2, "u^3+1", "u", "u", "y")
    with pytest.raises(PreconditionError):
        compose(inner, outer)


# ---------------------------------------------------------------------------
# randomized structural identities (small scale; the acceptance gate
# runs the full-size version)


def random_cover(rng, field, max_deg=5):
    while True:
        n_deg = rng.randrange(1, max_deg + 1)
        d_deg = rng.randrange(0, n_deg)
        num = Polynomial(
            field,
            [field.element(rng.randrange(field.q)) for _ in range(n_deg)]
            + [field.element(rng.randrange(1, field.q))],
        )
        den = Polynomial(
            field,
            [field.element(rng.randrange(field.q)) for _ in range(d_deg)]
            + [field.element(rng.randrange(1, field.q))],
        )
        try:
            c = cover_create(field, num, den)
        except PreconditionError:
            continue
        if c.degree >= 2:
            return c


@pytest.mark.parametrize("q,seed", [(2, 1), (3, 2), (4, 3), (5, 4)])
def test_random_cover_invariants(q, seed):
    p = 2 if q in (2, 4) else q
    m = 2 if q == 4 else 1
    field = GF(p, m)
    rng = random.Random(seed)
    for _ in range(12):
        c = random_cover(rng, field)
        r = ramification_report(c)
        n = c.degree
        assert r.different_divisor.degree() == 2 * n - 2
        assert r.different_divisor.is_effective()
        for below, pts in r.fibers:
            assert sum(p_.e * p_.f for p_ in pts) == n
            for p_ in pts:
                wild = p_.e % field.p == 0
                assert p_.wild == wild
                if wild:
                    assert p_.d >= p_.e
                else:
                    assert p_.d == p_.e - 1
        # ramified places all appear in the branch locus
        locus = set(r.branch_locus)
        for below, pts in r.fibers:
            if any(p_.e > 1 for p_ in pts):
                assert below in locus


def test_branch_locus_complete_for_small_places():
    """Scan all downstairs places of degree <= 2 independently."""
    c = mk(F2, "x^3+x^2", "x^2+x+1")
    r = ramification_report(c)
    locus = set(r.branch_locus)
    candidates = [Place.from_root(F2.element(v)) for v in range(2)]
    candidates.append(Place.infinite(F2))
    candidates.append(parse_place("t^2+t+1", F2, "t"))
    for Q in candidates:
        ramified = any(e > 1 for _, e, f in fiber(c, Q))
        assert (Q in locus) == ramified
