from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from hurwitzkp.errors import DomainError, PoleError
from hurwitzkp.series import (
    LaurentQ,
    Poly,
    RatFunc,
    TruncatedSeries,
    TruncHbar,
    TruncHbarRing,
    exp_coefficients,
    fmt_rational,
    parse_rational,
)

small = st.fractions(min_value=-5, max_value=5, max_denominator=6)
polys = st.lists(small, min_size=0, max_size=4).map(Poly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())
ratfuncs = st.builds(RatFunc, polys, nonzero_polys)
points = st.fractions(min_value=-3, max_value=3, max_denominator=5)


def _eval_or_none(f, x):
    try:
        return f(x)
    except PoleError:
        return None


@given(polys, polys, polys)
def test_poly_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(polys, nonzero_polys)
def test_poly_division(a, b):
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


@given(ratfuncs, ratfuncs, ratfuncs)
@settings(max_examples=60)
def test_ratfunc_field_axioms(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f * (g + h) == f * g + f * h
    if not g.is_zero():
        assert (f / g) * g == f


@given(ratfuncs, ratfuncs, points)
@settings(max_examples=80)
def test_ratfunc_evaluation_is_a_homomorphism(f, g, x):
    fx, gx = _eval_or_none(f, x), _eval_or_none(g, x)
    assume(fx is not None and gx is not None)
    assert (f * g)(x) == fx * gx
    assert (f + g)(x) == fx + gx


def test_ratfunc_is_reduced_and_monic():
    x = RatFunc.var()
    f = (x * x - 1) / (2 * x - 2)
    assert f.den == Poly.const(1)
    assert f.num == Poly((Fraction(1, 2), Fraction(1, 2)))


def test_ratfunc_pole():
    f = 1 / (RatFunc.var() - 2)
    with pytest.raises(PoleError):
        f(2)
    with pytest.raises(PoleError):
        RatFunc.const(0).inv()


@given(ratfuncs, ratfuncs)
@settings(max_examples=60)
def test_trunc_hbar_expansion_is_multiplicative(f, g):
    ring = TruncHbarRing(6)
    lhs = ring.from_ratfunc(f * g)
    rhs = (ring.from_ratfunc(f) * ring.from_ratfunc(g)).with_prec(ring.prec)
    # the product is reliable up to the smaller of the two absolute precisions
    for e in range(-10, min(lhs.prec, rhs.prec)):
        assert lhs.c.get(e, 0) == rhs.c.get(e, 0)


def test_trunc_hbar_geometric_series():
    ring = TruncHbarRing(5)
    h = RatFunc.var()
    s = ring.from_ratfunc(1 / (1 - h))
    assert all(s.c[e] == 1 for e in range(6))
    assert s.prec == 6


def test_laurent_q_monomials_only_invertible():
    m = LaurentQ({(2, -1): 3})
    assert (m * m.inv()) == LaurentQ.const(1)
    with pytest.raises((DomainError, ZeroDivisionError)):
        LaurentQ({(0, 0): 1, (1, 0): 1}).inv()


coeff_lists = st.lists(small, min_size=1, max_size=5)


@given(coeff_lists)
@settings(max_examples=50)
def test_log_exp_round_trip(cs):
    s = TruncatedSeries.univariate("x", {k + 1: c for k, c in enumerate(cs)}, 0, 6)
    assert s.exp().log() == s
    f = s.exp()
    assert (f * f.inverse()) == f.one()


@given(coeff_lists)
def test_exp_coefficients_agree_with_series_exp(cs):
    coeffs = {k + 1: c for k, c in enumerate(cs)}
    e = TruncatedSeries.univariate("x", coeffs, 0, 6).exp()
    assert exp_coefficients(coeffs, 6) == [e[j] for j in range(7)]


def test_signature_mismatch():
    a = TruncatedSeries.univariate("x", {1: 1}, 0, 4)
    b = TruncatedSeries.univariate("y", {1: 1}, 0, 4)
    with pytest.raises(DomainError):
        a + b


def test_log_needs_unit_constant():
    with pytest.raises(DomainError):
        TruncatedSeries.univariate("x", {0: 2, 1: 1}, 0, 4).log()


def test_weighted_truncation():
    s = TruncatedSeries.weighted(("t1", "t2"), (1, 2), 4)
    t1, t2 = s.variable("t1"), s.variable("t2")
    p = (t1 + t2) * (t1 + t2) * (t1 + t2)
    assert p.coeff((2, 1)) == 3
    assert p.coeff((1, 2)) == 0
    assert p.coeff((0, 3)) == 0  # weight 6 is truncated


@given(small)
def test_rational_strings(x):
    assert parse_rational(fmt_rational(x)) == x
    assert "/" in fmt_rational(x)
