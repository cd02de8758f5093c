from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hurwitzkp import boson
from hurwitzkp.errors import DomainError, PoleError
from hurwitzkp.series import Grading, RatFunc, RatFuncRing

N = 6
modes = st.integers(-3, 3).filter(bool)
small = st.fractions(min_value=-3, max_value=3, max_denominator=4)


def restrict(f, cap):
    return f.with_gradings((Grading(f.gradings[0].weights, cap, 0),))


def random_poly(coeffs):
    space = boson.t_space(N)
    basis = boson.monomial_basis(N)
    return space.like({basis[i % len(basis)]: c for i, c in enumerate(coeffs)})


@given(st.lists(modes, min_size=1, max_size=4), st.lists(small, min_size=1, max_size=8))
@settings(max_examples=60, deadline=None)
def test_normal_ordering_matches_naive_composition(word, coeffs):
    f = random_poly(coeffs)
    a = boson.normal_order(word, N).apply(f)
    b = boson.naive_apply(word, f)
    cap = min(a.gradings[0].hi, b.gradings[0].hi)
    assert restrict(a, cap) == restrict(b, cap)


def test_commutation_relation():
    # J_2 J_{-2} = J_{-2} J_2 + 2
    op = boson.normal_order([2, -2], N)
    assert op == boson.BosonOperator({(-2, 2): 1, (): 2}, N)


def test_L0_is_the_degree_operator():
    L0 = boson.build_L(0, N)
    for mono in boson.monomial_basis(N):
        f = boson.t_space(N).like({mono: 1})
        deg = sum((k + 1) * e for k, e in enumerate(mono))
        assert L0.apply(f) == f * deg


@pytest.mark.parametrize("beta", [Fraction(1, 7), Fraction(-2, 5), Fraction(3)])
def test_R_from_field_expansion_matches_explicit_forms(beta):
    for n in (1, 2):
        assert boson.build_R(n, beta, N) == boson.explicit_R(n, beta, N)


def test_R_symbolic_beta():
    ring = RatFuncRing("beta")
    beta = RatFunc.var()
    R1 = boson.build_R(1, beta, 4, ring)
    for b in (Fraction(1, 3), Fraction(-2)):
        sampled = boson.BosonOperator({m: c(b) for m, c in R1.terms.items()}, 4)
        assert sampled == boson.build_R(1, b, 4)


def test_Y_degree_limit():
    with pytest.raises(DomainError):
        boson.build_Y(1, [1, 1, 1, 1, 1], N)
    with pytest.raises(DomainError):
        boson.build_R(4, Fraction(1), N)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_constraints_on_tau(n):
    tau = boson.build_tau_mm(N, Fraction(2, 9), [Fraction(1), Fraction(-1, 2), Fraction(2, 3)])
    assert boson.verify_constraints(tau, n)["status"] == "verified"


def test_constraint_detects_wrong_t_tilde():
    tau = boson.build_tau_mm(N, Fraction(2, 9), [Fraction(1), Fraction(-1, 2)])
    wrong = boson.TauMM(tau.N, tau.beta, (Fraction(1), Fraction(1, 2)), tau.series)
    assert boson.verify_constraints(wrong, 2)["status"] == "failed"


def test_tau_constant_term_and_degree_one():
    tt = [Fraction(2), Fraction(1, 3)]
    tau = boson.build_tau_mm(N, Fraction(0), tt)
    # at beta = 0 only the empty and one-row Schur terms survive: tau = exp(sum k t~_k t_k)
    assert tau.coefficient({}) == 1
    assert tau.coefficient({1: 1}) == 2
    assert tau.coefficient({1: 2}) == 2


def test_cut_and_join():
    assert boson.verify_cut_and_join(N, Fraction(-3, 4))["status"] == "verified"


def test_cut_and_join_pole():
    # hbar = 1/5 puts a zero in 1 - hbar c for the box of content 5
    with pytest.raises(PoleError):
        boson.verify_cut_and_join(N, Fraction(1, 5))


def test_commutator_vanishes():
    beta = Fraction(-2, 5)
    rep = boson.commutator_on_window(boson.build_R(1, beta, 5), boson.build_R(2, beta, 5), 5)
    assert rep["status"] == "verified"


def test_commutator_detects_noncommuting_pair():
    rep = boson.commutator_on_window(boson.BosonOperator.mode(1, 4), boson.BosonOperator.t(1, 4), 4)
    assert rep["status"] == "failed"


def test_uniqueness_with_three_constraints():
    tt = [Fraction(1), Fraction(-1, 2), Fraction(1, 3)]
    beta = Fraction(1, 3)
    out = boson.uniqueness_nullspace(beta, tt)
    assert out["dimension"] == 1
    tau = boson.build_tau_mm(3, beta, tt)
    assert all(tau.series.coeff(m) == v for m, v in out["solution"].items())


def test_two_constraints_leave_t3_free():
    out = boson.uniqueness_nullspace(Fraction(1, 3), [Fraction(1), Fraction(-1, 2)], ops=(1, 2))
    assert out["dimension"] == 2


def test_text_form():
    assert "J[1]" in boson.explicit_R(1, Fraction(1, 2), 3).to_text()
