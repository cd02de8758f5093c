from fractions import Fraction

import pytest

from hurwitzkp import curves
from hurwitzkp.errors import DomainError, PoleError
from hurwitzkp.series import LaurentQRing, RatFuncRing


@pytest.mark.parametrize(
    "flavor,params,N,form",
    [
        ("monotone_orbifold", {"r": 1}, 8, "default"),
        ("monotone_orbifold", {"r": 2}, 8, "polynomial"),
        ("monotone", {"t": [Fraction(2, 3), Fraction(-1, 2), Fraction(1, 5)]}, 8, "default"),
        ("monotone", {"t": [Fraction(2, 3), Fraction(-1, 2), Fraction(1, 5)]}, 8, "general"),
        ("strict", {"r": 1}, 8, "default"),
        ("strict", {"r": 3}, 6, "default"),
        ("atlantes", {"r": 1, "M": 16}, 6, "default"),
        ("double", {"t": [Fraction(1), Fraction(0), Fraction(1, 3)]}, 6, "default"),
        ("deformation", {"c": Fraction(3, 4)}, 6, "default"),
        ("simple", {}, 6, "default"),
    ],
)
def test_curves_annihilate(flavor, params, N, form):
    rep = curves.verify_curve(flavor, params, N, form)
    assert rep["status"] == "verified", rep
    assert rep["first_failure"] is None


def test_wrong_operator_is_caught():
    wave = curves.build_wave("monotone_orbifold", {"r": 1}, 8)
    op = curves.curve_operator("monotone_orbifold", {"r": 2}, wave.ring)
    rep = curves.verify_annihilation(op, wave, 8)
    assert rep["status"] == "failed"
    assert rep["first_failure"]["exponent"] <= 8


def test_deformation_with_wrong_parameter_fails():
    wave = curves.build_wave("deformation", {"c": Fraction(1, 3)}, 7)
    op = curves.curve_operator("deformation", {"c": Fraction(1, 2)}, wave.ring)
    assert curves.verify_annihilation(op, wave, 6)["status"] == "failed"


def test_short_window_is_reported():
    wave = curves.build_wave("simple", {}, 4)
    op = curves.curve_operator("simple", {}, wave.ring)
    rep = curves.verify_annihilation(op, wave, 10)
    assert rep["status"] == "failed"
    assert "window" in rep["first_failure"]["reason"]


def test_wave_matches_schur_sum():
    t = [Fraction(1), Fraction(1, 2)]
    wave = curves.build_wave("monotone", {"t": t}, 6)
    schur = curves.wave_from_schur_sum(t, 6)
    for m in range(7):
        assert wave.coefficient(m) == schur[m]


def test_sampled_hbar_points():
    t = [Fraction(1), Fraction(1, 2)]
    assert curves.verify_monotone_sampled(t, 8, [Fraction(2, 7), Fraction(-2, 3), Fraction(5, 2)])


def test_sampled_hbar_pole():
    # the wave coefficients have poles at hbar = 1/l
    with pytest.raises(PoleError):
        curves.verify_monotone_sampled([Fraction(1)], 8, [Fraction(1, 7)])


def test_atlantes_precision_report():
    rep = curves.verify_curve("atlantes", {"r": 2, "M": 22}, 10)
    assert rep["hbar_order"] == 22
    assert rep["min_hbar_precision"] >= 1


def test_operator_algebra():
    ring = RatFuncRing("hbar")
    x, y = curves.xhat(), curves.yhat_euler(ring)
    # [y, x] = hbar x for y = hbar x d/dx
    comm = y * x - x * y
    target = x * ring.hbar()
    for m in range(4):
        assert comm.act_monomial(m, ring) == target.act_monomial(m, ring)


def test_unknown_flavor_and_form():
    with pytest.raises(DomainError):
        curves.curve_operator("nope", {}, LaurentQRing())
    with pytest.raises(DomainError):
        curves.curve_operator("strict", {"r": 1}, LaurentQRing(), form="polynomial")
