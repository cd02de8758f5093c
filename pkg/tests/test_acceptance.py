"""One test per acceptance criterion; the PASS/FAIL lines are collected into the terminal summary."""
import pytest

from conftest import ACCEPTANCE_LINES
from hurwitzkp import acceptance, hurwitz as hw


def _run(number):
    result = acceptance.CRITERIA[number]()
    print(result.line())
    ACCEPTANCE_LINES.append(result.line())
    return result


@pytest.mark.parametrize("number", [1, 2, 3, 4, 5, 6, 7, 8, 10])
def test_criterion(number):
    result = _run(number)
    assert result.passed, result.detail


@pytest.mark.xfail(
    strict=True,
    reason="the unstable cases (g, l) = (0, 1) and (0, 2) are not polynomial in mu; see the quasi-polynomiality tests below",
)
def test_criterion_9():
    result = _run(9)
    assert result.passed, result.detail


def test_criterion_9_stable_parts():
    result = acceptance.CRITERIA[9]()
    assert result.parts["K"] is True
    assert result.parts["K1"] == "-3"
    assert result.parts["K2"] == "-21/2"
    assert result.parts["quasi_1_1"] is True
    assert result.parts["quasi_0_1"] is False
    assert result.parts["quasi_0_2"] is False


def test_unstable_ratios_are_rational_not_polynomial():
    # the normalized genus 0 values are 1/(2d(2d-1)) for one part and 1/(2(a+b)) for two
    rep = hw.quasipolynomiality_check(0, 1)
    for (d,), v in rep.samples.items():
        assert v * 2 * d * (2 * d - 1) == 1
    rep = hw.quasipolynomiality_check(0, 2)
    for (a, b), v in rep.samples.items():
        assert v * 2 * (a + b) == 1
