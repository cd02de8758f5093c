from fractions import Fraction
from itertools import product
from math import comb, factorial, prod

import pytest
from hypothesis import given, strategies as st

from hurwitzkp.blocks import BlockSpec
from hurwitzkp.errors import DomainError
from hurwitzkp.group_oracle import brute_hurwitz
from hurwitzkp.hurwitz import (
    HurwitzProblem,
    block_eigenvalue,
    connected_numbers,
    elsv_k_coefficients,
    hurwitz_number,
    hypergeometric_coefficient,
    hypermap_count,
    lascoux_thibon_check,
    newton_check,
    quasipolynomiality_check,
)
from hurwitzkp.partitions import Partition, automorphism_count, partitions_of

lams = st.integers(1, 8).flatmap(lambda n: st.sampled_from(partitions_of(n)))


@given(lams, st.integers(0, 10))
def test_newton_identity(lam, order):
    assert newton_check(lam, order)


@given(lams)
def test_strict_equals_free_single_eigenvalues(lam):
    for b in range(lam.size + 1):
        assert block_eigenvalue(BlockSpec.strict(b), lam) == block_eigenvalue(BlockSpec.free_single(b), lam)
        assert block_eigenvalue(BlockSpec.monotone(b), lam) == block_eigenvalue(BlockSpec.free_group(b), lam)


def test_lascoux_thibon_small():
    assert lascoux_thibon_check(Partition.of([3, 1]), 6)
    with pytest.raises(DomainError):
        lascoux_thibon_check(Partition.of([1]), 0)


def test_problem_validation_and_genus():
    p = HurwitzProblem(Partition.of([3]), Partition.of([3]), (BlockSpec.monotone(2),))
    assert p.genus() == 1
    with pytest.raises(DomainError):
        HurwitzProblem(Partition.of([3]), Partition.of([2]))
    with pytest.raises(DomainError):
        HurwitzProblem(Partition.of([2]), Partition.of([2]), mode="other")


def test_pointwise_fibers_mode_rescales_by_automorphisms():
    mu, nu = Partition.of([2, 1, 1]), Partition.of([2, 2])
    blocks = [BlockSpec.monotone(3)]
    full = hurwitz_number(mu, nu, blocks)
    pointwise = hurwitz_number(mu, nu, blocks, mode="pointwise-fibers")
    assert pointwise == full * automorphism_count(mu) * automorphism_count(nu)


@pytest.mark.parametrize("n", range(1, 6))
def test_swap_invariance_of_engine(n):
    blocks = [BlockSpec.atlantes(2), BlockSpec.hyper_z(Fraction(2, 7))]
    for mu, nu in product(partitions_of(n), repeat=2):
        assert hurwitz_number(mu, nu, blocks) == hurwitz_number(nu, mu, blocks)


def test_hyper_z_pole():
    # 1/(1 - c z) has a pole at content c = 1/z
    with pytest.raises(ZeroDivisionError):
        hurwitz_number(Partition.of([2]), Partition.of([2]), [BlockSpec.hyper_z(Fraction(1))])


def test_hyper_w_is_a_strict_generating_function():
    # prod(1 + w J_i) = sum_b w^b sigma_b
    w = Fraction(2, 5)
    mu, nu = Partition.of([3, 1]), Partition.of([2, 2])
    direct = hurwitz_number(mu, nu, [BlockSpec.hyper_w(w)])
    expanded = sum(w**b * hurwitz_number(mu, nu, [BlockSpec.strict(b)]) for b in range(4))
    assert direct == expanded


@pytest.mark.parametrize("n", range(2, 7))
def test_strict_orbifold_counts_are_hypermaps(n):
    for r in (1, 2, 3):
        if n % r:
            continue
        nu = Partition((r,) * (n // r))
        for mu in partitions_of(n):
            for b in range(n):
                assert hypermap_count(mu, r, b) == hurwitz_number(mu, nu, [BlockSpec.strict(b)])


def test_hypergeometric_coefficient_mixed():
    mu, nu = Partition.of([2, 1]), Partition.of([3])
    blocks = [BlockSpec.strict(1), BlockSpec.monotone(1), BlockSpec.monotone(2)]
    assert hypergeometric_coefficient(3, (1,), (1, 2), mu, nu) == brute_hurwitz(mu, nu, blocks)
    # mismatched degree vanishes
    assert hypergeometric_coefficient(4, (), (), mu, nu) == 0


def _hurwitz_formula(mu: Partition) -> Fraction:
    """Genus zero simple Hurwitz numbers: (n+l-2)! n^(l-3) prod mu_i^mu_i/mu_i! / |Aut mu|."""
    n, l = mu.size, mu.length
    val = Fraction(factorial(n + l - 2)) * Fraction(n) ** (l - 3)
    for m in mu.parts:
        val *= Fraction(m**m, factorial(m))
    return val / automorphism_count(mu)


def _monotone_genus_zero(mu: Partition) -> Fraction:
    """(1/|Aut mu|) (2n+1)^(rising l-3) prod binom(2 mu_i, mu_i), rising powers of negative order inverted."""
    n, l = mu.size, mu.length
    rising = Fraction(1)
    if l >= 3:
        rising = Fraction(prod(2 * n + 1 + i for i in range(l - 3)))
    else:
        rising = Fraction(1, prod(2 * n + 1 - i for i in range(1, 3 - l + 1)))
    return rising * prod(comb(2 * m, m) for m in mu.parts) / automorphism_count(mu)


def test_connected_simple_numbers_genus_zero():
    table = connected_numbers("simple", 5, 7)
    for n in range(1, 6):
        for mu in partitions_of(n):
            if mu.size + mu.length - 2 <= 7:
                assert table.lookup(0, mu) == _hurwitz_formula(mu), mu


def test_connected_monotone_numbers_genus_zero():
    table = connected_numbers("monotone", 5, 8)
    for n in range(1, 6):
        for mu in partitions_of(n):
            assert table.lookup(0, mu) == _monotone_genus_zero(mu), mu


def test_connected_table_outputs():
    table = connected_numbers("monotone", 3, 3)
    csv_text = table.to_csv()
    assert csv_text.splitlines()[0] == "flavor,g,mu,count,value"
    assert table.to_json()["rows"][0] == {"flavor": "monotone", "g": 0, "mu": "1", "count": 0, "value": "1/1"}


def test_elsv_k_values():
    K = elsv_k_coefficients(4)
    assert K == [-3, Fraction(-21, 2), -69, Fraction(-2529, 4)]


def test_quasipolynomiality_stable_cases():
    rep = quasipolynomiality_check(1, 1)
    assert rep.passed and rep.fitted_degree == 1
    rep = quasipolynomiality_check(0, 3, max_n=7)
    assert rep.passed and rep.fitted_degree == 0


def test_quasipolynomiality_detects_non_polynomial_data():
    # a degree bound that is too small must be reported
    rep = quasipolynomiality_check(1, 1, degree_bound=0)
    assert not rep.passed and rep.first_failure is not None
