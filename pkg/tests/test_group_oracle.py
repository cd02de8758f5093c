from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from hurwitzkp import acceptance
from hurwitzkp.blocks import BlockSpec
from hurwitzkp.errors import DomainError, ResourceError
from hurwitzkp.group_oracle import (
    ClassAlgebraElement,
    Permutation,
    brute_hurwitz,
    class_product,
    completed_cycle_element,
    free_group_element,
    free_single_element,
    jucys_symmetric,
    literal_hurwitz,
    symmetric_group,
)
from hurwitzkp.characters import character
from hurwitzkp.hurwitz import block_eigenvalue, hurwitz_number
from hurwitzkp.partitions import Partition, class_size, dimension, partitions_of

perm5 = st.permutations(range(1, 6)).map(Permutation)


@given(perm5, perm5, perm5)
def test_permutation_group_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == Permutation.identity(5)
    # conjugation preserves cycle type
    assert (b * a * b.inverse()).cycle_type() == a.cycle_type()


def test_composition_convention():
    p = Permutation.from_cycles(3, [(1, 2)])
    q = Permutation.from_cycles(3, [(2, 3)])
    # (p q)(i) = p(q(i))
    assert (p * q)(2) == p(q(2)) == 3
    assert (p * q).cycle_type() == Partition.of([3])


def test_group_tables():
    grp = symmetric_group(5)
    assert grp.order == 120
    assert [int(x) for x in grp.class_sizes] == [class_size(c) for c in grp.classes]
    assert len(grp.transpositions) == 10


def test_structure_constants_are_symmetric():
    grp = symmetric_group(5)
    c = grp.structure_constants()
    assert (c == c.transpose(1, 0, 2)).all()
    # a class times the identity class is itself
    e = grp.class_index[Partition((1,) * 5)]
    for g in range(len(grp.classes)):
        assert c[e, g, g] == 1


def test_limit_guard():
    with pytest.raises(ResourceError):
        symmetric_group(8)
    with pytest.raises(ResourceError):
        brute_hurwitz(Partition.of([8]), Partition.of([8]))


def test_class_algebra_json_round_trip():
    x = jucys_symmetric(5, "h", 2)
    assert ClassAlgebraElement.from_json(5, x.to_json()) == x
    assert x.to_json() == {"3,1,1": "2/1", "2,2,1": "1/1", "1,1,1,1,1": "10/1"}


@pytest.mark.parametrize("n", [4, 5])
def test_small_w_tables(n):
    for b in range(4):
        assert jucys_symmetric(n, "h", b) == acceptance.catalan_w_table(n, b)


def test_power_sum_zero_is_number_of_variables():
    assert jucys_symmetric(4, "p", 0) == ClassAlgebraElement.identity(4) * 3


@pytest.mark.parametrize("n", range(2, 6))
def test_free_group_sign_convention(n):
    # the free-group block is h_b(J), computed here with signed compositions of free-single blocks
    for b in range(5):
        assert free_group_element(n, b) == jucys_symmetric(n, "h", b)


def test_completed_two_cycle_is_the_transposition_class():
    # the completed 2-cycle has no lower corrections
    for n in range(2, 6):
        assert completed_cycle_element(n, 2) == ClassAlgebraElement.class_sum(n, Partition.of([2]).padded(n))


def central_eigenvalue(x: ClassAlgebraElement, lam: Partition) -> Fraction:
    return sum((c * class_size(a) * character(lam, a) for a, c in x.coeffs.items()), Fraction(0)) / dimension(lam)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_completed_cycles_act_by_their_eigenvalues(r):
    for n in range(1, 6):
        x = completed_cycle_element(n, r)
        for lam in partitions_of(n):
            assert central_eigenvalue(x, lam) == block_eigenvalue(BlockSpec.completed(r), lam)


LITERAL_FLAVORS = [
    [BlockSpec.strict(2)],
    [BlockSpec.monotone(2)],
    [BlockSpec.atlantes(2)],
    [BlockSpec.free_single(1), BlockSpec.free_single(2)],
    [BlockSpec.free_group(3)],
    [BlockSpec.class_sum(Partition.of([3]))],
    [BlockSpec.completed(2), BlockSpec.completed(1)],
    [BlockSpec.hyper_w(Fraction(1, 3))],
]


@pytest.mark.parametrize("blocks", LITERAL_FLAVORS, ids=lambda b: "+".join(map(str, b)))
def test_literal_enumeration_agrees(blocks):
    for n in (3, 4):
        for mu, nu in product(partitions_of(n), repeat=2):
            assert literal_hurwitz(mu, nu, blocks) == brute_hurwitz(mu, nu, blocks)


def test_hyper_z_is_not_in_the_oracle():
    with pytest.raises(DomainError):
        brute_hurwitz(Partition.of([2]), Partition.of([2]), [BlockSpec.hyper_z(Fraction(1, 2))])


@pytest.mark.parametrize("n", range(1, 6))
def test_swap_invariance(n):
    blocks = [BlockSpec.monotone(2), BlockSpec.strict(1)]
    for mu, nu in product(partitions_of(n), repeat=2):
        assert brute_hurwitz(mu, nu, blocks) == brute_hurwitz(nu, mu, blocks)


def test_class_product_commutes():
    a = jucys_symmetric(5, "sigma", 2)
    b = free_single_element(5, 1)
    assert class_product(a, b) == class_product(b, a)


problems = st.integers(1, 5).flatmap(
    lambda n: st.tuples(
        st.sampled_from(partitions_of(n)),
        st.sampled_from(partitions_of(n)),
        st.lists(st.sampled_from(["strict", "monotone", "atlantes", "free_single", "free_group"]), max_size=2),
        st.lists(st.integers(0, 3), min_size=2, max_size=2),
    )
)


@given(problems)
def test_engine_matches_oracle(problem):
    mu, nu, flavors, bs = problem
    blocks = [BlockSpec(f, b) for f, b in zip(flavors, bs)]
    assert hurwitz_number(mu, nu, blocks) == brute_hurwitz(mu, nu, blocks)
