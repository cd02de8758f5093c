from math import factorial

import pytest
from hypothesis import given, strategies as st

from hurwitzkp.errors import DomainError
from hurwitzkp.partitions import (
    Partition,
    automorphism_count,
    centralizer_size,
    class_size,
    content_multiset,
    dimension,
    jucys_contents,
    partitions_of,
)

PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]

partitions = st.integers(1, 9).flatmap(lambda n: st.sampled_from(partitions_of(n)))


@pytest.mark.parametrize("n", range(1, 11))
def test_partition_counts(n):
    assert len(partitions_of(n)) == PARTITION_COUNTS[n]


def test_parse_and_str_round_trip():
    mu = Partition.parse("3,1,1")
    assert str(mu) == "3,1,1"
    assert Partition.parse(str(mu)) == mu
    assert Partition.of([1, 3, 1]) == mu
    assert mu.multiplicities() == {3: 1, 1: 2}


@pytest.mark.parametrize("text", ["3,-1", "a,b", "0"])
def test_parse_rejects_garbage(text):
    with pytest.raises((DomainError, ValueError)):
        Partition.parse(text)


@given(partitions)
def test_conjugate_is_an_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().size == lam.size


@given(partitions)
def test_contents_and_boxes(lam):
    assert len(content_multiset(lam)) == lam.size
    # J_1 = 0 drops the box with content 0 in the first row
    assert len(jucys_contents(lam)) == lam.size - 1
    assert sorted(content_multiset(lam.conjugate())) == sorted(-c for c in content_multiset(lam))


@pytest.mark.parametrize("n", range(1, 8))
def test_sum_of_squared_dimensions(n):
    assert sum(dimension(lam) ** 2 for lam in partitions_of(n)) == factorial(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_class_sizes_sum_to_group_order(n):
    assert sum(class_size(mu) for mu in partitions_of(n)) == factorial(n)
    for mu in partitions_of(n):
        assert class_size(mu) * centralizer_size(mu) == factorial(n)


def test_automorphisms():
    assert automorphism_count(Partition.of([2, 2, 1])) == 2
    assert automorphism_count(Partition.of([1, 1, 1])) == 6
