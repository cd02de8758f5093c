from fractions import Fraction

import pytest

from hurwitzkp.characters import character, character_table, p_from_t, schur_eval, schur_in_p
from hurwitzkp.partitions import Partition, centralizer_size, dimension, partitions_of


@pytest.mark.parametrize("n", range(1, 7))
def test_row_orthogonality(n):
    table = character_table(n)
    parts = partitions_of(n)
    for a in parts:
        for b in parts:
            s = sum(Fraction(table[a, mu] * table[b, mu], centralizer_size(mu)) for mu in parts)
            assert s == (1 if a == b else 0)


@pytest.mark.parametrize("n", range(1, 7))
def test_character_at_identity_is_dimension(n):
    for lam in partitions_of(n):
        assert character(lam, Partition((1,) * n)) == dimension(lam)


def test_known_values():
    assert character(Partition.of([2, 1]), Partition.of([3])) == -1
    assert character(Partition.of([2, 2]), Partition.of([2, 2])) == 2
    assert character(Partition.of([3, 1, 1]), Partition.of([2, 2, 1])) == -2


@pytest.mark.parametrize("n", range(1, 6))
def test_schur_at_principal_point(n):
    # p_k = 1 for all k is the single-variable specialisation: only one-row Schur functions survive
    for lam in partitions_of(n):
        assert schur_eval(lam, lambda k: 1) == (1 if lam.length == 1 else 0)


def test_schur_in_p_matches_characters():
    lam = Partition.of([2, 1])
    coeffs = schur_in_p(lam)
    assert coeffs[Partition.of([1, 1, 1])] == Fraction(1, 3)
    assert coeffs[Partition.of([3])] == Fraction(-1, 3)
    assert coeffs.get(Partition.of([2, 1]), 0) == 0


def test_p_from_t_scales_by_index():
    assert p_from_t([Fraction(1), Fraction(1, 2), 3]) == {1: 1, 2: 1, 3: 9}
