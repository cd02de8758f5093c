"""Integer partitions and the Young-diagram data hanging off them."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator

from .errors import DomainError


@dataclass(frozen=True, order=False)
class Partition:
    """A weakly decreasing tuple of positive integers.

    Instances are immutable and hashable; equality is structural.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise DomainError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Iterable[int]) -> Partition:
        """Build from parts in any order (sorted for you)."""
        return cls(tuple(sorted((int(p) for p in parts), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> Partition:
        text = text.strip().strip("[]()")
        if not text:
            return cls(())
        return cls.of(int(s) for s in text.replace(" ", "").split(",") if s)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self.parts))

    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def boxes(self) -> Iterator[tuple[int, int]]:
        """(row, column) pairs, 1-based, row by row."""
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield i, j

    def padded(self, n: int) -> Partition:
        """Append 1's up to size n (for cycle types given by their non-trivial cycles)."""
        if self.size > n:
            raise DomainError(f"{self} does not fit in size {n}")
        return Partition(self.parts + (1,) * (n - self.size))

    def to_json(self) -> list[int]:
        return list(self.parts)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order, e.g. [4], [3,1], [2,2], ..."""
    if n < 0:
        raise DomainError("n must be non-negative")
    return list(_partitions_cached(n))


@lru_cache(maxsize=None)
def _partitions_cached(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _gen(n, n))


def _gen(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _gen(n - first, first):
            yield (first,) + rest


def content_multiset(lam: Partition) -> tuple[int, ...]:
    """Sorted contents ``j - i`` of all boxes of ``lam``."""
    return tuple(sorted(j - i for i, j in lam.boxes()))


def jucys_contents(lam: Partition) -> tuple[int, ...]:
    """Contents of boxes 2..n: the multiset with one zero (box (1,1)) removed.

    Symmetric polynomials of the Jucys-Murphy elements act on the isotypic
    component of ``lam`` by evaluation at these values.
    """
    cs = list(content_multiset(lam))
    if cs:
        cs.remove(0)
    return tuple(cs)


def centralizer_size(mu: Partition) -> int:
    """Z_mu = prod(parts) * prod over part values of multiplicity!"""
    return prod(mu.parts) * prod(factorial(m) for m in mu.multiplicities().values())


def class_size(mu: Partition) -> int:
    return factorial(mu.size) // centralizer_size(mu)


def hook_lengths(lam: Partition) -> list[int]:
    conj = lam.conjugate()
    return [lam[i - 1] - j + conj[j - 1] - i + 1 for i, j in lam.boxes()]


def dimension(lam: Partition) -> int:
    """Dimension of the irreducible S_n-module via the hook-length formula."""
    return factorial(lam.size) // prod(hook_lengths(lam))


def automorphism_count(mu: Partition) -> int:
    """|Aut(mu)| = product of multiplicity factorials."""
    return prod(factorial(m) for m in mu.multiplicities().values())
