"""Irreducible characters of S_n and Schur functions in power sums."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping

from .errors import DomainError
from .partitions import Partition, centralizer_size, partitions_of


def character(lam: Partition, mu: Partition) -> int:
    """chi_lam evaluated on the class of cycle type ``mu`` (Murnaghan-Nakayama)."""
    if lam.size != mu.size:
        raise DomainError(f"|{lam}| != |{mu}|")
    return _mn(lam.parts, mu.parts)


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    ell = len(lam)
    # beta-set (first-column hook lengths); a k-rim hook is a bead moved k steps down
    betas = [lam[i] + ell - 1 - i for i in range(ell)]
    beads = set(betas)
    total = 0
    for b in betas:
        c = b - k
        if c < 0 or c in beads:
            continue
        sign = -1 if sum(1 for x in betas if c < x < b) % 2 else 1
        new = sorted((x if x != b else c for x in betas), reverse=True)
        shape = tuple(p for p in (new[i] - (ell - 1 - i) for i in range(ell)) if p > 0)
        total += sign * _mn(shape, rest)
    return total


def character_table(n: int) -> dict[tuple[Partition, Partition], int]:
    parts = partitions_of(n)
    return {(lam, mu): character(lam, mu) for lam in parts for mu in parts}


def schur_in_p(lam: Partition) -> dict[Partition, Fraction]:
    """s_lam = sum_mu chi_lam(mu) p_mu / Z_mu, as {mu: coefficient}; zero terms dropped."""
    out = {}
    for mu in partitions_of(lam.size):
        chi = character(lam, mu)
        if chi:
            out[mu] = Fraction(chi, centralizer_size(mu))
    return out


def p_monomial(mu: Partition, p: Callable[[int], object] | Mapping[int, object]):
    """Evaluate p_mu = prod p_{mu_i} given values of the single power sums."""
    get = (lambda k: p.get(k, 0)) if isinstance(p, Mapping) else p
    val = 1
    for part in mu:
        val = val * get(part)
    return val


def schur_eval(lam: Partition, p: Callable[[int], object] | Mapping[int, object]):
    """Evaluate s_lam at the given power-sum values (any ring supporting + and *)."""
    val = 0
    for mu, c in schur_in_p(lam).items():
        val = val + p_monomial(mu, p) * c
    return val


def p_from_t(t: Mapping[int, object] | list) -> dict[int, object]:
    """Convert KP times to power sums, p_k = k t_k (t given 1-indexed or as a list t_1, t_2, ...)."""
    if not isinstance(t, Mapping):
        t = {k: v for k, v in enumerate(t, start=1)}
    return {k: k * v for k, v in t.items()}
