"""Hurwitz numbers by the character formula and Jucys content eigenvalues."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterable, Sequence

from .blocks import BlockSpec
from .characters import character, schur_in_p
from .errors import DomainError, PoleError
from .partitions import (
    Partition,
    automorphism_count,
    centralizer_size,
    class_size,
    content_multiset,
    dimension,
    jucys_contents,
    partitions_of,
)
from .series import Grading, Poly, TruncatedSeries, double_factorial, fmt_rational

HALF = Fraction(1, 2)


# -- symmetric polynomials of a content vector -----------------------------------------


def elementary(values: Sequence[int], b: int) -> int:
    e = [1] + [0] * b
    for v in values:
        for k in range(b, 0, -1):
            e[k] += e[k - 1] * v
    return e[b]


def complete(values: Sequence[int], b: int) -> int:
    h = [1] + [0] * b
    for v in values:
        for k in range(1, b + 1):
            h[k] += h[k - 1] * v
    return h[b]


def power_sum(values: Sequence[int], b: int) -> int:
    if b == 0:
        return len(values)
    return sum(v**b for v in values)


# -- eigenvalues -----------------------------------------------------------------------


def _class_eigenvalue(alpha: Partition, lam: Partition) -> Fraction:
    return Fraction(class_size(alpha) * character(lam, alpha), dimension(lam))


def _compositions(b: int, k: int):
    if k == 1:
        yield (b,)
        return
    for first in range(1, b - k + 2):
        for rest in _compositions(b - first, k - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def block_eigenvalue(block: BlockSpec, lam: Partition) -> Fraction:
    """Scalar by which the central element of ``block`` acts on the isotypic component of ``lam``."""
    f, p, n = block.flavor, block.param, lam.size
    if f == "strict":
        return Fraction(elementary(jucys_contents(lam), p))
    if f == "monotone":
        return Fraction(complete(jucys_contents(lam), p))
    if f == "atlantes":
        return Fraction(power_sum(jucys_contents(lam), p))
    if f == "free_single":
        return sum((_class_eigenvalue(a, lam) for a in partitions_of(n) if a.length == n - p), Fraction(0))
    if f == "free_group":
        if p == 0:
            return Fraction(1)
        single = [None] + [block_eigenvalue(BlockSpec.free_single(j), lam) for j in range(1, p + 1)]
        total = Fraction(0)
        for k in range(1, p + 1):
            sign = (-1) ** (k + p)
            for comp in _compositions(p, k):
                total += sign * prod((single[j] for j in comp), start=Fraction(1))
        return total
    if f == "class_sum":
        if p.size > n:
            return Fraction(0)
        return _class_eigenvalue(p.padded(n), lam)
    if f == "completed":
        r = p
        s = sum(((lam[i - 1] - i + HALF) ** r - (-i + HALF) ** r for i in range(1, lam.length + 1)), Fraction(0))
        return s / factorial(r)
    if f == "hyper_w":
        return prod((1 + c * p for c in content_multiset(lam)), start=Fraction(1))
    if f == "hyper_z":
        out = Fraction(1)
        for c in content_multiset(lam):
            d = 1 - c * p
            if d == 0:
                raise PoleError(f"1 - ({c})({p}) = 0 for a box of {lam}")
            out /= d
        return out
    raise DomainError(f"unknown flavor {f}")


# -- Hurwitz problems ------------------------------------------------------------------------


@dataclass(frozen=True)
class HurwitzProblem:
    mu: Partition
    nu: Partition
    blocks: tuple[BlockSpec, ...] = ()
    mode: str = "full"

    def __post_init__(self):
        if self.mu.size != self.nu.size:
            raise DomainError(f"|{self.mu}| != |{self.nu}|")
        if self.mode not in ("full", "pointwise-fibers"):
            raise DomainError(f"unknown automorphism mode {self.mode!r}")
        object.__setattr__(self, "blocks", tuple(self.blocks))

    @property
    def n(self) -> int:
        return self.mu.size

    def genus(self) -> Fraction | None:
        """Genus from Riemann-Hurwitz, b = 2g - 2 + l(mu) + l(nu); None if some block has no fixed b."""
        try:
            b = sum(blk.b for blk in self.blocks)
        except DomainError:
            return None
        return Fraction(b - self.mu.length - self.nu.length + 2, 2)

    def to_json(self) -> dict:
        return {
            "mu": str(self.mu),
            "nu": str(self.nu),
            "blocks": [b.to_json() for b in self.blocks],
            "mode": self.mode,
        }


def hurwitz_number(problem: HurwitzProblem | Partition, nu: Partition | None = None, blocks: Iterable[BlockSpec] = (), mode: str = "full") -> Fraction:
    """sum_lam chi_lam(mu) chi_lam(nu) prod_i egv_lam(B_i), divided by Z_mu Z_nu (or prod mu_i prod nu_i)."""
    if not isinstance(problem, HurwitzProblem):
        problem = HurwitzProblem(problem, nu, tuple(blocks), mode)
    mu, nu = problem.mu, problem.nu
    total = Fraction(0)
    for lam in partitions_of(problem.n):
        cc = character(lam, mu) * character(lam, nu)
        if not cc:
            continue
        w = Fraction(cc)
        for blk in problem.blocks:
            w *= block_eigenvalue(blk, lam)
            if not w:
                break
        total += w
    if problem.mode == "full":
        return total / (centralizer_size(mu) * centralizer_size(nu))
    return total / (prod(mu.parts) * prod(nu.parts))


def hypergeometric_coefficient(qpow: int, wpows: Sequence[int], zpows: Sequence[int], mu: Partition, nu: Partition) -> Fraction:
    """[q^n prod w_a^c_a prod z_b^d_b p_mu(t) p_nu(s)] of sum_lam q^|lam| prod_a prod_box(1 + c w_a) prod_b prod_box 1/(1 - c z_b) s_lam(t) s_lam(s).

    Computed by polynomial/series expansion of the content products and the
    Schur-to-power-sum coefficients, without going through block eigenvalues.
    """
    if mu.size != nu.size:
        raise DomainError(f"|{mu}| != |{nu}|")
    n = mu.size
    if qpow != n:
        return Fraction(0)
    total = Fraction(0)
    for lam in partitions_of(n):
        s = schur_in_p(lam)
        coef = s.get(mu, 0) * s.get(nu, 0)
        if not coef:
            continue
        cs = content_multiset(lam)
        for c_a in wpows:
            poly = Poly.const(1)
            for c in cs:
                poly = poly * Poly((1, c))
            coef *= poly.c[c_a] if c_a < len(poly.c) else 0
        for d_b in zpows:
            series = [Fraction(1)] + [Fraction(0)] * d_b
            for c in cs:
                geo = [Fraction(c) ** k for k in range(d_b + 1)]
                series = [sum(series[i] * geo[k - i] for i in range(k + 1)) for k in range(d_b + 1)]
            coef *= series[d_b]
        total += coef
    return total


def newton_check(lam: Partition, order: int) -> bool:
    """(sum_b z^b h_b)(sum_b (-z)^b sigma_b) = 1 on the content vector, to the given order."""
    cs = jucys_contents(lam)
    h = [complete(cs, b) for b in range(order + 1)]
    s = [(-1) ** b * elementary(cs, b) for b in range(order + 1)]
    prodc = [sum(h[i] * s[k - i] for i in range(k + 1)) for k in range(order + 1)]
    return prodc == [1] + [0] * order


def lascoux_thibon_check(lam: Partition, order: int) -> bool:
    """sum_{k>=1} z^k p_k(contents)/k! == E0(z)/zeta(z) - |lam| up to z^order.

    E0(z) = sum_r z^r/r! sum_i [(lam_i - i + 1/2)^r - (-i + 1/2)^r] and
    zeta(z) = e^{z/2} - e^{-z/2}.  Both have zero constant term, so both are
    divided by z before inverting.
    """
    if order < 1:
        raise DomainError("order must be >= 1")
    cs = jucys_contents(lam)
    lhs = {k: Fraction(power_sum(cs, k), factorial(k)) for k in range(1, order + 1)}
    lhs[0] = Fraction(0)

    def series(coeffs):
        return TruncatedSeries.univariate("z", coeffs, 0, order)

    e0_over_z = series(
        {
            r - 1: sum(((lam[i - 1] - i + HALF) ** r - (-i + HALF) ** r for i in range(1, lam.length + 1)), Fraction(0)) / factorial(r)
            for r in range(1, order + 2)
        }
    )
    # zeta(z)/z = sum_{m odd} z^(m-1) / (2^(m-1) m!)
    zeta_over_z = series({m - 1: Fraction(1, 2 ** (m - 1) * factorial(m)) for m in range(1, order + 2, 2)})
    rhs = e0_over_z * zeta_over_z.inverse() - lam.size
    return all(rhs[k] == lhs[k] for k in range(order + 1))


def hypermap_count(mu: Partition, r: int, b: int) -> Fraction:
    """Three-point covers: sum over the cycle type kappa over 1 with l(kappa) = n - b."""
    n = mu.size
    if n % r:
        raise DomainError(f"{r} does not divide {n}")
    nu = Partition((r,) * (n // r))
    return sum(
        (hurwitz_number(mu, nu, [BlockSpec.class_sum(k)]) for k in partitions_of(n) if k.length == n - b),
        Fraction(0),
    )


# -- connected numbers --------------------------------------------------------------------

SINGLE_BLOCK_FAMILIES = ("monotone", "strict", "free_single", "free_group")
EXP_FAMILIES = ("atlantes", "simple")


@dataclass
class ConnectedTable:
    """Connected numbers of one block family, indexed by ramification count and profile."""

    family: str
    orbifold: int
    power: int
    max_n: int
    max_count: int
    by_count: dict[tuple[int, Partition], Fraction] = field(default_factory=dict)

    def nu_length(self, mu: Partition) -> int:
        return mu.size // self.orbifold

    def count_for(self, g: int, mu: Partition) -> int | None:
        """Block count m with b = 2g - 2 + l(mu) + l(nu); None if not an integer multiple of the power."""
        b = 2 * g - 2 + mu.length + self.nu_length(mu)
        if b < 0 or b % self.power:
            return None
        return b // self.power

    def genus(self, count: int, mu: Partition) -> int | None:
        twice = count * self.power - mu.length - self.nu_length(mu) + 2
        if twice < 0 or twice % 2:
            return None
        return twice // 2

    def lookup(self, g: int, mu: Partition) -> Fraction:
        if mu.size > self.max_n:
            raise DomainError(f"|{mu}| exceeds the truncation {self.max_n}")
        if mu.size % self.orbifold:
            return Fraction(0)
        m = self.count_for(g, mu)
        if m is None:
            return Fraction(0)
        if m > self.max_count:
            raise DomainError(f"count {m} exceeds the truncation {self.max_count}")
        return self.by_count.get((m, mu), Fraction(0))

    def by_genus(self) -> dict[tuple[int, Partition], Fraction]:
        out = {}
        for (m, mu), v in self.by_count.items():
            g = self.genus(m, mu)
            if g is not None:
                out[(g, mu)] = v
        return out

    def rows(self) -> list[dict]:
        out = []
        for (m, mu), v in sorted(self.by_count.items(), key=lambda t: (t[0][1].size, t[0][0], t[0][1].parts)):
            g = self.genus(m, mu)
            out.append(
                {
                    "flavor": self.family,
                    "g": g,
                    "mu": str(mu),
                    "count": m,
                    "value": fmt_rational(v),
                }
            )
        return out

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "orbifold": self.orbifold,
            "power": self.power,
            "max_n": self.max_n,
            "max_count": self.max_count,
            "rows": self.rows(),
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=["flavor", "g", "mu", "count", "value"], lineterminator="\n")
        w.writeheader()
        for row in self.rows():
            w.writerow(row)
        return buf.getvalue()


def _family_generator(family: str, lam: Partition, max_count: int, power: int) -> list[Fraction]:
    """Coefficients of u^m in the eigenvalue generating function of the family on lam."""
    cs = jucys_contents(lam)
    if family in SINGLE_BLOCK_FAMILIES:
        return [block_eigenvalue(BlockSpec(family, m), lam) for m in range(max_count + 1)]
    if family in EXP_FAMILIES:
        e = Fraction(power_sum(cs, power)) if power else Fraction(lam.size - 1)
        return [e**m / factorial(m) for m in range(max_count + 1)]
    raise DomainError(f"unknown family {family!r}")


def disconnected_series(family: str, max_n: int, max_count: int, orbifold: int = 1, power: int = 1) -> TruncatedSeries:
    """sum_{n, mu, m} h(mu, (orbifold^(n/orbifold)), family block m) p_mu u^m, m!-divided for exponential families."""
    names = tuple(f"p{k}" for k in range(1, max_n + 1)) + ("u",)
    gradings = (
        Grading(tuple(range(1, max_n + 1)) + (0,), max_n),
        Grading((0,) * max_n + (1,), max_count),
    )
    terms: dict[tuple, Fraction] = {}
    for n in range(0, max_n + 1, orbifold):
        if n == 0:
            terms[(0,) * (max_n + 1)] = Fraction(1)
            continue
        nu = Partition((orbifold,) * (n // orbifold))
        gens = {lam: _family_generator(family, lam, max_count, power) for lam in partitions_of(n)}
        for mu in partitions_of(n):
            mono_p = [0] * max_n
            for part in mu:
                mono_p[part - 1] += 1
            norm = centralizer_size(mu) * centralizer_size(nu)
            for m in range(max_count + 1):
                total = Fraction(0)
                for lam, gen in gens.items():
                    if gen[m]:
                        total += character(lam, mu) * character(lam, nu) * gen[m]
                if total:
                    terms[tuple(mono_p) + (m,)] = total / norm
    return TruncatedSeries(names, gradings, terms)


@lru_cache(maxsize=32)
def connected_numbers(family: str, max_n: int, max_count: int, orbifold: int = 1, power: int = 1) -> ConnectedTable:
    """Connected numbers from the formal logarithm of the disconnected generating series.

    Single-block families (monotone, strict, free_single, free_group) are
    weighted by u^b.  Exponential families use m identical blocks weighted by
    u^m/m!: "simple" is m copies of the 2-cycle class, "atlantes" m copies of
    Atlantes(power); their connected numbers are m! [u^m p_mu] log Z.
    """
    if family == "simple":
        power = 1
    if max_n < 1 or max_count < 0:
        raise DomainError("truncation must be positive")
    z = disconnected_series(family, max_n, max_count, orbifold, power)
    log_z = z.log()
    table = ConnectedTable(family, orbifold, power, max_n, max_count)
    for mono, v in log_z.terms.items():
        mu = Partition.of(k + 1 for k, e in enumerate(mono[:-1]) for _ in range(e))
        m = mono[-1]
        if family in EXP_FAMILIES:
            v = v * factorial(m)
        table.by_count[(m, mu)] = v
    return table


# -- ELSV-adjacent fragments -------------------------------------------------------------------


def elsv_k_coefficients(L: int) -> list[Fraction]:
    """K_1..K_L defined by exp(-sum K_l U^l) = sum_k (2k+1)!! U^k."""
    if L < 1:
        raise DomainError("L must be >= 1")
    f = TruncatedSeries.univariate("U", {k: double_factorial(2 * k + 1) for k in range(L + 1)}, 0, L)
    minus_k = f.log()
    return [-Fraction(minus_k[l]) for l in range(1, L + 1)]


def _binom_prefactor(mu_vec: Sequence[int]) -> int:
    return prod(comb(2 * m, m) for m in mu_vec)


@dataclass
class QuasiReport:
    g: int
    ell: int
    degree_bound: int
    samples: dict[tuple[int, ...], Fraction]
    passed: bool
    fitted_degree: int | None
    first_failure: dict | None

    def to_json(self) -> dict:
        return {
            "g": self.g,
            "ell": self.ell,
            "degree_bound": self.degree_bound,
            "passed": self.passed,
            "fitted_degree": self.fitted_degree,
            "first_failure": self.first_failure,
            "samples": {",".join(map(str, k)): fmt_rational(v) for k, v in sorted(self.samples.items())},
        }


def _finite_difference(values: list[Fraction], order: int) -> list[Fraction]:
    for _ in range(order):
        values = [b - a for a, b in zip(values, values[1:])]
    return values


def _lines(samples: dict[tuple[int, ...], Fraction], ell: int):
    """Maximal axis-parallel runs mu_i = 1, 2, ... with the other coordinates fixed."""
    for i in range(ell):
        bases = sorted({k[:i] + k[i + 1 :] for k in samples})
        for base in bases:
            run = []
            j = 1
            while (key := base[:i] + (j,) + base[i:]) in samples:
                run.append(samples[key])
                j += 1
            if run:
                yield i, base, run


def _check_degree(samples, ell: int, D: int):
    """None if all (D+1)-st differences vanish along every usable line, else a failure record."""
    usable = False
    for i, base, run in _lines(samples, ell):
        if D < 0:
            usable = True
            for j, v in enumerate(run, start=1):
                if v:
                    return {"variable": i, "base": list(base), "order": 0, "at": j, "value": fmt_rational(v)}
            continue
        if len(run) < D + 2:
            continue
        usable = True
        diffs = _finite_difference(run, D + 1)
        for j, v in enumerate(diffs, start=1):
            if v:
                return {"variable": i, "base": list(base), "order": D + 1, "at": j, "value": fmt_rational(v)}
    if not usable:
        raise DomainError(f"not enough samples for degree bound {D}")
    return None


def quasipolynomiality_check(g: int, ell: int, degree_bound: int | None = None, max_n: int = 8, family: str = "monotone") -> QuasiReport:
    """Test that |Aut mu| h_{g,mu} / prod binom(2 mu_i, mu_i) is a polynomial of degree <= D in mu.

    The |Aut mu| factor converts the coefficient of p_mu into the coefficient
    of the monomial x_1^mu_1 ... x_l^mu_l of the symmetric generating function.
    The default bound is 3g - 3 + l; a negative bound asks for identically
    vanishing values.  Samples are all vectors with positive entries summing
    to at most ``max_n``.
    """
    D = 3 * g - 3 + ell if degree_bound is None else degree_bound
    max_count = 2 * g - 2 + ell + max_n
    table = connected_numbers(family, max_n, max(0, max_count))
    samples: dict[tuple[int, ...], Fraction] = {}

    def vectors(prefix, remaining, k):
        if k == 0:
            yield prefix
            return
        for m in range(1, remaining - (k - 1) + 1):
            yield from vectors(prefix + (m,), remaining - m, k - 1)

    for vec in vectors((), max_n, ell):
        mu = Partition.of(vec)
        h = table.lookup(g, mu)
        samples[vec] = h * automorphism_count(mu) / _binom_prefactor(vec)
    if not samples:
        raise DomainError("no samples in range")
    failure = _check_degree(samples, ell, D)
    fitted = None
    longest = max(len(run) for _, _, run in _lines(samples, ell))
    for d in range(-1, longest - 1):
        if _check_degree(samples, ell, d) is None:
            fitted = d
            break
    return QuasiReport(g, ell, D, samples, failure is None, fitted, failure)
