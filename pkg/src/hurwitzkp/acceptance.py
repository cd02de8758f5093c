"""The acceptance criteria as plain functions.

Each criterion returns a ``CriterionResult``; ``run_all`` runs them in order.
They are shared by the test-suite and by ``hurwitzkp selftest``.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

from . import boson, curves, group_oracle as go, hurwitz as hw
from .blocks import BlockSpec
from .partitions import Partition, partitions_of
from .series import RatFunc, RatFuncRing, TruncatedSeries, double_factorial


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    parts: dict = field(default_factory=dict)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number}: {self.title} ({self.seconds:.1f}s) {self.detail}".rstrip()

    def to_json(self) -> dict:
        return {
            "number": self.number,
            "title": self.title,
            "passed": self.passed,
            "detail": self.detail,
            "parts": self.parts,
        }


def _timed(number: int, title: str, fn) -> CriterionResult:
    start = time.perf_counter()
    passed, detail, parts = fn()
    return CriterionResult(number, title, passed, detail, time.perf_counter() - start, parts)


def _fail_first(checks):
    """(all passed, first failing label)."""
    for label, ok in checks:
        if not ok:
            return False, label
    return True, None


# 1 ------------------------------------------------------------------------------------------


def criterion_1():
    def run():
        start = time.perf_counter()
        checks = []
        for n in range(1, 7):
            for b in range(n):
                checks.append((f"n={n} b={b}", go.jucys_symmetric(n, "sigma", b) == go.free_single_element(n, b)))
        elapsed = time.perf_counter() - start
        ok, bad = _fail_first(checks)
        ok = ok and elapsed < 60
        detail = f"{len(checks)} cases in {elapsed:.2f}s" + (f"; first failure {bad}" if bad else "")
        return ok, detail, {"cases": len(checks), "seconds": round(elapsed, 3)}

    return _timed(1, "Jucys correspondence sigma_b(J) = sum over l(alpha)=n-b of C_alpha, n <= 6", run)


# 2 ------------------------------------------------------------------------------------------


def catalan(m: int) -> int:
    return comb(2 * m, m) // (m + 1)


def catalan_w_table(n: int, b: int) -> go.ClassAlgebraElement:
    """Closed-form class expansion of h_b(J_2..J_n) for b <= 3, with Catalan coefficients; a summand appears only if its cycle type fits in n."""
    C = catalan
    one = Partition((1,) * n)
    entries: list[tuple[tuple[int, ...], int]] = []
    if b == 0:
        entries = [((), 1)]
    elif b == 1:
        entries = [((2,), C(1))]
    elif b == 2:
        entries = [((3,), C(2)), ((2, 2), C(1) ** 2), ((), n * (n - 1) // 2)]
    elif b == 3:
        entries = [
            ((4,), C(3)),
            ((3, 2), C(2) * C(1)),
            ((2, 2, 2), C(1) ** 3),
            ((2,), (n + 1) * (n + 2) // 2 - 5),
        ]
    coeffs = {}
    for cyc, c in entries:
        if sum(cyc) <= n:
            coeffs[Partition(cyc).padded(n) if cyc else one] = c
    return go.ClassAlgebraElement(n, coeffs)


def criterion_2():
    def run():
        checks = []
        for n in (6, 7):
            for b in range(4):
                checks.append((f"n={n} b={b}", go.jucys_symmetric(n, "h", b) == catalan_w_table(n, b)))
        ok, bad = _fail_first(checks)
        return ok, f"{len(checks)} expansions" + (f"; first failure {bad}" if bad else ""), {}

    return _timed(2, "W_0..W_3 expansions with Catalan coefficients at n = 6, 7", run)


# 3 ------------------------------------------------------------------------------------------

JUCYS_FREE = ("strict", "monotone", "atlantes", "free_single", "free_group")


def equivalence_block_vectors(n: int, bmax: int = 4):
    for f in JUCYS_FREE:
        for b in range(bmax + 1):
            yield (BlockSpec(f, b),)
    for alpha in partitions_of(n):
        yield (BlockSpec.class_sum(alpha),)
    for b in range(bmax + 1):
        yield (BlockSpec.completed(2),) * b


def criterion_3():
    def run():
        count = 0
        for n in range(1, 6):
            parts = partitions_of(n)
            for blocks in equivalence_block_vectors(n):
                for mu in parts:
                    for nu in parts:
                        count += 1
                        a = hw.hurwitz_number(mu, nu, blocks)
                        b = go.brute_hurwitz(mu, nu, blocks)
                        if a != b:
                            return False, f"mismatch at mu={mu} nu={nu} blocks={[str(x) for x in blocks]}: {a} vs {b}", {}
        spots = 0
        parts6 = partitions_of(6)
        for i, blocks in enumerate(equivalence_block_vectors(6)):
            for j, (mu, nu) in enumerate([(parts6[0], parts6[-1]), (parts6[3], parts6[5]), (parts6[i % 11], parts6[(3 * i + 1) % 11])]):
                spots += 1
                a = hw.hurwitz_number(mu, nu, blocks)
                b = go.brute_hurwitz(mu, nu, blocks)
                if a != b:
                    return False, f"n=6 mismatch at mu={mu} nu={nu} blocks={[str(x) for x in blocks]}", {}
        return True, f"{count} exhaustive cases (n <= 5), {spots} spot checks at n = 6", {"exhaustive": count, "spots": spots}

    return _timed(3, "character formula = brute-force count for every flavor", run)


# 4 ------------------------------------------------------------------------------------------


def criterion_4():
    def run():
        ev = 0
        for n in range(1, 9):
            for lam in partitions_of(n):
                for b in range(n + 2):
                    ev += 1
                    if hw.block_eigenvalue(BlockSpec.strict(b), lam) != hw.block_eigenvalue(BlockSpec.free_single(b), lam):
                        return False, f"eigenvalue strict/free_single differ at {lam}, b={b}", {}
                    if hw.block_eigenvalue(BlockSpec.monotone(b), lam) != hw.block_eigenvalue(BlockSpec.free_group(b), lam):
                        return False, f"eigenvalue monotone/free_group differ at {lam}, b={b}", {}
        oc = 0
        for n in range(1, 6):
            for mu in partitions_of(n):
                for nu in partitions_of(n):
                    for b in range(5):
                        oc += 1
                        if go.brute_hurwitz(mu, nu, [BlockSpec.strict(b)]) != go.brute_hurwitz(mu, nu, [BlockSpec.free_single(b)]):
                            return False, f"oracle strict/free_single differ at {mu},{nu},b={b}", {}
                        if go.brute_hurwitz(mu, nu, [BlockSpec.monotone(b)]) != go.brute_hurwitz(mu, nu, [BlockSpec.free_group(b)]):
                            return False, f"oracle monotone/free_group differ at {mu},{nu},b={b}", {}
        return True, f"{ev} eigenvalue cases (n <= 8), {oc} oracle cases (n <= 5)", {}

    return _timed(4, "strict = free single and monotone = free group blocks", run)


# 5 ------------------------------------------------------------------------------------------


def criterion_5():
    def run():
        indices = [()] + [tuple(c) for k in (1, 2) for c in combinations_with_replacement(range(1, 4), k)]
        count = 0
        for n in range(1, 6):
            for mu in partitions_of(n):
                for nu in partitions_of(n):
                    for c in indices:
                        for d in indices:
                            count += 1
                            lhs = hw.hypergeometric_coefficient(n, c, d, mu, nu)
                            blocks = [BlockSpec.strict(x) for x in c] + [BlockSpec.monotone(x) for x in d]
                            rhs = go.brute_hurwitz(mu, nu, blocks)
                            if lhs != rhs:
                                return False, f"mismatch at mu={mu} nu={nu} w={c} z={d}: {lhs} vs {rhs}", {}
        return True, f"{count} coefficients (n <= 5, up to two w and two z factors)", {"cases": count}

    return _timed(5, "hypergeometric tau coefficients = (strict, monotone) block counts", run)


# 6 ------------------------------------------------------------------------------------------


def curve_runs():
    c1, c2 = Fraction(1, 3), Fraction(-2, 5)
    runs = []
    for r in (1, 2, 3):
        for form in ("default", "general", "polynomial"):
            runs.append(("monotone_orbifold", {"r": r}, 12, form))
    runs.append(("monotone", {"t": [Fraction(1), Fraction(1, 2)]}, 12, "default"))
    runs.append(("monotone", {"t": [Fraction(1), Fraction(1, 2)]}, 12, "polynomial"))
    for r in (1, 2):
        runs.append(("strict", {"r": r}, 12, "default"))
    for r in (1, 2):
        runs.append(("atlantes", {"r": r, "M": 22}, 10, "default"))
    runs.append(("double", {"t": [Fraction(1, 2), Fraction(-3, 4)]}, 10, "default"))
    runs.append(("simple", {}, 10, "double"))
    for c in (c1, c2, Fraction(0)):
        runs.append(("deformation", {"c": c}, 8, "default"))
    runs.append(("simple", {}, 8, "default"))
    return runs


def deformation_matches_simple_at_zero(N: int = 8) -> bool:
    """At c = 0 the deformation operator is minus the simple curve, monomial by monomial."""
    ring = curves.LaurentQRing()
    a = curves.deformation_operator(0, ring)
    b = curves.simple_operator(ring)
    for m in range(N + 2):
        lhs = a.act_monomial(m, ring)
        rhs = {e: -v for e, v in b.act_monomial(m, ring).items()}
        keys = set(lhs) | set(rhs)
        if any(not (lhs.get(e, 0) - rhs.get(e, 0) == 0) for e in keys):
            return False
    wave0 = curves.build_wave("deformation", {"c": 0}, N)
    simple = curves.build_wave("simple", {}, N)
    return all(wave0.coefficient(m) == simple.coefficient(m) for m in range(N + 1))


def criterion_6():
    def run():
        worst = 0.0
        reports = []
        for flavor, params, N, form in curve_runs():
            start = time.perf_counter()
            rep = curves.verify_curve(flavor, params, N, form)
            worst = max(worst, time.perf_counter() - start)
            reports.append(rep)
            if rep["status"] != "verified":
                return False, f"{flavor} {params} form={form}: {rep['first_failure']}", {}
        if not deformation_matches_simple_at_zero():
            return False, "c = 0 deformation does not reduce to the simple curve", {}
        ok = worst < 10
        return ok, f"{len(reports)} curve checks, slowest {worst:.2f}s; c = 0 reduces to the simple curve", {}

    return _timed(6, "quantum curves annihilate their wave functions", run)


# 7 ------------------------------------------------------------------------------------------

BETAS = (Fraction(1, 7), Fraction(-2, 5), Fraction(3))
T_TILDES = ((Fraction(1, 2), Fraction(-1, 3), Fraction(2)), (Fraction(3), Fraction(0), Fraction(1, 5), Fraction(-2, 7)))


def criterion_7():
    def run():
        N = 6
        count = 0
        for beta in BETAS:
            for tt in T_TILDES:
                tau = boson.build_tau_mm(N, beta, tt)
                for n in (1, 2):
                    for explicit in (False, True):
                        rep = boson.verify_constraints(tau, n, explicit=explicit)
                        count += 1
                        if rep["status"] != "verified":
                            return False, f"beta={beta} t~={tt} n={n}: {rep['first_failure']}", {}
        # beta = 0: R_n is d/dt_n and tau = exp(sum k t_k t~_k)
        for tt in T_TILDES:
            tau = boson.build_tau_mm(N, 0, tt)
            for n in (1, 2):
                if boson.build_R(n, Fraction(0), N) != boson.BosonOperator.mode(n, N):
                    return False, "R_n at beta = 0 is not d/dt_n", {}
                if boson.verify_constraints(tau, n)["status"] != "verified":
                    return False, "beta = 0 constraint failed", {}
        for beta in BETAS:
            rep = boson.commutator_on_window(boson.build_R(1, beta, N), boson.build_R(2, beta, N), N)
            if rep["status"] != "verified":
                return False, f"[R_1, R_2] != 0 at beta={beta}", {}
        ring = RatFuncRing("beta")
        beta = RatFunc.var()
        rep = boson.commutator_on_window(boson.build_R(1, beta, 5, ring), boson.build_R(2, beta, 5, ring), 5)
        if rep["status"] != "verified":
            return False, "[R_1, R_2] != 0 with symbolic beta", {}
        return True, f"{count} constraint checks, beta = 0 degeneration, commutators (3 rational beta + symbolic)", {}

    return _timed(7, "R_1, R_2 constraints on tau_mm", run)


# 8 ------------------------------------------------------------------------------------------

CUT_AND_JOIN_HBARS = (Fraction(1, 7), Fraction(-3, 4))


def criterion_8():
    def run():
        for h in CUT_AND_JOIN_HBARS:
            rep = boson.verify_cut_and_join(6, h)
            if rep["status"] != "verified":
                return False, f"hbar={h}: {rep['first_failure']}", {}
        return True, "hbar in {1/7, -3/4}, degree 6", {}

    return _timed(8, "cut-and-join equation for single monotone numbers", run)


# 9 ------------------------------------------------------------------------------------------

QUASI_CASES = ((0, 1), (0, 2), (1, 1))


def k_reexponentiation_check(L: int = 6) -> bool:
    K = hw.elsv_k_coefficients(L)
    s = TruncatedSeries.univariate("U", {l: -k for l, k in enumerate(K, start=1)}, 0, L).exp()
    return all(s[k] == double_factorial(2 * k + 1) for k in range(L + 1))


def criterion_9():
    def run():
        parts = {}
        K = hw.elsv_k_coefficients(6)
        parts["K1"] = str(K[0])
        parts["K2"] = str(K[1])
        k_ok = K[0] == -3 and K[1] == Fraction(-21, 2) and k_reexponentiation_check(6)
        parts["K"] = k_ok
        failures = []
        for g, ell in QUASI_CASES:
            rep = hw.quasipolynomiality_check(g, ell, max_n=8)
            parts[f"quasi_{g}_{ell}"] = rep.passed
            if not rep.passed:
                failures.append(f"(g,l)=({g},{ell}) not polynomial of degree {rep.degree_bound}: {rep.first_failure}")
        ok = k_ok and not failures
        detail = f"K1={K[0]} K2={K[1]} re-exponentiation {'ok' if k_ok else 'FAILED'}"
        if failures:
            detail += "; " + "; ".join(failures)
        return ok, detail, parts

    return _timed(9, "K_l coefficients and quasi-polynomiality for (0,1), (0,2), (1,1)", run)


# 10 -----------------------------------------------------------------------------------------


def criterion_10():
    def run():
        count = 0
        for n in range(1, 7):
            for lam in partitions_of(n):
                count += 1
                if not hw.lascoux_thibon_check(lam, 8):
                    return False, f"fails at {lam}", {}
        return True, f"{count} partitions to z^8", {}

    return _timed(10, "power sums of contents from the completed-cycle series", run)


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
    10: criterion_10,
}


def run_all(numbers=None) -> list[CriterionResult]:
    return [CRITERIA[k]() for k in (numbers or sorted(CRITERIA))]
