"""Current-mode differential operators on polynomials in t_1, t_2, ...

J_k = d/dt_k for k > 0, J_{-k} = k t_k (multiplication) and J_0 = 0.  A
``BosonOperator`` is a finite sum of normal-ordered monomials J_{k_1}...J_{k_s}
(negative modes to the left), stored as sorted mode tuples.

Polynomials are ``TruncatedSeries`` in t_1..t_N with deg t_k = k and cap N.
A monomial with mode sum s maps degree d to degree d - s, so a result is
trusted up to degree N - max(0, s) over the operator's monomials.  Modes with
|k| > N only ever touch degrees beyond that cap, so they are dropped.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from typing import Iterable, Mapping, Sequence

from .characters import schur_eval, schur_in_p
from .errors import DomainError, PoleError
from .partitions import Partition, content_multiset, partitions_of
from .series import (
    RATIONAL,
    CoeffRing,
    Grading,
    RatFunc,
    TruncatedSeries,
    coeff_to_json,
    fmt_rational,
    is_zero,
    kp_times,
    monomials_upto,
)

MAX_Y_DEGREE = 3


class BosonOperator:
    __slots__ = ("terms", "cutoff")

    def __init__(self, terms: Mapping[tuple[int, ...], object] | None = None, cutoff: int | None = None):
        self.cutoff = cutoff
        clean: dict[tuple[int, ...], object] = {}
        for modes, c in (terms or {}).items():
            modes = tuple(sorted(modes))
            if 0 in modes:
                continue
            if cutoff is not None and any(abs(k) > cutoff for k in modes):
                continue
            clean[modes] = clean[modes] + c if modes in clean else c
        self.terms = {m: c for m, c in clean.items() if not is_zero(c)}

    @classmethod
    def mode(cls, k: int, cutoff: int | None = None) -> BosonOperator:
        return cls({(k,): Fraction(1)}, cutoff)

    @classmethod
    def t(cls, k: int, cutoff: int | None = None) -> BosonOperator:
        """Multiplication by t_k, i.e. J_{-k}/k."""
        return cls({(-k,): Fraction(1, k)}, cutoff)

    @classmethod
    def scalar(cls, c, cutoff: int | None = None) -> BosonOperator:
        return cls({(): c}, cutoff)

    def _cut(self, other):
        if self.cutoff is None:
            return other.cutoff
        if other.cutoff is None:
            return self.cutoff
        return min(self.cutoff, other.cutoff)

    def __add__(self, other: BosonOperator) -> BosonOperator:
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms[m] + c if m in terms else c
        return BosonOperator(terms, self._cut(other))

    def __neg__(self):
        return BosonOperator({m: -c for m, c in self.terms.items()}, self.cutoff)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c) -> BosonOperator:
        if isinstance(c, BosonOperator):
            return self.compose(c)
        return BosonOperator({m: v * c for m, v in self.terms.items()}, self.cutoff)

    def __rmul__(self, c) -> BosonOperator:
        return BosonOperator({m: c * v for m, v in self.terms.items()}, self.cutoff)

    def __eq__(self, other):
        if not isinstance(other, BosonOperator):
            return NotImplemented
        return not (self - other).terms

    __hash__ = None

    def max_mode_sum(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def output_cap(self, cap: int) -> int:
        return cap - max(0, self.max_mode_sum())

    # -- normal ordering of products -----------------------------------------------------
    def compose(self, other: BosonOperator) -> BosonOperator:
        """Normal-ordered form of the product self * other using [J_a, J_b] = a delta_{a+b,0}."""
        out = BosonOperator({}, self._cut(other))
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                out = out + normal_order(m1 + m2, self._cut(other)) * (c1 * c2)
        return out

    # -- action ------------------------------------------------------------------------------
    def apply(self, f: TruncatedSeries, cap: int | None = None) -> TruncatedSeries:
        """Action on a polynomial in t; the result is truncated to the trusted degree."""
        g = f.gradings[0]
        cap = g.hi if cap is None else cap
        out_cap = self.output_cap(cap)
        nvars = len(f.names)
        out: dict[tuple[int, ...], object] = {}
        for mono, c in f.terms.items():
            for modes, coeff in self.terms.items():
                res = _act(modes, mono, nvars)
                if res is None:
                    continue
                new, factor = res
                if sum((k + 1) * e for k, e in enumerate(new)) > out_cap:
                    continue
                v = coeff * c * factor
                out[new] = out[new] + v if new in out else v
        return TruncatedSeries(f.names, (Grading(g.weights, out_cap, 0),), out)

    def __repr__(self):
        return " + ".join(f"({coeff_to_json(c) if not isinstance(c, RatFunc) else c})" + "".join(f" J[{k}]" for k in m) for m, c in sorted(self.terms.items())) or "0"

    def to_text(self) -> str:
        return repr(self)


def _act(modes: Sequence[int], mono: tuple[int, ...], nvars: int):
    """Apply positive modes (rightmost first, they commute) then negative ones; None if zero."""
    e = list(mono)
    factor = 1
    for k in modes:
        if k > 0:
            if k > nvars or e[k - 1] == 0:
                return None
            factor *= e[k - 1]
            e[k - 1] -= 1
    for k in modes:
        if k < 0:
            if -k > nvars:
                return None
            factor *= -k
            e[-k - 1] += 1
    return tuple(e), factor


def normal_order(modes: Sequence[int], cutoff: int | None = None) -> BosonOperator:
    """Normal-order an arbitrary product J_{k_1} ... J_{k_s}."""
    modes = list(modes)
    if 0 in modes:
        return BosonOperator({}, cutoff)
    # bubble: move the first positive mode that stands left of a negative one to the right
    for i in range(len(modes) - 1):
        a, b = modes[i], modes[i + 1]
        if a > 0 and b < 0:
            swapped = modes[:i] + [b, a] + modes[i + 2 :]
            out = normal_order(swapped, cutoff)
            if a + b == 0:
                out = out + normal_order(modes[:i] + modes[i + 2 :], cutoff) * Fraction(a)
            return out
    return BosonOperator({tuple(modes): Fraction(1)}, cutoff)


def naive_apply(modes: Sequence[int], f: TruncatedSeries) -> TruncatedSeries:
    """Apply J_{k_1} ... J_{k_s} as a composition of single modes, rightmost first."""
    for k in reversed(modes):
        f = BosonOperator.mode(k).apply(f)
    return f


# -- the w_{1+infinity} generators --------------------------------------------------------------


def _ordered_tuples(s: int, total: int, N: int):
    """All s-tuples of nonzero modes in [-N, N] with the given sum."""
    rng = [k for k in range(-N, N + 1) if k]
    for head in iproduct(rng, repeat=s - 1):
        last = total - sum(head)
        if last and -N <= last <= N:
            yield head + (last,)


def build_L(m: int, N: int) -> BosonOperator:
    """(1/2) sum_{a+b=m} :J_a J_b:, modes restricted to |k| <= N."""
    terms: dict[tuple[int, ...], Fraction] = {}
    for tup in _ordered_tuples(2, m, N):
        key = tuple(sorted(tup))
        terms[key] = terms.get(key, 0) + Fraction(1, 2)
    return BosonOperator(terms, N)


def build_M(m: int, N: int) -> BosonOperator:
    """(1/3) sum_{a+b+c=m} :J_a J_b J_c:."""
    terms: dict[tuple[int, ...], Fraction] = {}
    for tup in _ordered_tuples(3, m, N):
        key = tuple(sorted(tup))
        terms[key] = terms.get(key, 0) + Fraction(1, 3)
    return BosonOperator(terms, N)


def build_LM(m: int, N: int) -> tuple[BosonOperator, BosonOperator]:
    return build_L(m, N), build_M(m, N)


def _field_power(m: int, k: int, N: int) -> dict[tuple[int, ...], Fraction]:
    """Res_x x^{-k} :(J(x) + d/dx)^m J(x): with J(x) = sum_j J_j x^{-j-1}, as {modes: coefficient}.

    The expression is expanded as {(modes, power of x): coefficient}; the
    derivative acts on the x-dependence of everything to its right, and the
    normal ordering makes the modes commute.
    """
    modes = [j for j in range(-N, N + 1) if j]
    expr: dict[tuple[tuple[int, ...], int], Fraction] = {((j,), -j - 1): Fraction(1) for j in modes}
    for _ in range(m):
        nxt: dict[tuple[tuple[int, ...], int], Fraction] = {}
        for (ms, p), c in expr.items():
            if p:
                key = (ms, p - 1)
                nxt[key] = nxt.get(key, 0) + c * p
            for j in modes:
                key = (tuple(sorted(ms + (j,))), p - j - 1)
                nxt[key] = nxt.get(key, 0) + c
        expr = nxt
    out: dict[tuple[int, ...], Fraction] = {}
    for (ms, p), c in expr.items():
        if p - k == -1 and c:
            out[ms] = out.get(ms, 0) + c
    return out


def _poly_mul(a: list, b: list, ring: CoeffRing) -> list:
    out = [ring.zero() for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def build_Y(n: int, P: Sequence, N: int, ring: CoeffRing = RATIONAL) -> BosonOperator:
    """Boson operator of x^{-n} P(D), P given by its coefficients [p_0, p_1, ...] in D.

    Convention: J(x) = sum_j J_j x^{-j-1} and
    (xD)^m x^k -> Res_x x^{-k} :(J(x) + d/dx)^m J(x): / (m + 1).
    Since (xD)^m x^{-n-m} = x^{-n} prod_{i=1}^m (D - n - i), P(D) is expanded
    in that basis.  A constant P maps to J_n, which is 0 for n = 0: the
    central term of the zero mode is not represented.
    """
    P = [ring.const(c) if isinstance(c, (int, Fraction)) else c for c in P]
    while P and is_zero(P[-1]):
        P.pop()
    if len(P) - 1 > MAX_Y_DEGREE:
        raise DomainError(f"polynomials of degree > {MAX_Y_DEGREE} in D are not supported")
    if n < 0:
        raise DomainError("n must be non-negative")
    # basis B_m(D) = prod_{i=1}^m (D - n - i)
    basis = [[ring.one()]]
    for m in range(1, len(P)):
        basis.append(_poly_mul(basis[-1], [ring.const(-(n + m)), ring.one()], ring))
    rest = list(P)
    coeffs = [ring.zero()] * len(P)
    for m in range(len(P) - 1, -1, -1):
        c = rest[m]
        coeffs[m] = c
        if not is_zero(c):
            for i, b in enumerate(basis[m]):
                rest[i] = rest[i] - c * b
    out = BosonOperator({}, N)
    for m, c in enumerate(coeffs):
        if is_zero(c):
            continue
        k = -n - m
        field = _field_power(m, k, N)
        out = out + BosonOperator({ms: v * Fraction(1, m + 1) for ms, v in field.items()}, N) * c
    return out


def build_R(n: int, beta, N: int, ring: CoeffRing = RATIONAL) -> BosonOperator:
    """R_n = Y[x^{-n} prod_{i=1}^n (1 - beta (D - i))].

    For n = 1, 2 this is d/dt_1 - beta L_1 and d/dt_2 - 2 beta L_2 + beta^2 M_2.
    """
    if n < 1 or n > MAX_Y_DEGREE:
        raise DomainError(f"R_n is supported for 1 <= n <= {MAX_Y_DEGREE}")
    beta = ring.const(beta) if isinstance(beta, (int, Fraction)) else beta
    P = [ring.one()]
    for i in range(1, n + 1):
        P = _poly_mul(P, [ring.one() + beta * i, -beta], ring)
    return build_Y(n, P, N, ring)


def explicit_R(n: int, beta, N: int) -> BosonOperator:
    """R_1 and R_2 assembled from L_m and M_m directly."""
    if n == 1:
        return BosonOperator.mode(1, N) - build_L(1, N) * beta
    if n == 2:
        return BosonOperator.mode(2, N) - build_L(2, N) * (2 * beta) + build_M(2, N) * (beta * beta)
    raise DomainError("explicit forms exist for n = 1, 2 only")


# -- tau function -----------------------------------------------------------------------------


def t_space(N: int) -> TruncatedSeries:
    return TruncatedSeries.weighted(kp_times(N), range(1, N + 1), N)


def monomial_basis(N: int) -> list[tuple[int, ...]]:
    return monomials_upto(tuple(range(1, N + 1)), N)


@dataclass
class TauMM:
    N: int
    beta: object
    t_tilde: tuple
    series: TruncatedSeries

    def coefficient(self, exps: Mapping[int, int] | Sequence[int]):
        if isinstance(exps, Mapping):
            mono = tuple(exps.get(k, 0) for k in range(1, self.N + 1))
        else:
            mono = tuple(exps) + (0,) * (self.N - len(exps))
        return self.series.coeff(mono)


def build_tau_mm(N: int, beta, t_tilde: Sequence, ring: CoeffRing = RATIONAL) -> TauMM:
    """sum_{|lam|<=N} s_lam(t) s_lam(t~) prod_box (1 - beta c)^{-1}, with p_k = k t_k."""
    beta_r = ring.const(beta) if isinstance(beta, (int, Fraction)) else beta
    tt = [Fraction(v) for v in t_tilde]
    p_tilde = {k: k * v for k, v in enumerate(tt, start=1)}
    terms: dict[tuple[int, ...], object] = {}
    for n in range(N + 1):
        for lam in partitions_of(n):
            weight = ring.one()
            for c in content_multiset(lam):
                d = ring.one() - beta_r * c
                if is_zero(d):
                    raise PoleError(f"1 - beta*{c} = 0 for a box of {lam}")
                weight = weight * ring.inv(d)
            s_tilde = schur_eval(lam, p_tilde)
            if not s_tilde:
                continue
            scale = weight * s_tilde
            for mu, chi in schur_in_p(lam).items():
                mono = [0] * N
                factor = 1
                for part in mu:
                    mono[part - 1] += 1
                    factor *= part
                key = tuple(mono)
                v = scale * (chi * factor)
                terms[key] = terms[key] + v if key in terms else v
    series = TruncatedSeries.weighted(kp_times(N), range(1, N + 1), N, terms)
    return TauMM(N, beta, tuple(tt), series)


def _first_failure(f: TruncatedSeries):
    if not f.terms:
        return None
    mono, c = min(f.terms.items(), key=lambda t: (sum((k + 1) * e for k, e in enumerate(t[0])), t[0]))
    return {"monomial": dict(zip(f.names, mono)), "residual": coeff_to_json(c)}


def verify_constraints(tau: TauMM, n: int, ring: CoeffRing = RATIONAL, explicit: bool = False) -> dict:
    """(R_n tau - n t~_n tau) vanishes up to degree N - n."""
    beta = ring.const(tau.beta) if isinstance(tau.beta, (int, Fraction)) else tau.beta
    R = explicit_R(n, beta, tau.N) if explicit else build_R(n, beta, tau.N, ring)
    lhs = R.apply(tau.series)
    cap = lhs.gradings[0].hi
    tn = tau.t_tilde[n - 1] if n <= len(tau.t_tilde) else Fraction(0)
    rhs = tau.series.with_gradings(lhs.gradings) * (n * tn)
    residual = lhs - rhs
    fail = _first_failure(residual)
    return {
        "n": n,
        "beta": coeff_to_json(tau.beta) if isinstance(tau.beta, (int, Fraction)) else str(tau.beta),
        "t_tilde": [fmt_rational(v) for v in tau.t_tilde],
        "N": tau.N,
        "window": cap,
        "status": "verified" if fail is None else "failed",
        "first_failure": fail,
    }


def cut_and_join_operator(hbar, N: int) -> BosonOperator:
    """hbar^2 M_0 - hbar L_0 + t_1."""
    hbar = Fraction(hbar)
    return build_M(0, N) * (hbar * hbar) - build_L(0, N) * hbar + BosonOperator.t(1, N)


def verify_cut_and_join(N: int, hbar) -> dict:
    """Single monotone specialisation beta = hbar, t~_k = delta_{k,1}/hbar."""
    hbar = Fraction(hbar)
    tau = build_tau_mm(N, hbar, [1 / hbar])
    res = cut_and_join_operator(hbar, N).apply(tau.series)
    fail = _first_failure(res)
    return {
        "hbar": fmt_rational(hbar),
        "N": N,
        "window": res.gradings[0].hi,
        "status": "verified" if fail is None else "failed",
        "first_failure": fail,
    }


def commutator_on_window(A: BosonOperator, B: BosonOperator, N: int) -> dict:
    """Check A(B f) = B(A f) for every monomial f of degree <= N, on the trusted window."""
    space = t_space(N)
    worst = None
    for mono in monomial_basis(N):
        f = space.like({mono: 1})
        ab = A.apply(B.apply(f))
        ba = B.apply(A.apply(f))
        cap = min(ab.gradings[0].hi, ba.gradings[0].hi)
        g = (Grading(ab.gradings[0].weights, cap, 0),)
        diff = ab.with_gradings(g) - ba.with_gradings(g)
        if diff.terms:
            worst = {"input": dict(zip(space.names, mono)), "residual": _first_failure(diff)}
            break
    return {"status": "verified" if worst is None else "failed", "first_failure": worst}


def uniqueness_nullspace(beta, t_tilde: Sequence, degree: int = 3, ops: Sequence[int] = (1, 2, 3)) -> dict:
    """Solve R_n f = n t~_n f (n in ``ops``) for f of degree <= ``degree``, using every trusted coefficient.

    Returns the dimension of the solution space and, when it is one, the
    solution normalised to constant term 1.  With ops = (1, 2) alone the
    coefficient of t_3 is never pinned down (at beta = 0 the operators are
    d/dt_1 and d/dt_2), so the space is larger.
    """
    import sympy

    basis = monomial_basis(degree)
    space = t_space(degree)
    tt = [Fraction(v) for v in t_tilde]
    operators = {n: build_R(n, Fraction(beta), degree) for n in ops if n <= degree}
    rows: dict[tuple[int, tuple[int, ...]], list] = {}
    for col, mono in enumerate(basis):
        f = space.like({mono: 1})
        for n, R in operators.items():
            out = R.apply(f)
            tn = tt[n - 1] if n <= len(tt) else 0
            res = out - f.with_gradings(out.gradings) * (n * tn)
            for target in monomials_upto(tuple(range(1, degree + 1)), out.gradings[0].hi):
                rows.setdefault((n, target), [0] * len(basis))[col] += res.coeff(target)
    mat = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in map(Fraction, r)] for r in rows.values()])
    null = mat.nullspace()
    out = {"dimension": len(null), "solution": None}
    if len(null) == 1:
        v = null[0]
        c0 = v[basis.index((0,) * degree)]
        if c0 != 0:
            ratios = [sympy.Rational(x / c0) for x in v]
            out["solution"] = {basis[i]: Fraction(int(q.p), int(q.q)) for i, q in enumerate(ratios)}
    return out
