"""Wave functions and the quantum curves that annihilate them.

Operators are finite sums of coefficient * (composition of primitives); each
primitive acts on a monomial x^m by sending it to a scalar multiple of
x^(m + shift).  Coefficients live in one of the rings of ``series`` and are
constants for the x-action, so composition just multiplies them.

A wave function is a univariate ``TruncatedSeries`` in x whose window is
``(None, N)`` (power series known mod x^(N+1)) or ``(-N, None)`` (series in
x^-1 known down to x^-N).  Applying an operator moves the window by the
extreme shifts of its terms; the result only keeps the trustworthy part.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

from .characters import schur_eval
from .errors import DomainError, PoleError
from .partitions import Partition, content_multiset, partitions_of
from .series import (
    CoeffRing,
    Grading,
    LaurentQ,
    LaurentQRing,
    RatFunc,
    RatFuncRing,
    RationalRing,
    TruncatedSeries,
    TruncHbarRing,
    coeff_to_json,
    exp_coefficients,
    is_zero,
)

# -- primitives ------------------------------------------------------------------------------


class Primitive:
    shift = 0

    def factor(self, m: int, ring: CoeffRing):
        """Scalar picked up by x^m; None means 1."""
        return None


class MulX(Primitive):
    def __init__(self, k: int):
        self.k = self.shift = k

    def __repr__(self):
        return f"x^{self.k}"


class Diff(Primitive):
    shift = -1

    def factor(self, m, ring):
        return m

    def __repr__(self):
        return "d/dx"


class Euler(Primitive):
    def factor(self, m, ring):
        return m

    def __repr__(self):
        return "D"


class Diag(Primitive):
    """f(D) for a function f(m, ring) of the Euler eigenvalue."""

    def __init__(self, func: Callable[[int, CoeffRing], object], label: str = "f(D)"):
        self.func, self.label = func, label

    def factor(self, m, ring):
        return self.func(m, ring)

    def __repr__(self):
        return self.label


class Shift(Primitive):
    """e^(c hbar D): x^m -> q^(c m) x^m."""

    def __init__(self, c: int):
        self.c = c

    def factor(self, m, ring):
        return ring.q_pow(self.c * m)

    def __repr__(self):
        return f"e^({self.c}hD)"


# -- operator expressions ------------------------------------------------------------------


class OperatorExpr:
    """sum_i coeff_i * P_i1 P_i2 ... (rightmost primitive acts first)."""

    __slots__ = ("terms",)

    def __init__(self, terms: Sequence[tuple[object, tuple[Primitive, ...]]] = ()):
        self.terms = [(c, tuple(ps)) for c, ps in terms if not is_zero(c)]

    @classmethod
    def prim(cls, p: Primitive, coeff=1) -> OperatorExpr:
        return cls([(coeff, (p,))])

    @classmethod
    def scalar(cls, c) -> OperatorExpr:
        return cls([(c, ())])

    def __add__(self, other):
        if not isinstance(other, OperatorExpr):
            other = OperatorExpr.scalar(other)
        return OperatorExpr(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return OperatorExpr([(-c, ps) for c, ps in self.terms])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, OperatorExpr):
            return OperatorExpr([(c1 * c2, p1 + p2) for c1, p1 in self.terms for c2, p2 in other.terms])
        return OperatorExpr([(c * other, ps) for c, ps in self.terms])

    def __rmul__(self, other):
        return OperatorExpr([(other * c, ps) for c, ps in self.terms])

    def __pow__(self, k: int):
        out = OperatorExpr.scalar(1)
        for _ in range(k):
            out = out * self
        return out

    def shifts(self) -> list[int]:
        return [sum(p.shift for p in ps) for _, ps in self.terms]

    def act_monomial(self, m: int, ring: CoeffRing) -> dict[int, object]:
        out: dict[int, object] = {}
        for coeff, ps in self.terms:
            e, val = m, coeff
            for p in reversed(ps):
                f = p.factor(e, ring)
                e += p.shift
                if f is not None:
                    val = val * f
                if is_zero(val):
                    break
            else:
                out[e] = out[e] + val if e in out else val
        return out

    def apply(self, f: TruncatedSeries, ring: CoeffRing) -> TruncatedSeries:
        """Exact action; the result carries the window on which it is trustworthy."""
        if len(f.names) != 1 or len(f.gradings) != 1:
            raise DomainError("operators act on univariate series in x")
        g = f.gradings[0]
        shifts = self.shifts() or [0]
        hi = None if g.hi is None else g.hi + min(shifts)
        lo = None if g.lo is None else g.lo + max(shifts)
        out: dict[tuple[int], object] = {}
        for (m,), c in f.terms.items():
            for e, v in self.act_monomial(m, ring).items():
                v = v * c
                key = (e,)
                out[key] = out[key] + v if key in out else v
        return TruncatedSeries(f.names, (Grading((1,), hi, lo),), out)

    def __repr__(self):
        return " + ".join(f"({c})*{'.'.join(map(repr, ps)) or '1'}" for c, ps in self.terms) or "0"


def xhat(k: int = 1) -> OperatorExpr:
    return OperatorExpr.prim(MulX(k))


def yhat_diff(ring: CoeffRing) -> OperatorExpr:
    """y = -hbar d/dx."""
    return OperatorExpr.prim(Diff(), -ring.hbar())


def yhat_euler(ring: CoeffRing) -> OperatorExpr:
    """y = hbar D (exponential coordinate)."""
    return OperatorExpr.prim(Euler(), ring.hbar())


def shift(c: int) -> OperatorExpr:
    return OperatorExpr.prim(Shift(c))


# -- wave functions ---------------------------------------------------------------------------

FLAVORS = ("monotone", "monotone_orbifold", "strict", "atlantes", "double", "simple", "deformation")


def default_ring(flavor: str, params: dict) -> CoeffRing:
    if flavor in ("monotone", "monotone_orbifold"):
        return RatFuncRing("hbar")
    if flavor == "atlantes":
        return TruncHbarRing(params.get("M", 22))
    if flavor in ("strict", "double", "simple", "deformation"):
        return LaurentQRing()
    raise DomainError(f"unsupported flavor {flavor!r}")


@dataclass
class WaveFunction:
    flavor: str
    params: dict
    N: int
    ring: CoeffRing
    series: TruncatedSeries = field(repr=False)

    def coefficient(self, m: int):
        return self.series[m]

    @property
    def in_inverse_x(self) -> bool:
        return self.series.gradings[0].lo is not None


def _x_series(coeffs: dict[int, object], N: int) -> TruncatedSeries:
    return TruncatedSeries.univariate("x", coeffs, None, N)


def _xinv_series(coeffs: dict[int, object], N: int) -> TruncatedSeries:
    return TruncatedSeries.univariate("x", coeffs, -N, None)


def _tilde_t(params: dict) -> list[Fraction]:
    t = params.get("t")
    if t is None:
        raise DomainError("this flavor needs a finite t vector (t_1, t_2, ...)")
    return [Fraction(v) for v in t]


def _hbar_exp_coefficients(t: Sequence[Fraction], N: int, ring: CoeffRing) -> list:
    """[x^j] exp(sum_k t_k x^k / hbar) for j <= N, in the given ring."""
    inv_h = ring.inv(ring.hbar())
    coeffs = {k: inv_h * tk for k, tk in enumerate(t, start=1) if tk}
    return exp_coefficients(coeffs, N, ring.one())


def _pochhammer_inverse(ring: CoeffRing, j: int):
    """prod_{l=0}^{j-1} 1/(1 - hbar l)."""
    out = ring.one()
    for l in range(1, j):
        out = out * ring.inv(ring.one() - ring.hbar() * l)
    return out


def build_wave(flavor: str, params: dict | None = None, N: int = 10, ring: CoeffRing | None = None) -> WaveFunction:
    params = dict(params or {})
    if N < 1:
        raise DomainError("N must be >= 1")
    ring = ring or default_ring(flavor, params)
    r = int(params.get("r", 1))
    if flavor == "monotone":
        h = _hbar_exp_coefficients(_tilde_t(params), N, ring)
        series = _x_series({j: h[j] * _pochhammer_inverse(ring, j) for j in range(N + 1)}, N)
    elif flavor == "monotone_orbifold":
        coeffs = {}
        for n in range(N // r + 1):
            denom = ring.hbar(n) * (factorial(n) * r**n)
            coeffs[r * n] = ring.inv(denom) * _pochhammer_inverse(ring, r * n)
        series = _x_series(coeffs, N)
    elif flavor == "strict":
        coeffs = {}
        for n in range(N // r + 1):
            num = ring.one()
            for j in range(1, r * n):
                num = num * (ring.one() + ring.hbar() * j)
            coeffs[-r * n] = num * ring.inv(ring.hbar(n)) * Fraction(1, factorial(n) * r**n)
        series = _xinv_series(coeffs, N)
    elif flavor == "atlantes":
        coeffs = {}
        for n in range(N + 1):
            s = sum(j**r for j in range(1, n))
            e = ring.exp_hbar_poly({r: s}) if s else ring.one()
            coeffs[n] = e * ring.hbar(-n) * Fraction(1, factorial(n))
        series = _x_series(coeffs, N)
    elif flavor in ("double", "simple", "deformation"):
        if flavor == "simple":
            t = [Fraction(1)]
        elif flavor == "deformation":
            c = Fraction(params.get("c", 0))
            t = [c ** (k - 1) for k in range(1, N + 2)]
        else:
            t = _tilde_t(params)
        h = _hbar_exp_coefficients(t, N, ring)
        series = _x_series({m: h[m] * ring.q_pow(m * (m - 1) // 2) for m in range(N + 1)}, N)
    else:
        raise DomainError(f"unsupported flavor {flavor!r}")
    return WaveFunction(flavor, params, N, ring, series)


def wave_from_schur_sum(t: Sequence, N: int) -> dict[int, RatFunc]:
    """Principal specialization p_k(t) = x^k of sum_lam s_lam(t) s_lam(t~/hbar) prod_box 1/(1 - hbar c).

    Independent of ``build_wave``: every partition of each degree contributes
    through its character expansion, and only one-row shapes survive.
    """
    ring = RatFuncRing("hbar")
    inv_h = ring.inv(ring.hbar())
    p_tilde = {k: inv_h * (k * Fraction(tk)) for k, tk in enumerate(t, start=1)}
    out = {}
    for n in range(N + 1):
        total = ring.zero()
        for lam in partitions_of(n):
            s_x = schur_eval(lam, lambda k: Fraction(1))
            if not s_x:
                continue
            weight = ring.one()
            for c in content_multiset(lam):
                weight = weight * ring.inv(ring.one() - ring.hbar() * c)
            total = total + schur_eval(lam, lambda k: p_tilde.get(k, ring.zero())) * weight * s_x
        out[n] = total
    return out


# -- quantum curves ---------------------------------------------------------------------------


def _inv_linear(j: int) -> Callable[[int, CoeffRing], object]:
    """m -> prod_{i=0}^{j-1} 1/(1 - hbar (m + i))."""

    def f(m, ring):
        out = ring.one()
        for i in range(j):
            out = out * ring.inv(ring.one() - ring.hbar() * (m + i))
        return out

    return f


def monotone_general_operator(t: Sequence, ring: CoeffRing) -> OperatorExpr:
    """sum_k k t_k x^k prod_{j<k} (1 - hbar(D+j))^-1 - hbar D."""
    op = OperatorExpr.prim(Euler(), -ring.hbar())
    for k, tk in enumerate(t, start=1):
        tk = Fraction(tk)
        if tk:
            op = op + OperatorExpr([(ring.const(k * tk), (MulX(k), Diag(_inv_linear(k), f"prod_{k}(1-h(D+j))^-1")))])
    return op


def monotone_polynomial_operator(t: Sequence, ring: CoeffRing) -> OperatorExpr:
    """The polynomial curve in x = x., y = -hbar d/dx for t~ supported on 1..l."""
    t = [Fraction(v) for v in t]
    while t and not t[-1]:
        t.pop()
    l = len(t)
    X, Y = xhat(), yhat_diff(ring)

    def factor(j):
        return OperatorExpr.scalar(ring.one() + ring.hbar() * j) + X * Y

    op = X * Y
    for j in range(1, l + 1):
        op = op * factor(j)
    for k, tk in enumerate(t, start=1):
        if tk:
            term = xhat(k) * ring.const(k * tk)
            for j in range(1, l - k + 1):
                term = term * factor(j)
            op = op + term
    return op


def monotone_orbifold_operator(r: int, ring: CoeffRing) -> OperatorExpr:
    """x (x^(r-1) + prod_{j=1}^r (1 + x y + hbar(j-1)) y), y = -hbar d/dx."""
    X, Y = xhat(), yhat_diff(ring)
    inner = OperatorExpr.scalar(ring.one())
    for j in range(1, r + 1):
        inner = inner * (OperatorExpr.scalar(ring.one() + ring.hbar() * (j - 1)) + X * Y)
    body = (xhat(r - 1) if r > 1 else OperatorExpr.scalar(ring.one())) + inner * Y
    return X * body


def strict_operator(r: int, ring: CoeffRing) -> OperatorExpr:
    """(-hbar d/dx + x^-1)^r + hbar x d/dx.

    This is the conjugated curve x^(1/hbar) (y^r - x y + 1) x^(-1/hbar),
    y = -hbar d/dx, with the conjugation carried out by hand: it sends
    d/dx to d/dx - 1/(hbar x), hence y to y + x^-1 and -x y + 1 = hbar x d/dx + 1
    to hbar x d/dx.  Non-integer powers of x never appear.
    """
    Y = yhat_diff(ring)
    return (Y + xhat(-1)) ** r + OperatorExpr([(ring.hbar(), (MulX(1), Diff()))])


def atlantes_operator(r: int, ring: CoeffRing) -> OperatorExpr:
    """y - x e^(y^r), y = hbar D."""
    def exp_yr(m, ring):
        return ring.exp_hbar_poly({r: m**r}) if m else ring.one()

    return yhat_euler(ring) - OperatorExpr([(ring.one(), (MulX(1), Diag(exp_yr, f"e^(y^{r})")))])


def double_hurwitz_operator(t: Sequence, ring: CoeffRing) -> OperatorExpr:
    """sum_k k t_k q^(k(k-1)/2) x^k e^(hbar k D) - hbar D."""
    op = OperatorExpr.prim(Euler(), -ring.hbar())
    for k, tk in enumerate(t, start=1):
        tk = Fraction(tk)
        if tk:
            op = op + OperatorExpr([(ring.q_pow(k * (k - 1) // 2) * (k * tk), (MulX(k), Shift(k)))])
    return op


def deformation_operator(c, ring: CoeffRing) -> OperatorExpr:
    """1 - (e^-y x^-1 - 2c + c^2 x e^y) y, y = hbar D."""
    c = Fraction(c)
    Y = yhat_euler(ring)
    middle = shift(-1) * xhat(-1) - OperatorExpr.scalar(ring.const(2 * c)) + xhat(1) * shift(1) * ring.const(c * c)
    return OperatorExpr.scalar(ring.one()) - middle * Y


def simple_operator(ring: CoeffRing) -> OperatorExpr:
    """e^-y x^-1 y - 1, y = hbar D."""
    return shift(-1) * xhat(-1) * yhat_euler(ring) - OperatorExpr.scalar(ring.one())


CURVE_FORMS = {
    "monotone": ("default", "general", "polynomial"),
    "monotone_orbifold": ("default", "general", "polynomial"),
    "simple": ("default", "double"),
}


def curve_operator(flavor: str, params: dict | None = None, ring: CoeffRing | None = None, form: str = "default") -> OperatorExpr:
    if flavor not in FLAVORS:
        raise DomainError(f"unsupported flavor {flavor!r}")
    if form not in CURVE_FORMS.get(flavor, ("default",)):
        raise DomainError(f"{flavor} has no {form!r} form")
    params = dict(params or {})
    ring = ring or default_ring(flavor, params)
    r = int(params.get("r", 1))
    if flavor == "monotone":
        t = _tilde_t(params)
        return monotone_polynomial_operator(t, ring) if form == "polynomial" else monotone_general_operator(t, ring)
    if flavor == "monotone_orbifold":
        t = [Fraction(0)] * (r - 1) + [Fraction(1, r)]
        if form == "general":
            return monotone_general_operator(t, ring)
        if form == "polynomial":
            return monotone_polynomial_operator(t, ring)
        return monotone_orbifold_operator(r, ring)
    if flavor == "strict":
        return strict_operator(r, ring)
    if flavor == "atlantes":
        return atlantes_operator(r, ring)
    if flavor == "double":
        return double_hurwitz_operator(_tilde_t(params), ring)
    if flavor == "simple":
        if form == "double":
            return double_hurwitz_operator([1], ring)
        return simple_operator(ring)
    if flavor == "deformation":
        return deformation_operator(params.get("c", 0), ring)
    raise DomainError(f"unsupported flavor {flavor!r}")


# -- verification ----------------------------------------------------------------------------


def _param_json(params: dict) -> dict:
    out = {}
    for k, v in sorted(params.items()):
        if isinstance(v, (list, tuple)):
            out[k] = [coeff_to_json(Fraction(x)) for x in v]
        elif isinstance(v, Fraction):
            out[k] = coeff_to_json(v)
        else:
            out[k] = v
    return out


def verify_annihilation(op: OperatorExpr, wave: WaveFunction, N: int | None = None) -> dict:
    """Apply ``op`` to ``wave`` and require every residual coefficient in the valid window to vanish.

    For series in x the window is exponents <= the returned order; for series
    in x^-1 it is exponents >= -order.
    """
    N = wave.N if N is None else N
    residual = op.apply(wave.series, wave.ring)
    g = residual.gradings[0]
    inverse = wave.in_inverse_x
    reach = -g.lo if inverse else g.hi
    report = {
        "flavor": wave.flavor,
        "params": _param_json(wave.params),
        "N": N,
        "ring": wave.ring.name,
        "max_valid_order": reach,
        "status": "verified",
        "first_failure": None,
    }
    ordered = sorted(residual.terms.items(), key=lambda t: -t[0][0] if inverse else t[0][0])
    for (e,), v in ordered:
        if (inverse and e < -N) or (not inverse and e > N):
            continue
        report["status"] = "failed"
        report["first_failure"] = {"exponent": e, "residual": coeff_to_json(v)}
        break
    if reach is not None and reach < N and report["status"] == "verified":
        report["status"] = "failed"
        report["first_failure"] = {"reason": f"valid window only reaches order {reach}"}
    if isinstance(wave.ring, TruncHbarRing):
        # every coefficient of the wave is known modulo hbar^prec; report the weakest one
        precs = [v.prec for v in wave.series.terms.values() if getattr(v, "prec", None) is not None]
        report["hbar_order"] = wave.ring.order
        report["min_hbar_precision"] = min(precs) if precs else None
    return report


def verify_curve(flavor: str, params: dict | None = None, N: int = 10, form: str = "default") -> dict:
    params = dict(params or {})
    # the deformation curve contains x^-1, so one extra order is needed
    margin = 1 if flavor in ("deformation", "simple") else 0
    wave = build_wave(flavor, params, N + margin)
    op = curve_operator(flavor, params, wave.ring, form)
    rep = verify_annihilation(op, wave, N)
    rep["form"] = form
    return rep


class SampledRing(RationalRing):
    """Rationals with hbar specialised to a number; used for the evaluation cross-check."""

    def __init__(self, hbar_value):
        self.value = Fraction(hbar_value)
        self.name = f"Rational[hbar={self.value}]"

    def hbar(self, k: int = 1):
        if self.value == 0 and k < 0:
            raise PoleError("hbar = 0")
        return self.value**k


def verify_monotone_sampled(t: Sequence, N: int, points: Sequence, form: str = "default") -> bool:
    """Evaluate at rational hbar values instead of working in Q(hbar)."""
    for h in points:
        ring = SampledRing(h)
        wave = build_wave("monotone", {"t": list(t)}, N, ring)
        op = curve_operator("monotone", {"t": list(t)}, ring, form)
        if verify_annihilation(op, wave, N)["status"] != "verified":
            return False
    return True


__all__ = [
    "Diag",
    "Diff",
    "Euler",
    "MulX",
    "OperatorExpr",
    "SampledRing",
    "Shift",
    "WaveFunction",
    "build_wave",
    "curve_operator",
    "verify_annihilation",
    "verify_curve",
    "verify_monotone_sampled",
    "wave_from_schur_sum",
]
