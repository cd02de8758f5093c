"""Exact coefficient rings and weighted-degree-truncated power series.

Coefficient domains
-------------------
* ``Fraction``        plain rationals (``RationalRing``)
* ``RatFunc``         rational functions of one variable (hbar or beta), kept
                      reduced with a monic denominator (``RatFuncRing``)
* ``TruncHbar``       Laurent series in hbar known modulo hbar^prec
                      (``TruncHbarRing``)
* ``LaurentQ``        Laurent polynomials in two independent symbols q and
                      hbar (``LaurentQRing``); q stands for e^hbar

Every element type supports ``+ - *`` with ints and Fractions, and exposes
``is_zero()``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct
from math import factorial
from typing import Callable, Iterable, Mapping

from .errors import DomainError, PoleError

Rational = (int, Fraction)


def fmt_rational(x) -> str:
    """Canonical "p/q" string (denominator always present)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def is_zero(x) -> bool:
    if isinstance(x, Rational):
        return x == 0
    return x.is_zero()


# ---------------------------------------------------------------------------
# dense univariate polynomials over Q


class Poly:
    """Dense polynomial with Fraction coefficients, lowest degree first."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c = tuple(c)

    @classmethod
    def const(cls, a) -> Poly:
        return cls((a,))

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def lead(self) -> Fraction:
        return self.c[-1]

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __add__(self, other: Poly) -> Poly:
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __neg__(self) -> Poly:
        return Poly([-x for x in self.c])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other) -> Poly:
        if isinstance(other, Rational):
            return Poly([x * other for x in self.c])
        a, b = self.c, other.c
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        dq = len(r) - len(other.c)
        if dq < 0:
            return Poly(), self
        q = [Fraction(0)] * (dq + 1)
        inv = 1 / other.lead()
        for k in range(dq, -1, -1):
            coef = r[k + len(other.c) - 1] * inv
            q[k] = coef
            if coef:
                for j, y in enumerate(other.c):
                    r[k + j] -= coef * y
        return Poly(q), Poly(r[: len(other.c) - 1])

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return self * (1 / self.lead())

    def gcd(self, other: Poly) -> Poly:
        a, b = self.monic(), other.monic()
        while not b.is_zero():
            a, b = b, a.divmod(b)[1].monic()
        return a

    def __call__(self, x):
        acc = 0
        for coef in reversed(self.c):
            acc = acc * x + coef
        return acc

    def __repr__(self):
        return f"Poly({[str(x) for x in self.c]})"

    def to_json(self) -> list[str]:
        return [fmt_rational(x) for x in self.c]


# ---------------------------------------------------------------------------
# rational functions of one variable


class RatFunc:
    """num/den with gcd(num, den) = 1 and den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None, _reduced: bool = False):
        den = Poly.const(1) if den is None else den
        if den.is_zero():
            raise PoleError("zero denominator")
        if not _reduced:
            if num.is_zero():
                den = Poly.const(1)
            else:
                g = num.gcd(den)
                if g.degree > 0:
                    num = num.divmod(g)[0]
                    den = den.divmod(g)[0]
            lead = den.lead()
            if lead != 1:
                num, den = num * (1 / lead), den * (1 / lead)
        self.num, self.den = num, den

    @classmethod
    def const(cls, a) -> RatFunc:
        return cls(Poly.const(a), _reduced=True)

    @classmethod
    def var(cls) -> RatFunc:
        return cls(Poly.x(), _reduced=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _co(self, other) -> RatFunc:
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Rational):
            return RatFunc.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._co(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = self._co(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                return RatFunc.const(0)
            return RatFunc(self.num * Fraction(other), self.den, _reduced=True)
        other = self._co(other)
        if other is NotImplemented:
            return other
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        n1, d2 = (self.num.divmod(g1)[0], other.den.divmod(g1)[0]) if g1.degree > 0 else (self.num, other.den)
        n2, d1 = (other.num.divmod(g2)[0], self.den.divmod(g2)[0]) if g2.degree > 0 else (other.num, self.den)
        return RatFunc(n1 * n2, d1 * d2, _reduced=True)._normalize_lead()

    __rmul__ = __mul__

    def _normalize_lead(self) -> RatFunc:
        if self.num.is_zero():
            return RatFunc.const(0)
        lead = self.den.lead()
        if lead == 1:
            return self
        return RatFunc(self.num * (1 / lead), self.den * (1 / lead), _reduced=True)

    def inv(self) -> RatFunc:
        if self.is_zero():
            raise PoleError("inverse of zero rational function")
        return RatFunc(self.den, self.num, _reduced=True)._normalize_lead()

    def __truediv__(self, other):
        other = self._co(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, k: int):
        out = RatFunc.const(1)
        base = self if k >= 0 else self.inv()
        for _ in range(abs(k)):
            out = out * base
        return out

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = RatFunc.const(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise PoleError(f"pole at {x}")
        return self.num(x) / d

    eval = __call__

    def __repr__(self):
        return f"RatFunc({self.num.to_json()}/{self.den.to_json()})"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}


# ---------------------------------------------------------------------------
# Laurent series in hbar with absolute precision


class TruncHbar:
    """Laurent series in hbar known modulo hbar**prec (``prec=None``: exact)."""

    __slots__ = ("c", "prec")

    def __init__(self, coeffs: Mapping[int, object] | None = None, prec: int | None = None):
        c = {}
        for e, v in (coeffs or {}).items():
            if prec is not None and e >= prec:
                continue
            v = Fraction(v)
            if v:
                c[e] = v
        self.c, self.prec = c, prec

    @classmethod
    def const(cls, a, prec=None) -> TruncHbar:
        return cls({0: a}, prec)

    @classmethod
    def var(cls, power: int = 1) -> TruncHbar:
        return cls({power: 1})

    def valuation(self) -> float:
        if self.c:
            return min(self.c)
        return float("inf") if self.prec is None else self.prec

    def is_zero(self) -> bool:
        return not self.c

    def _co(self, other):
        if isinstance(other, TruncHbar):
            return other
        if isinstance(other, Rational):
            return TruncHbar.const(other)
        return NotImplemented

    @staticmethod
    def _pmin(a, b):
        if a is None:
            return b
        if b is None:
            return a
        return min(a, b)

    def __add__(self, other):
        other = self._co(other)
        if other is NotImplemented:
            return other
        c = dict(self.c)
        for e, v in other.c.items():
            c[e] = c.get(e, 0) + v
        return TruncHbar(c, self._pmin(self.prec, other.prec))

    __radd__ = __add__

    def __neg__(self):
        return TruncHbar({e: -v for e, v in self.c.items()}, self.prec)

    def __sub__(self, other):
        other = self._co(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            return TruncHbar({e: v * other for e, v in self.c.items()}, self.prec)
        other = self._co(other)
        if other is NotImplemented:
            return other
        va, vb = self.valuation(), other.valuation()
        cands = []
        if other.prec is not None:
            cands.append(va + other.prec)
        if self.prec is not None:
            cands.append(vb + self.prec)
        prec = None
        if cands:
            m = min(cands)
            prec = None if m == float("inf") else int(m)
        c: dict[int, Fraction] = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                if prec is None or e < prec:
                    c[e] = c.get(e, 0) + v1 * v2
        return TruncHbar(c, prec)

    __rmul__ = __mul__

    def inv(self) -> TruncHbar:
        """Multiplicative inverse; needs finite precision unless self is a monomial."""
        if not self.c:
            raise PoleError("inverse of a series that vanishes to known precision")
        v = min(self.c)
        lead = self.c[v]
        if len(self.c) == 1 and self.prec is None:
            return TruncHbar({-v: 1 / lead})
        if self.prec is None:
            raise DomainError("inverse of an exact non-monomial needs a precision; use TruncHbarRing.inv")
        rel = self.prec - v
        # self = lead * hbar^v * (1 + u), u of positive valuation
        u = TruncHbar({e - v: c / lead for e, c in self.c.items() if e != v}, rel)
        acc = TruncHbar({0: 1}, rel)
        term = TruncHbar({0: 1}, rel)
        for _ in range(rel):
            term = term * (-u)
            if term.is_zero():
                break
            acc = acc + term
        return TruncHbar({e - v: c / lead for e, c in acc.c.items()}, rel - v)

    def with_prec(self, prec: int | None) -> TruncHbar:
        return TruncHbar(self.c, self._pmin(self.prec, prec))

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = TruncHbar.const(other)
        if not isinstance(other, TruncHbar):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __repr__(self):
        body = " + ".join(f"({v})h^{e}" for e, v in sorted(self.c.items())) or "0"
        return f"TruncHbar({body} + O(h^{self.prec}))" if self.prec is not None else f"TruncHbar({body})"

    def to_json(self) -> dict:
        return {"coeffs": {str(e): fmt_rational(v) for e, v in sorted(self.c.items())}, "prec": self.prec}


# ---------------------------------------------------------------------------
# Laurent polynomials in q and hbar


class LaurentQ:
    """Finite sum of c * q^a * hbar^b with a, b arbitrary integers."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Mapping[tuple[int, int], object] | None = None):
        c = {}
        for k, v in (coeffs or {}).items():
            v = Fraction(v)
            if v:
                c[(int(k[0]), int(k[1]))] = v
        self.c = c

    @classmethod
    def const(cls, a) -> LaurentQ:
        return cls({(0, 0): a})

    @classmethod
    def q(cls, k: int = 1) -> LaurentQ:
        return cls({(k, 0): 1})

    @classmethod
    def hbar(cls, k: int = 1) -> LaurentQ:
        return cls({(0, k): 1})

    def is_zero(self) -> bool:
        return not self.c

    def _co(self, other):
        if isinstance(other, LaurentQ):
            return other
        if isinstance(other, Rational):
            return LaurentQ.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._co(other)
        if other is NotImplemented:
            return other
        c = dict(self.c)
        for k, v in other.c.items():
            c[k] = c.get(k, 0) + v
        return LaurentQ(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentQ({k: -v for k, v in self.c.items()})

    def __sub__(self, other):
        other = self._co(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            return LaurentQ({k: v * other for k, v in self.c.items()})
        other = self._co(other)
        if other is NotImplemented:
            return other
        c: dict[tuple[int, int], Fraction] = {}
        for (a1, b1), v1 in self.c.items():
            for (a2, b2), v2 in other.c.items():
                k = (a1 + a2, b1 + b2)
                c[k] = c.get(k, 0) + v1 * v2
        return LaurentQ(c)

    __rmul__ = __mul__

    def inv(self) -> LaurentQ:
        if len(self.c) != 1:
            raise DomainError("only monomials are invertible in LaurentQ")
        (a, b), v = next(iter(self.c.items()))
        return LaurentQ({(-a, -b): 1 / v})

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = LaurentQ.const(other)
        if not isinstance(other, LaurentQ):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __repr__(self):
        body = " + ".join(f"({v})q^{a}h^{b}" for (a, b), v in sorted(self.c.items())) or "0"
        return f"LaurentQ({body})"

    def to_json(self) -> dict:
        return {f"q^{a}h^{b}": fmt_rational(v) for (a, b), v in sorted(self.c.items())}


# ---------------------------------------------------------------------------
# ring descriptors


class CoeffRing:
    """Descriptor for one of the coefficient domains above."""

    name = "abstract"

    def zero(self):
        return self.const(0)

    def one(self):
        return self.const(1)

    def const(self, a):
        raise NotImplementedError

    def hbar(self, k: int = 1):
        raise DomainError(f"{self.name} has no hbar")

    def q_pow(self, k: int):
        raise DomainError(f"{self.name} cannot represent q = e^hbar")

    def inv(self, x):
        if is_zero(x):
            raise PoleError("division by zero coefficient")
        return x.inv()

    def exp_hbar_poly(self, coeffs: Mapping[int, object]):
        """exp(sum_k coeffs[k] hbar^k) for a polynomial argument without constant term."""
        raise DomainError(f"{self.name} cannot represent exponentials of hbar")

    def is_zero(self, x) -> bool:
        return is_zero(x)

    def __repr__(self):
        return f"<{self.name}>"


class RationalRing(CoeffRing):
    name = "Rational"

    def const(self, a):
        return Fraction(a)

    def inv(self, x):
        if x == 0:
            raise PoleError("division by zero")
        return 1 / Fraction(x)


class RatFuncRing(CoeffRing):
    """Q(v) for one formal variable v (hbar in the curves, beta in the constraints)."""

    def __init__(self, var: str = "hbar"):
        self.var = var
        self.name = f"RatFunc[{var}]"

    def const(self, a):
        return RatFunc.const(a)

    def hbar(self, k: int = 1):
        return RatFunc.var() ** k


class TruncHbarRing(CoeffRing):
    """Laurent series in hbar; inexact results are known modulo hbar**(order+1)."""

    def __init__(self, order: int):
        self.order = order
        self.name = f"TruncHbar[{order}]"

    @property
    def prec(self) -> int:
        return self.order + 1

    def const(self, a):
        return TruncHbar.const(a)

    def hbar(self, k: int = 1):
        return TruncHbar.var(k)

    def exp_hbar_poly(self, coeffs):
        arg = TruncHbar(coeffs, self.prec)
        if any(e <= 0 for e in arg.c):
            raise DomainError("exp argument must have positive hbar-valuation")
        acc = TruncHbar({0: 1}, self.prec)
        term = TruncHbar({0: 1}, self.prec)
        for k in range(1, self.prec + 1):
            term = term * arg * Fraction(1, k)
            if term.is_zero():
                break
            acc = acc + term
        return acc

    def q_pow(self, k: int):
        return self.exp_hbar_poly({1: k}) if k else self.one()

    def inv(self, x):
        if isinstance(x, TruncHbar) and x.prec is None and len(x.c) > 1:
            x = x.with_prec(self.prec)
        return super().inv(x)

    def from_ratfunc(self, f: RatFunc) -> TruncHbar:
        """Expand a rational function of hbar as a Laurent series to this ring's precision."""
        num = TruncHbar(dict(enumerate(f.num.c)))
        den = TruncHbar(dict(enumerate(f.den.c)))
        v = den.valuation()
        den_inv = den.with_prec(self.prec + int(v) + 1 + max(0, int(v))).inv()
        return (num * den_inv).with_prec(self.prec)


class LaurentQRing(CoeffRing):
    name = "LaurentQ"

    def const(self, a):
        return LaurentQ.const(a)

    def hbar(self, k: int = 1):
        return LaurentQ.hbar(k)

    def q_pow(self, k: int):
        return LaurentQ.q(k)


RATIONAL = RationalRing()


def coeff_to_json(x):
    if isinstance(x, Rational):
        return fmt_rational(x)
    return x.to_json()


# ---------------------------------------------------------------------------
# truncated multivariate series


@dataclass(frozen=True)
class Grading:
    """A weighting of the variables together with the kept window [lo, hi] (None = unbounded)."""

    weights: tuple[int, ...]
    hi: int | None
    lo: int | None = 0

    def degree(self, mono: tuple[int, ...]) -> int:
        return sum(w * e for w, e in zip(self.weights, mono))

    def keeps(self, mono: tuple[int, ...]) -> bool:
        d = self.degree(mono)
        return (self.hi is None or d <= self.hi) and (self.lo is None or d >= self.lo)


class TruncatedSeries:
    """Polynomial truncation of a multivariate series.

    Monomials are exponent tuples over ``names``; a monomial is stored only
    if every grading keeps it.  With non-negative weights and ``lo`` of 0
    the kept set is the complement of an ideal, so products are exact on the
    truncated ring.
    """

    __slots__ = ("names", "gradings", "terms")

    def __init__(self, names: Iterable[str], gradings: Iterable[Grading], terms: Mapping | None = None):
        self.names = tuple(names)
        self.gradings = tuple(gradings)
        for g in self.gradings:
            if len(g.weights) != len(self.names):
                raise DomainError("grading/variable count mismatch")
        self.terms = {}
        for mono, c in (terms or {}).items():
            mono = tuple(mono)
            if len(mono) != len(self.names):
                raise DomainError(f"monomial {mono} has wrong arity")
            if not is_zero(c) and all(g.keeps(mono) for g in self.gradings):
                self.terms[mono] = c

    # -- construction -------------------------------------------------------
    @classmethod
    def weighted(cls, names: Iterable[str], weights: Iterable[int], cap: int, terms=None) -> TruncatedSeries:
        names = tuple(names)
        return cls(names, (Grading(tuple(weights), cap),), terms)

    @classmethod
    def univariate(cls, name: str, terms: Mapping[int, object], lo: int | None, hi: int | None) -> TruncatedSeries:
        return cls((name,), (Grading((1,), hi, lo),), {(e,): c for e, c in terms.items()})

    def like(self, terms: Mapping | None = None) -> TruncatedSeries:
        return TruncatedSeries(self.names, self.gradings, terms)

    def with_gradings(self, gradings: Iterable[Grading]) -> TruncatedSeries:
        return TruncatedSeries(self.names, gradings, self.terms)

    def one(self) -> TruncatedSeries:
        return self.like({(0,) * len(self.names): 1})

    def variable(self, name: str) -> TruncatedSeries:
        mono = tuple(1 if n == name else 0 for n in self.names)
        return self.like({mono: 1})

    # -- access ---------------------------------------------------------------
    def coeff(self, mono) -> object:
        return self.terms.get(tuple(mono), 0)

    def __getitem__(self, mono):
        if isinstance(mono, int):
            mono = (mono,)
        return self.coeff(mono)

    @property
    def constant(self):
        return self.coeff((0,) * len(self.names))

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: TruncatedSeries):
        if self.names != other.names or self.gradings != other.gradings:
            raise DomainError("series signature mismatch")

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self + self.one() * other
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms[m] + c if m in terms else c
        return self.like(terms)

    __radd__ = __add__

    def __neg__(self):
        return self.like({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.like({m: c * other for m, c in self.terms.items()})
        self._check(other)
        out: dict = {}
        gradings = self.gradings
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                if not all(g.keeps(m) for g in gradings):
                    continue
                v = c1 * c2
                out[m] = out[m] + v if m in out else v
        return self.like(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> TruncatedSeries:
        out = self.one()
        for _ in range(k):
            out = out * self
        return out

    def map_coeffs(self, f: Callable) -> TruncatedSeries:
        return self.like({m: f(c) for m, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.names == other.names and (self - other).is_zero()

    __hash__ = None

    # -- transcendental functions ----------------------------------------------
    def _nilpotent_powers(self):
        if not is_zero(self.constant):
            raise DomainError("series must have zero constant term")
        power, k = self.one(), 0
        while True:
            power, k = power * self, k + 1
            if power.is_zero():
                return
            if k > 10_000:
                raise DomainError("series is not nilpotent under the truncation")
            yield k, power

    def exp(self) -> TruncatedSeries:
        out = self.one()
        fact = 1
        for k, pw in self._nilpotent_powers():
            fact *= k
            out = out + pw * Fraction(1, fact)
        return out

    def log(self) -> TruncatedSeries:
        c0 = self.constant
        if isinstance(c0, Rational):
            ok = c0 == 1
        else:
            ok = is_zero(c0 - 1)
        if not ok:
            raise DomainError("log requires constant term 1")
        u = self - self.one()
        out = self.like({})
        for k, pw in u._nilpotent_powers():
            out = out + pw * Fraction((-1) ** (k + 1), k)
        return out

    def inverse(self) -> TruncatedSeries:
        c0 = self.constant
        if is_zero(c0):
            raise DomainError("constant term not invertible")
        inv0 = Fraction(1) / c0 if isinstance(c0, Rational) else c0.inv()
        u = self * inv0 - self.one()
        out = self.one()
        for k, pw in u._nilpotent_powers():
            out = out + pw * (-1) ** k
        return out * inv0

    # -- io -------------------------------------------------------------------
    def to_json(self) -> list[dict]:
        return [
            {"monomial": dict(zip(self.names, m)), "coefficient": coeff_to_json(c)}
            for m, c in sorted(self.terms.items())
        ]

    def __repr__(self):
        return f"TruncatedSeries({self.names}, {len(self.terms)} terms)"


def kp_times(n: int, prefix: str = "t") -> tuple[str, ...]:
    return tuple(f"{prefix}{k}" for k in range(1, n + 1))


def t_series_space(n: int, prefix: str = "t") -> TruncatedSeries:
    """Empty series in t_1..t_n, deg t_k = k, truncated at weighted degree n."""
    return TruncatedSeries.weighted(kp_times(n, prefix), range(1, n + 1), n)


def monomials_upto(weights: tuple[int, ...], cap: int) -> list[tuple[int, ...]]:
    """All exponent tuples with weighted degree <= cap (positive weights)."""
    ranges = [range(cap // w + 1) for w in weights]
    return [m for m in iproduct(*ranges) if sum(w * e for w, e in zip(weights, m)) <= cap]


def exp_coefficients(coeffs: Mapping[int, object], n: int, one=Fraction(1)) -> list:
    """[x^j] exp(sum_k coeffs[k] x^k) for j = 0..n, by the recursion j a_j = sum_k k c_k a_{j-k}."""
    a = [one]
    for j in range(1, n + 1):
        acc = 0
        for k in range(1, j + 1):
            ck = coeffs.get(k)
            if ck is None or is_zero(ck):
                continue
            acc = acc + a[j - k] * ck * k
        a.append(acc * Fraction(1, j))
    return a


def double_factorial(m: int) -> int:
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


__all__ = [
    "CoeffRing",
    "Grading",
    "LaurentQ",
    "LaurentQRing",
    "Poly",
    "RATIONAL",
    "RatFunc",
    "RatFuncRing",
    "RationalRing",
    "TruncHbar",
    "TruncHbarRing",
    "TruncatedSeries",
    "coeff_to_json",
    "double_factorial",
    "exp_coefficients",
    "factorial",
    "fmt_rational",
    "is_zero",
    "kp_times",
    "monomials_upto",
    "t_series_space",
]
