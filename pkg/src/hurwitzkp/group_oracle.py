"""Brute-force ground truth in the group algebra of S_n.

Group-algebra vectors are integer arrays indexed by the lexicographic rank
of a permutation.  Jucys-Murphy polynomials are built by repeated right
multiplication with ``J_y = sum_{x<y} (x y)``, which counts exactly the
ordered transposition tuples of the corresponding factorization problem.
Central results are projected to class coefficients.

``literal_hurwitz`` is a second, deliberately naive route that enumerates
tuples of explicit permutations with itertools; it is only meant for
n <= 5 and exists to check the vectorised route.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations, product
from math import comb, factorial
from typing import Iterable, Mapping

import numpy as np

from . import _kernels as K
from .blocks import BlockSpec
from .errors import DomainError, ResourceError
from .partitions import Partition, class_size, partitions_of

DEFAULT_LIMIT = 7


class Permutation:
    """A bijection of {1..n}, stored as its tuple of images.

    Composition follows function composition: ``(p * q)(i) = p(q(i))``.
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise DomainError(f"not a permutation of 1..{len(images)}: {images}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, x: int, y: int) -> Permutation:
        im = list(range(1, n + 1))
        im[x - 1], im[y - 1] = y, x
        return cls(im)

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Iterable[int]]) -> Permutation:
        im = list(range(1, n + 1))
        for cyc in cycles:
            cyc = list(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                im[a - 1] = b
        return cls(im)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.n != other.n:
            raise DomainError("degree mismatch")
        return Permutation(self.images[j - 1] for j in other.images)

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(inv)

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for s in range(1, self.n + 1):
            if s in seen:
                continue
            cyc, j = [], s
            while j not in seen:
                seen.add(j)
                cyc.append(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> Partition:
        return Partition.of(len(c) for c in self.cycles())

    def rank(self) -> int:
        return int(K.rank(np.array([self.images], dtype=np.int64) - 1)[0])

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"


def check_limit(n: int, limit: int | None = None, force: bool = False):
    limit = DEFAULT_LIMIT if limit is None else limit
    if n < 1:
        raise DomainError("n must be positive")
    if n > limit and not force:
        raise ResourceError(f"n = {n} exceeds the enumeration limit {limit} (use force)")


class SymmetricGroup:
    """Tables for S_n: permutations in rank order, class labels, transposition actions."""

    def __init__(self, n: int):
        self.n = n
        self.order = factorial(n)
        self.perms = np.array(list(permutations(range(n))), dtype=np.int64).reshape(self.order, n)
        self.classes = partitions_of(n)
        self.class_index = {c: i for i, c in enumerate(self.classes)}
        mult = K.cycle_multiplicities(self.perms)
        code = {tuple(self._mult_vector(c)): i for i, c in enumerate(self.classes)}
        self.class_of = np.array([code[tuple(row[1:])] for row in mult], dtype=np.int64)
        self.class_sizes = np.bincount(self.class_of, minlength=len(self.classes))
        self.reps = np.array([int(np.argmax(self.class_of == i)) for i in range(len(self.classes))])
        # transpositions ordered by larger leg, then smaller
        self.transpositions = [(x, y) for y in range(2, n + 1) for x in range(1, y)]
        tables = []
        for x, y in self.transpositions:
            swapped = self.perms.copy()
            swapped[:, [x - 1, y - 1]] = swapped[:, [y - 1, x - 1]]
            tables.append(K.rank(swapped))
        self.right = np.array(tables, dtype=np.int64).reshape(len(tables), self.order)
        self._structure = None

    @staticmethod
    def _mult_vector(c: Partition) -> list[int]:
        m = c.multiplicities()
        return [m.get(k, 0) for k in range(1, c.size + 1)]

    def jucys_table(self, y: int) -> np.ndarray:
        """Rows of ``right`` for the transpositions (x y), x < y."""
        start = (y - 1) * (y - 2) // 2
        return self.right[start : start + y - 1]

    def times_jucys(self, vec: np.ndarray, y: int) -> np.ndarray:
        return K.gather_sum(vec, self.jucys_table(y))

    def identity_vector(self) -> np.ndarray:
        v = np.zeros(self.order, dtype=np.int64)
        v[0] = 1
        return v

    def indicator(self, alpha: Partition) -> np.ndarray:
        return (self.class_of == self.class_index[alpha]).astype(np.int64)

    def project(self, vec: np.ndarray) -> ClassAlgebraElement:
        """Class coefficients of a central vector; raises if ``vec`` is not central."""
        coeffs = {}
        for i, c in enumerate(self.classes):
            vals = vec[self.class_of == i]
            if not (vals == vals[0]).all():
                raise DomainError(f"vector is not central on class {c}")
            if vals[0]:
                coeffs[c] = Fraction(int(vals[0]))
        return ClassAlgebraElement(self.n, coeffs)

    def structure_constants(self) -> np.ndarray:
        """c[a, b, g] = #{(x, y): x in C_a, y in C_b, x y = pi_g} for a fixed pi_g in C_g."""
        if self._structure is None:
            k = len(self.classes)
            inv = np.argsort(self.perms, axis=1)
            out = np.zeros((k, k, k), dtype=np.int64)
            for g, r in enumerate(self.reps):
                pi = self.perms[r]
                # x^{-1} pi as image arrays: (x^{-1} o pi)(i) = x^{-1}[pi[i]]
                rest = K.rank(inv[:, pi])
                out[:, :, g] = K.pair_counts(self.class_of, self.class_of[rest], k)
            self._structure = out
        return self._structure


@lru_cache(maxsize=None)
def _group(n: int) -> SymmetricGroup:
    return SymmetricGroup(n)


def symmetric_group(n: int, *, limit: int | None = None, force: bool = False) -> SymmetricGroup:
    check_limit(n, limit, force)
    return _group(n)


class ClassAlgebraElement:
    """Exact rational combination of class sums C_alpha of S_n."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping[Partition, object] | None = None):
        self.n = n
        clean = {}
        for alpha, c in (coeffs or {}).items():
            if not isinstance(alpha, Partition):
                alpha = Partition.of(alpha)
            if alpha.size != n:
                raise DomainError(f"class {alpha} is not a partition of {n}")
            c = Fraction(c)
            if c:
                clean[alpha] = clean.get(alpha, 0) + c
        self.coeffs = {a: c for a, c in clean.items() if c}

    @classmethod
    def identity(cls, n: int) -> ClassAlgebraElement:
        return cls(n, {Partition((1,) * n): 1})

    @classmethod
    def class_sum(cls, n: int, alpha: Partition) -> ClassAlgebraElement:
        return cls(n, {alpha: 1})

    def coefficient(self, alpha: Partition) -> Fraction:
        return self.coeffs.get(alpha, Fraction(0))

    def identity_coefficient(self) -> Fraction:
        """Coefficient of the identity permutation."""
        return self.coefficient(Partition((1,) * self.n))

    def _check(self, other: ClassAlgebraElement):
        if self.n != other.n:
            raise DomainError(f"S_{self.n} vs S_{other.n}")

    def __add__(self, other: ClassAlgebraElement) -> ClassAlgebraElement:
        self._check(other)
        out = dict(self.coeffs)
        for a, c in other.coeffs.items():
            out[a] = out.get(a, 0) + c
        return ClassAlgebraElement(self.n, out)

    def __neg__(self):
        return ClassAlgebraElement(self.n, {a: -c for a, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ClassAlgebraElement):
            return class_product(self, other)
        return ClassAlgebraElement(self.n, {a: c * other for a, c in self.coeffs.items()})

    def __rmul__(self, other):
        return ClassAlgebraElement(self.n, {a: c * other for a, c in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, ClassAlgebraElement) and self.n == other.n and self.coeffs == other.coeffs

    __hash__ = None

    def __repr__(self):
        body = " + ".join(f"{c}*C[{a}]" for a, c in sorted(self.coeffs.items(), key=lambda t: t[0].parts, reverse=True))
        return f"ClassAlgebraElement(n={self.n}: {body or '0'})"

    def to_json(self) -> dict[str, str]:
        return {str(a): f"{c.numerator}/{c.denominator}" for a, c in sorted(self.coeffs.items(), key=lambda t: t[0].parts, reverse=True)}

    @classmethod
    def from_json(cls, n: int, data: Mapping[str, str]) -> ClassAlgebraElement:
        return cls(n, {Partition.parse(k): Fraction(v) for k, v in data.items()})

    def to_vector(self, group: SymmetricGroup) -> list[Fraction]:
        """Expand back to one coefficient per permutation (rank order)."""
        return [self.coefficient(group.classes[i]) for i in group.class_of]


def class_product(a: ClassAlgebraElement, b: ClassAlgebraElement, *, force: bool = False) -> ClassAlgebraElement:
    """Product in the centre of the group algebra via brute-forced structure constants."""
    if a.n != b.n:
        raise DomainError(f"S_{a.n} vs S_{b.n}")
    if not a.coeffs or not b.coeffs:
        return ClassAlgebraElement(a.n)
    grp = symmetric_group(a.n, force=force)
    sc = grp.structure_constants()
    out: dict[Partition, Fraction] = {}
    for al, ca in a.coeffs.items():
        i = grp.class_index[al]
        for be, cb in b.coeffs.items():
            row = sc[i, grp.class_index[be]]
            for g in np.nonzero(row)[0]:
                gamma = grp.classes[g]
                out[gamma] = out.get(gamma, 0) + ca * cb * int(row[g])
    return ClassAlgebraElement(a.n, out)


# -- Jucys-Murphy polynomials ---------------------------------------------------------


def _strict_vectors(grp: SymmetricGroup, bmax: int) -> list[np.ndarray]:
    """[sigma_k(J_2..J_n) as a group vector for k = 0..bmax]."""
    dist = [grp.identity_vector()] + [np.zeros(grp.order, dtype=np.int64) for _ in range(bmax)]
    for y in range(2, grp.n + 1):
        for k in range(min(bmax, y - 1), 0, -1):
            dist[k] = dist[k] + grp.times_jucys(dist[k - 1], y)
    return dist


def _monotone_vectors(grp: SymmetricGroup, bmax: int) -> list[np.ndarray]:
    dist = [grp.identity_vector()] + [np.zeros(grp.order, dtype=np.int64) for _ in range(bmax)]
    for y in range(2, grp.n + 1):
        for k in range(1, bmax + 1):
            dist[k] = dist[k] + grp.times_jucys(dist[k - 1], y)
    return dist


def _power_vector(grp: SymmetricGroup, b: int) -> np.ndarray:
    total = np.zeros(grp.order, dtype=np.int64)
    for y in range(2, grp.n + 1):
        v = grp.identity_vector()
        for _ in range(b):
            v = grp.times_jucys(v, y)
        total += v
    return total


def jucys_symmetric(n: int, basis: str, b: int, *, force: bool = False) -> ClassAlgebraElement:
    """sigma_b, h_b or p_b of J_2..J_n, expanded in the group algebra and projected to classes.

    p_0 is taken as the number of variables, n - 1.
    """
    if b < 0:
        raise DomainError("b must be non-negative")
    grp = symmetric_group(n, force=force)
    if basis == "sigma":
        vec = _strict_vectors(grp, b)[b]
    elif basis == "h":
        vec = _monotone_vectors(grp, b)[b]
    elif basis == "p":
        vec = _power_vector(grp, b)
    else:
        raise DomainError(f"unknown basis {basis!r}; expected sigma, h or p")
    return grp.project(vec)


def free_single_element(n: int, b: int) -> ClassAlgebraElement:
    """Sum of all C_alpha with l(alpha) = n - b."""
    return ClassAlgebraElement(n, {a: 1 for a in partitions_of(n) if a.length == n - b})


def _compositions(b: int, k: int):
    if k == 1:
        yield (b,)
        return
    for first in range(1, b - k + 2):
        for rest in _compositions(b - first, k - 1):
            yield (first,) + rest


def free_group_element(n: int, b: int, *, force: bool = False) -> ClassAlgebraElement:
    """Signed sum over k-tuples of non-identity permutations with total length defect b.

    sum_k (-1)^(k+b) sum_{b_1+..+b_k=b, b_i>=1} prod_i FreeSingle(b_i)
    """
    if b == 0:
        return ClassAlgebraElement.identity(n)
    singles = {j: free_single_element(n, j) for j in range(1, b + 1)}
    total = ClassAlgebraElement(n)
    for k in range(1, b + 1):
        sign = (-1) ** (k + b)
        for comp in _compositions(b, k):
            term = ClassAlgebraElement.identity(n)
            for part in comp:
                term = class_product(term, singles[part], force=force)
                if not term.coeffs:
                    break
            total = total + term * sign
    return total


def completed_cycle_element(n: int, r: int, *, force: bool = False) -> ClassAlgebraElement:
    """Completed r-cycle as a combination of power sums of all contents.

    Its eigenvalue sum_boxes [(c+1/2)^r - (c-1/2)^r]/r! expands into
    sum_k a_k p_k(contents), and p_k over all boxes is n for k = 0 and
    p_k(J_2..J_n) for k >= 1 (box (1,1) has content 0).
    """
    if r < 1:
        raise DomainError("r must be >= 1")
    total = ClassAlgebraElement(n)
    for k in range(r - 1, -1, -2):
        a_k = Fraction(2 * comb(r, k), 2 ** (r - k) * factorial(r))
        if k == 0:
            part = ClassAlgebraElement.identity(n) * n
        else:
            part = jucys_symmetric(n, "p", k, force=force)
        total = total + part * a_k
    return total


def hyper_w_element(n: int, w, *, force: bool = False) -> ClassAlgebraElement:
    """sum_b w^b sigma_b(J): the element with eigenvalue prod over boxes of (1 + c w)."""
    w = Fraction(w)
    grp = symmetric_group(n, force=force)
    vecs = _strict_vectors(grp, n - 1)
    total = ClassAlgebraElement(n)
    for b, v in enumerate(vecs):
        total = total + grp.project(v) * (w**b)
    return total


def block_element(n: int, block: BlockSpec, *, force: bool = False) -> ClassAlgebraElement:
    f, p = block.flavor, block.param
    if f == "strict":
        return jucys_symmetric(n, "sigma", p, force=force)
    if f == "monotone":
        return jucys_symmetric(n, "h", p, force=force)
    if f == "atlantes":
        return jucys_symmetric(n, "p", p, force=force)
    if f == "free_single":
        return free_single_element(n, p)
    if f == "free_group":
        return free_group_element(n, p, force=force)
    if f == "class_sum":
        if p.size > n:
            return ClassAlgebraElement(n)
        return ClassAlgebraElement.class_sum(n, p.padded(n))
    if f == "completed":
        return completed_cycle_element(n, p, force=force)
    if f == "hyper_w":
        return hyper_w_element(n, p, force=force)
    raise DomainError(f"the oracle has no finite group-algebra element for {f}")


def brute_hurwitz(mu: Partition, nu: Partition, blocks: Iterable[BlockSpec] = (), *, force: bool = False) -> Fraction:
    """(1/n!) x number of tuples (g in C_mu, h in C_nu, block factors) with product the identity."""
    if mu.size != nu.size:
        raise DomainError(f"|{mu}| != |{nu}|")
    n = mu.size
    check_limit(n, force=force)
    acc = ClassAlgebraElement.class_sum(n, nu)
    for blk in blocks:
        acc = class_product(acc, block_element(n, blk, force=force), force=force)
        if not acc.coeffs:
            return Fraction(0)
    # [e](C_mu X) = |C_mu| * (coefficient of C_mu in X), since C_mu is closed under inverses
    return Fraction(class_size(mu)) * acc.coefficient(mu) / factorial(n)


# -- literal enumeration ----------------------------------------------------------------

LITERAL_LIMIT = 5


def _transpositions(n, y):
    return [Permutation.transposition(n, x, y) for x in range(1, y)]


def _literal_block(n: int, block: BlockSpec) -> dict[Permutation, Fraction]:
    """Explicit tuples of the block, collapsed to {product: signed weight}."""
    e = Permutation.identity(n)
    out: dict[Permutation, Fraction] = {}

    def add(seq, weight=1):
        g = e
        for s in seq:
            g = g * s
        out[g] = out.get(g, 0) + Fraction(weight)

    f, p = block.flavor, block.param
    all_perms = [Permutation(im) for im in permutations(range(1, n + 1))]
    if f in ("strict", "monotone"):
        pick = combinations if f == "strict" else combinations_with_replacement
        for ys in pick(range(2, n + 1), p):
            for seq in product(*(_transpositions(n, y) for y in ys)):
                add(seq)
    elif f == "atlantes":
        for y in range(2, n + 1):
            for seq in product(_transpositions(n, y), repeat=p):
                add(seq)
    elif f == "free_single":
        for g in all_perms:
            if len(g.cycles()) == n - p:
                add([g])
    elif f == "free_group":
        nontrivial = [g for g in all_perms if g != e]
        defect = {g: n - len(g.cycles()) for g in nontrivial}

        def rec(prefix, remaining):
            if remaining == 0:
                k = len(prefix)
                add(prefix, (-1) ** (k + p))
                return
            for g in nontrivial:
                if defect[g] <= remaining:
                    rec(prefix + [g], remaining - defect[g])

        rec([], p)
    elif f == "class_sum":
        if p.size <= n:
            target = p.padded(n)
            for g in all_perms:
                if g.cycle_type() == target:
                    add([g])
    elif f == "completed" and p in (1, 2):
        if p == 1:
            add([], n)
        else:
            for y in range(2, n + 1):
                for t in _transpositions(n, y):
                    add([t])
    elif f == "hyper_w":
        for b in range(n):
            for ys in combinations(range(2, n + 1), b):
                for seq in product(*(_transpositions(n, y) for y in ys)):
                    add(seq, p**b)
    else:
        raise DomainError(f"literal enumeration does not support {block}")
    return {g: w for g, w in out.items() if w}


def literal_hurwitz(mu: Partition, nu: Partition, blocks: Iterable[BlockSpec] = ()) -> Fraction:
    """Same quantity as ``brute_hurwitz`` by enumerating explicit permutation tuples (n <= 5)."""
    if mu.size != nu.size:
        raise DomainError(f"|{mu}| != |{nu}|")
    n = mu.size
    check_limit(n, LITERAL_LIMIT)
    all_perms = [Permutation(im) for im in permutations(range(1, n + 1))]
    state: dict[Permutation, Fraction] = {g: Fraction(1) for g in all_perms if g.cycle_type() == mu}
    for blk in blocks:
        factor = _literal_block(n, blk)
        nxt: dict[Permutation, Fraction] = {}
        for g, a in state.items():
            for h, c in factor.items():
                gh = g * h
                nxt[gh] = nxt.get(gh, 0) + a * c
        state = {g: w for g, w in nxt.items() if w}
    total = Fraction(0)
    for g, w in state.items():
        if g.inverse().cycle_type() == nu:
            total += w
    return total / factorial(n)
