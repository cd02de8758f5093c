"""Block flavors: the central elements inserted into a factorization count."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .partitions import Partition

FLAVORS = (
    "strict",
    "monotone",
    "atlantes",
    "free_single",
    "free_group",
    "class_sum",
    "completed",
    "hyper_w",
    "hyper_z",
)

ALIASES = {
    "strict": "strict",
    "strictly-monotone": "strict",
    "strictly_monotone": "strict",
    "monotone": "monotone",
    "atlantes": "atlantes",
    "free-single": "free_single",
    "free_single": "free_single",
    "free-group": "free_group",
    "free_group": "free_group",
    "class-sum": "class_sum",
    "class_sum": "class_sum",
    "completed": "completed",
    "completed-cycle": "completed",
    "hyper-w": "hyper_w",
    "hyper_w": "hyper_w",
    "hyper-z": "hyper_z",
    "hyper_z": "hyper_z",
}

# Jucys-type flavors are symmetric polynomials of J_2..J_n
JUCYS_BASIS = {"strict": "sigma", "monotone": "h", "atlantes": "p"}


@dataclass(frozen=True)
class BlockSpec:
    """One block of a Hurwitz problem.

    ``param`` is an int b for strict/monotone/atlantes/free_single/free_group,
    an int r for completed, a Partition for class_sum (non-trivial cycles,
    padded with fixed points to the problem size) and a Fraction for the
    hyper_w / hyper_z weights.
    """

    flavor: str
    param: object

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise DomainError(f"unknown flavor {self.flavor!r}")
        p = self.param
        if self.flavor == "class_sum":
            if not isinstance(p, Partition):
                object.__setattr__(self, "param", Partition.of(p))
        elif self.flavor in ("hyper_w", "hyper_z"):
            object.__setattr__(self, "param", Fraction(p))
        else:
            if int(p) != p:
                raise DomainError(f"{self.flavor} needs an integer parameter")
            p = int(p)
            if p < 0 or (self.flavor == "completed" and p < 1):
                raise DomainError(f"{self.flavor} parameter out of range: {p}")
            object.__setattr__(self, "param", p)

    @classmethod
    def strict(cls, b: int) -> BlockSpec:
        return cls("strict", b)

    @classmethod
    def monotone(cls, b: int) -> BlockSpec:
        return cls("monotone", b)

    @classmethod
    def atlantes(cls, b: int) -> BlockSpec:
        return cls("atlantes", b)

    @classmethod
    def free_single(cls, b: int) -> BlockSpec:
        return cls("free_single", b)

    @classmethod
    def free_group(cls, b: int) -> BlockSpec:
        return cls("free_group", b)

    @classmethod
    def class_sum(cls, alpha) -> BlockSpec:
        return cls("class_sum", alpha)

    @classmethod
    def completed(cls, r: int) -> BlockSpec:
        return cls("completed", r)

    @classmethod
    def hyper_w(cls, w) -> BlockSpec:
        return cls("hyper_w", w)

    @classmethod
    def hyper_z(cls, z) -> BlockSpec:
        return cls("hyper_z", z)

    @classmethod
    def parse(cls, text: str) -> BlockSpec:
        """``"monotone:2"``, ``"class-sum:2,2"``, ``"hyper-w:1/3"``."""
        name, _, arg = text.partition(":")
        flavor = ALIASES.get(name.strip().lower())
        if flavor is None or not arg:
            raise DomainError(f"cannot parse block {text!r}")
        if flavor == "class_sum":
            return cls(flavor, Partition.parse(arg))
        if flavor in ("hyper_w", "hyper_z"):
            return cls(flavor, Fraction(arg.strip()))
        return cls(flavor, int(arg))

    @property
    def b(self) -> int:
        """Number of ramification points contributed (the count entering Riemann-Hurwitz)."""
        if self.flavor in ("strict", "monotone", "atlantes", "free_single", "free_group"):
            return self.param
        if self.flavor == "class_sum":
            return self.param.size - self.param.length
        raise DomainError(f"{self.flavor} has no fixed ramification count")

    def __str__(self):
        return f"{self.flavor}:{self.param}"

    def to_json(self):
        p = self.param
        if isinstance(p, Partition):
            p = str(p)
        elif isinstance(p, Fraction):
            p = f"{p.numerator}/{p.denominator}"
        return {"flavor": self.flavor, "param": p}
