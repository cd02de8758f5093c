"""Exact Hurwitz numbers, their tau functions and the quantum curves and constraints they satisfy."""
from .blocks import BlockSpec
from .errors import DomainError, PoleError, ResourceError
from .group_oracle import (
    ClassAlgebraElement,
    Permutation,
    brute_hurwitz,
    jucys_symmetric,
    literal_hurwitz,
    symmetric_group,
)
from .hurwitz import (
    HurwitzProblem,
    block_eigenvalue,
    connected_numbers,
    elsv_k_coefficients,
    hurwitz_number,
    hypergeometric_coefficient,
    quasipolynomiality_check,
)
from .partitions import Partition, partitions_of

__all__ = [
    "BlockSpec",
    "ClassAlgebraElement",
    "DomainError",
    "HurwitzProblem",
    "Partition",
    "Permutation",
    "PoleError",
    "ResourceError",
    "block_eigenvalue",
    "brute_hurwitz",
    "connected_numbers",
    "elsv_k_coefficients",
    "hurwitz_number",
    "hypergeometric_coefficient",
    "jucys_symmetric",
    "literal_hurwitz",
    "partitions_of",
    "quasipolynomiality_check",
    "symmetric_group",
]
