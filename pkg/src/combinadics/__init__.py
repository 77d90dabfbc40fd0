"""Exact combinatorial number system: encode, decode, successor and ranking."""

from .binomial import binomial, corollary_gap, hockey_stick_lhs_rhs, pascal_lhs_rhs
from .codec import (
    Combinadic,
    compare,
    decode,
    encode,
    predecessor,
    successor,
    validate,
    zero_rep,
)
from .errors import CombinadicError
from .ranking import (
    Combination,
    enumerate_combinations,
    from_bitstring,
    rank,
    split_range,
    to_bitstring,
    unrank,
)
from .verify import VerifyReport, sweep_identities, sweep_roundtrip, sweep_uniqueness

__all__ = [
    "Combinadic",
    "Combination",
    "CombinadicError",
    "VerifyReport",
    "binomial",
    "compare",
    "corollary_gap",
    "decode",
    "encode",
    "enumerate_combinations",
    "from_bitstring",
    "hockey_stick_lhs_rhs",
    "pascal_lhs_rhs",
    "predecessor",
    "rank",
    "split_range",
    "successor",
    "sweep_identities",
    "sweep_roundtrip",
    "sweep_uniqueness",
    "to_bitstring",
    "unrank",
    "validate",
    "zero_rep",
]
