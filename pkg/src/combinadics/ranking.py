"""Ranking and unranking of k-combinations in colexicographic order.

A combination ``{c_1 < ... < c_r}`` is the combinadic ``(c_r, ..., c_1)``
read the other way round, and its rank is the value that combinadic
encodes. Ranks are 0-based and need no universe size.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .binomial import binomial, parse_natural
from .codec import Combinadic, _check_degree, encode_coeffs, successor_coeffs
from .errors import (
    ElementOutOfUniverse,
    EmptyCombination,
    InvalidRange,
    MalformedBitstring,
    NegativeValue,
    NotStrictlyIncreasing,
)


@dataclass(frozen=True)
class Combination:
    """Strictly increasing, 0-based element indices."""

    elements: tuple[int, ...]

    def __post_init__(self):
        elements = tuple(self.elements)
        if not elements:
            raise EmptyCombination("a combination needs at least one element")
        if elements[0] < 0:
            raise NegativeValue(f"elements must be non-negative, got {elements[0]}")
        for k in range(len(elements) - 1):
            if elements[k] >= elements[k + 1]:
                raise NotStrictlyIncreasing(elements, k)
        object.__setattr__(self, "elements", elements)

    @property
    def r(self) -> int:
        return len(self.elements)

    def to_combinadic(self) -> Combinadic:
        return Combinadic(self.elements[::-1])

    @classmethod
    def from_combinadic(cls, rep: Combinadic) -> "Combination":
        return cls(rep.coeffs[::-1])

    def __str__(self) -> str:
        return format_combination(self)


def format_combination(comb: Combination) -> str:
    return ",".join(str(c) for c in comb.elements)


def parse_combination(text: str) -> Combination:
    if text == "":
        raise EmptyCombination("a combination needs at least one element")
    return Combination(tuple(parse_natural(part) for part in text.split(",")))


def rank(comb: Combination) -> int:
    return sum(binomial(c, i) for i, c in enumerate(comb.elements, start=1))


def unrank(x: int, r: int) -> Combination:
    return Combination(encode_coeffs(x, r)[::-1])


def enumerate_combinations(r: int, start: int = 0, count: int = 10) -> Iterator[Combination]:
    """Yield the combinations ranked start, start+1, ..., start+count-1.

    Only the first one is unranked; the rest are produced by successor steps.
    """
    _check_degree(r)
    if start < 0 or count < 0:
        raise NegativeValue(f"start and count must be non-negative, got {start}, {count}")
    if count == 0:
        return
    coeffs = encode_coeffs(start, r)
    yield Combination(coeffs[::-1])
    for _ in range(count - 1):
        coeffs = successor_coeffs(coeffs)
        yield Combination(coeffs[::-1])


def split_range(r: int, start: int, end: int, parts: int) -> list[tuple[int, int]]:
    """Cut [start, end) into ``parts`` contiguous half-open intervals.

    Sizes differ by at most one; the larger ones come first.
    """
    _check_degree(r)
    if parts < 1:
        raise InvalidRange(f"parts must be >= 1, got {parts}")
    if start < 0:
        raise NegativeValue(f"start must be non-negative, got {start}")
    if start > end:
        raise InvalidRange(f"start {start} is after end {end}")
    size, extra = divmod(end - start, parts)
    out = []
    lo = start
    for p in range(parts):
        hi = lo + size + (1 if p < extra else 0)
        out.append((lo, hi))
        lo = hi
    return out


def to_bitstring(comb: Combination, n: int) -> str:
    """MSB-first bitstring of length n; bit index equals element index."""
    if comb.elements[-1] >= n:
        raise ElementOutOfUniverse(
            f"element {comb.elements[-1]} does not fit a universe of size {n}"
        )
    bits = ["0"] * n
    for c in comb.elements:
        bits[n - 1 - c] = "1"
    return "".join(bits)


def from_bitstring(s: str) -> Combination:
    if not s or any(ch not in "01" for ch in s):
        raise MalformedBitstring(f"expected a non-empty string of 0/1, got {s!r}")
    n = len(s)
    elements = tuple(n - 1 - p for p in range(n - 1, -1, -1) if s[p] == "1")
    if not elements:
        raise EmptyCombination(f"bitstring {s!r} has no ones")
    return Combination(elements)
