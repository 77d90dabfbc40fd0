"""The degree-r combinatorial number system.

A natural number m is written as ``C(C_r, r) + ... + C(C_2, 2) + C(C_1, 1)``
with ``C_r > ... > C_1 >= 0``. Coefficients are always stored and printed
in that descending order, e.g. ``(4, 3, 0)`` for 7 with r = 3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

from .binomial import binomial, parse_natural
from .errors import (
    DegreeMismatch,
    EmptyRepresentation,
    InvalidDegree,
    NegativeValue,
    NotStrictlyDecreasing,
    PredecessorOfZero,
)


def _check_degree(r: int) -> None:
    if r < 1:
        raise InvalidDegree(f"number of terms must be >= 1, got {r}")


def _check_coeffs(coeffs: tuple) -> None:
    if not coeffs:
        raise EmptyRepresentation("a representation needs at least one coefficient")
    for k in range(len(coeffs) - 1):
        if coeffs[k] <= coeffs[k + 1]:
            raise NotStrictlyDecreasing(coeffs, k)
    if coeffs[-1] < 0:
        raise NegativeValue(f"coefficients must be non-negative, got C_1={coeffs[-1]}")


@dataclass(frozen=True)
class Combinadic:
    """A validated representation, coefficients descending (C_r first)."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        _check_coeffs(coeffs)
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def r(self) -> int:
        return len(self.coeffs)

    def __str__(self) -> str:
        return format_combinadic(self)


def format_combinadic(rep: Combinadic) -> str:
    return ",".join(str(c) for c in rep.coeffs)


def parse_coefficients(text: str) -> tuple[int, ...]:
    """Split ``"4,3,0"`` into integers. Only syntax is checked here."""
    if text == "":
        return ()
    return tuple(parse_natural(part) for part in text.split(","))


def parse_combinadic(text: str) -> Combinadic:
    return validate(parse_coefficients(text))


def validate(coeffs: Iterable[int]) -> Combinadic:
    if isinstance(coeffs, Combinadic):
        return coeffs
    return Combinadic(tuple(coeffs))


def zero_rep(r: int) -> Combinadic:
    """The representation of 0 with r terms: (r-1, ..., 1, 0)."""
    _check_degree(r)
    return Combinadic(tuple(range(r - 1, -1, -1)))


def decode(rep: Combinadic) -> int:
    r = rep.r
    return sum(binomial(c, r - k) for k, c in enumerate(rep.coeffs))


def _largest_fitting(rem: int, i: int, cap: Optional[int]) -> tuple[int, int]:
    """Largest c <= cap with C(c, i) <= rem, returned with C(c, i).

    Seeds from C(c, i) ~ (c - (i-1)/2)**i / i!, gallops upward to bracket
    the answer, then bisects.
    """
    if rem == 0:
        return i - 1, 0
    if i == 1:
        c = rem if cap is None or rem <= cap else cap
        return c, c

    lo, lo_value = i - 1, 0
    hi = None
    try:
        root = math.exp((math.lgamma(i + 1) + math.log(rem)) / i)
    except OverflowError:
        root = 0.0
    # (c-i+1)**i/i! <= C(c, i) <= c**i/i!, so int(root) can only undershoot
    for guess in (int(root + (i - 1) / 2), int(root)):
        if cap is not None and guess > cap:
            guess = cap
        if guess <= lo or (hi is not None and guess >= hi):
            continue
        value = binomial(guess, i)
        if value <= rem:
            lo, lo_value = guess, value
            break
        hi = guess

    step = 1
    while True:
        probe = lo + step
        if hi is not None and probe >= hi:
            break
        if cap is not None and probe > cap:
            hi = cap + 1
            break
        value = binomial(probe, i)
        if value > rem:
            hi = probe
            break
        lo, lo_value = probe, value
        step *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        value = binomial(mid, i)
        if value <= rem:
            lo, lo_value = mid, value
        else:
            hi = mid
    return lo, lo_value


def encode_coeffs(m: int, r: int) -> tuple[int, ...]:
    """Greedy encoding as a bare descending tuple (no validation wrapper)."""
    if m < 0:
        raise NegativeValue(f"value must be non-negative, got {m}")
    _check_degree(r)
    out = []
    rem = m
    cap = None
    for i in range(r, 0, -1):
        c, value = _largest_fitting(rem, i, cap)
        out.append(c)
        rem -= value
        cap = c - 1
    return tuple(out)


def encode(m: int, r: int) -> Combinadic:
    """Return the unique r-term representation of m."""
    return Combinadic(encode_coeffs(m, r))


def successor_coeffs(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    r = len(coeffs)
    c1 = coeffs[-1]
    # length of the consecutive run C_1, C_1+1, ..., C_1+j-1
    j = 1
    while j < r and coeffs[r - 1 - j] == coeffs[r - j] + 1:
        j += 1
    # C(c1,1) + ... + C(c1+j-1, j) + 1 == C(c1+j, j); the lower j-1 slots
    # become the zero block (j-2, ..., 0)
    return coeffs[: r - j] + (c1 + j,) + tuple(range(j - 2, -1, -1))


def successor(rep: Combinadic) -> Combinadic:
    """Representation of decode(rep) + 1, computed without decoding."""
    return Combinadic(successor_coeffs(rep.coeffs))


def predecessor(rep: Combinadic) -> Combinadic:
    value = decode(rep)
    if value == 0:
        raise PredecessorOfZero(f"{format_combinadic(rep)} represents 0")
    return encode(value - 1, rep.r)


def compare(a: Combinadic, b: Combinadic) -> int:
    """-1, 0 or 1 as decode(a) is less than, equal to or greater than decode(b).

    Lexicographic order of the descending tuples matches numeric order.
    """
    if a.r != b.r:
        raise DegreeMismatch(f"cannot compare r={a.r} with r={b.r}")
    return (a.coeffs > b.coeffs) - (a.coeffs < b.coeffs)
