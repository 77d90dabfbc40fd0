"""Exact binomial coefficients and the Pascal / Hockey-Stick identity evaluators.

All values are Python ints, so nothing ever overflows. ``binomial`` uses the
extended definition: it is 0 whenever the lower index exceeds the upper one.
"""

import re

from .errors import NegativeValue, OutOfDomain

_DECIMAL = re.compile(r"[0-9]+")


def _check_natural(name, value):
    if value < 0:
        raise NegativeValue(f"{name} must be non-negative, got {value}")


def binomial(n: int, r: int) -> int:
    """Return n choose r, or 0 when n < r.

    Running product ``prod (n-r+i)/i`` with exact division at every step; no
    factorial-sized intermediates.
    """
    if n < 0 or r < 0:
        raise NegativeValue(f"binomial arguments must be non-negative, got ({n}, {r})")
    if n < r:
        return 0
    if n - r < r:
        r = n - r
    if r == 0:
        return 1
    base = n - r
    result = base + 1
    for i in range(2, r + 1):
        # product of i consecutive integers is divisible by i!
        result = result * (base + i) // i
    return result


def pascal_lhs_rhs(n: int, r: int) -> tuple[int, int]:
    """Both sides of C(n+1, r) = C(n, r) + C(n, r-1)."""
    _check_natural("n", n)
    if r < 1:
        raise OutOfDomain(f"Pascal recurrence needs r >= 1, got r={r}")
    return binomial(n + 1, r), binomial(n, r) + binomial(n, r - 1)


def hockey_stick_lhs_rhs(n: int, r: int) -> tuple[int, int]:
    """Both sides of C(n+1, r) = sum_{j=0..r} C(n-r+j, j)."""
    _check_natural("r", r)
    if n < r:
        raise OutOfDomain(f"Hockey-Stick identity needs n >= r, got n={n}, r={r}")
    base = n - r
    return binomial(n + 1, r), sum(binomial(base + j, j) for j in range(r + 1))


def corollary_gap(n: int, r: int) -> tuple[int, int]:
    """Return (C(n+r, r), sum_{i=1..r} C(n+i-1, i)).

    The first component always exceeds the second by exactly one; this is
    the carry that drives :func:`combinadics.codec.successor`.
    """
    _check_natural("n", n)
    if r < 1:
        raise OutOfDomain(f"corollary gap needs r >= 1, got r={r}")
    return binomial(n + r, r), sum(binomial(n + i - 1, i) for i in range(1, r + 1))


def parse_natural(text: str) -> int:
    """Parse an unsigned base-10 integer with no sign, spaces or separators."""
    if not _DECIMAL.fullmatch(text):
        raise ValueError(f"not a natural number: {text!r}")
    return int(text)


def render_natural(value: int) -> str:
    _check_natural("value", value)
    return str(value)
