"""Brute-force checks of existence, uniqueness and the supporting identities.

Sweeps never raise on a violation; they collect it into a
:class:`VerifyReport` so one run shows every failure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .binomial import binomial, corollary_gap, hockey_stick_lhs_rhs, pascal_lhs_rhs
from .codec import _check_degree, decode, encode, successor
from .errors import InvalidRange


@dataclass
class VerifyReport:
    r: int
    coefficient_bound: int
    values_covered: int = 0
    duplicates: list[tuple[int, tuple, tuple]] = field(default_factory=list)
    gaps: list[int] = field(default_factory=list)
    identities_checked: int = 0
    identities_failed: int = 0

    @property
    def passed(self) -> bool:
        return not self.duplicates and not self.gaps and self.identities_failed == 0

    def to_text(self) -> str:
        lines = [f"RESULT {'pass' if self.passed else 'fail'}", f"COVERED {self.values_covered}"]
        for value, a, b in self.duplicates:
            lines.append(f"DUPLICATE {value} {_fmt(a)} {_fmt(b)}")
        lines.extend(f"GAP {value}" for value in self.gaps)
        lines.append(f"IDENTITIES {self.identities_checked} {self.identities_failed}")
        return "\n".join(lines) + "\n"


def _fmt(coeffs) -> str:
    return ",".join(str(c) for c in coeffs)


def decreasing_tuples(r: int, bound: int) -> Iterator[tuple[int, ...]]:
    """All strictly decreasing r-tuples with entries below ``bound``.

    Lexicographic order on the tuples as written (top coefficient first).
    """
    if r == 0:
        yield ()
        return
    for top in range(r - 1, bound):
        for rest in decreasing_tuples(r - 1, top):
            yield (top,) + rest


def sweep_uniqueness(r: int, coefficient_bound: int) -> VerifyReport:
    """Decode every tuple with C_r < bound; values must be exactly 0..C(bound, r)-1."""
    _check_degree(r)
    if coefficient_bound < r:
        raise InvalidRange(f"bound {coefficient_bound} admits no {r}-term tuple")
    report = VerifyReport(r=r, coefficient_bound=coefficient_bound)
    seen: dict[int, tuple] = {}
    for t in decreasing_tuples(r, coefficient_bound):
        value = sum(binomial(c, r - k) for k, c in enumerate(t))
        if value in seen:
            report.duplicates.append((value, seen[value], t))
        else:
            seen[value] = t
    expected = binomial(coefficient_bound, r)
    report.gaps = [v for v in range(expected) if v not in seen]
    report.values_covered = len(seen)
    return report


def sweep_roundtrip(r: int, m_max: int) -> VerifyReport:
    """decode(encode(m)) == m and successor(encode(m)) == encode(m+1) for m <= m_max.

    A failed round trip is recorded as a gap at m; a successor mismatch as a
    duplicate for m+1 holding (successor result, direct encoding).
    """
    _check_degree(r)
    report = VerifyReport(r=r, coefficient_bound=0)
    current = encode(0, r)
    for m in range(m_max + 1):
        nxt = encode(m + 1, r)
        if decode(current) != m:
            report.gaps.append(m)
        stepped = successor(current)
        if stepped != nxt:
            report.duplicates.append((m + 1, stepped.coeffs, nxt.coeffs))
        current = nxt
    report.values_covered = m_max + 1
    return report


def sweep_identities(n_max: int, r_max: int) -> VerifyReport:
    """Pascal recurrence, Hockey-Stick identity, corollary gap and monotonicity."""
    report = VerifyReport(r=r_max, coefficient_bound=n_max)

    def check(ok: bool) -> None:
        report.identities_checked += 1
        if not ok:
            report.identities_failed += 1

    for n in range(n_max + 1):
        for r in range(1, r_max + 1):
            lhs, rhs = pascal_lhs_rhs(n, r)
            check(lhs == rhs)
        for r in range(min(n, r_max) + 1):
            lhs, rhs = hockey_stick_lhs_rhs(n, r)
            check(lhs == rhs)
        for r in range(1, r_max + 1):
            big, small = corollary_gap(n, r)
            check(big - small == 1)
    # adjacent pairs suffice for strict monotonicity by transitivity
    for n in range(1, n_max):
        for r in range(1, min(n, r_max) + 1):
            check(binomial(n, r) < binomial(n + 1, r))
    return report
