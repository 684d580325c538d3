"""Exact integer and rational helpers shared across the package.

Everything here avoids floating point: integer k-th roots, exact comparison
of sums of integer roots, and integer-preserving Gaussian elimination.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Sequence

__all__ = [
    "nth_root_floor",
    "is_perfect_power",
    "compare_root_sum",
    "integer_rank",
    "IntegerRowBasis",
    "format_rational",
    "parse_rational",
]


def nth_root_floor(n: int, r: int) -> int:
    """Largest integer t with t**r <= n.  Requires n >= 0, r >= 1."""
    if n < 0 or r < 1:
        raise ValueError("nth_root_floor requires n >= 0 and r >= 1")
    if n < 2 or r == 1:
        return n
    # Newton iteration seeded from the bit length; exact for big ints.
    t = 1 << ((n.bit_length() + r - 1) // r)
    while True:
        nxt = ((r - 1) * t + n // t ** (r - 1)) // r
        if nxt >= t:
            break
        t = nxt
    while t**r > n:
        t -= 1
    while (t + 1) ** r <= n:
        t += 1
    return t


def is_perfect_power(n: int, r: int) -> bool:
    """True when n is an exact r-th power of an integer."""
    t = nth_root_floor(n, r)
    return t**r == n


def compare_root_sum(total: int, parts: Sequence[int], r: int) -> int:
    """Exactly compare total**(1/r) against sum(p**(1/r) for p in parts).

    Returns +1, 0, or -1.  All inputs are non-negative integers; the
    comparison is exact.  When every operand is a perfect r-th power the
    integer roots are compared directly; otherwise the roots are separated
    by scaled integer floors at escalating precision.
    """
    if total < 0 or any(p < 0 for p in parts):
        raise ValueError("compare_root_sum requires non-negative integers")
    parts = [p for p in parts if p > 0]
    if not parts:
        return 1 if total > 0 else 0
    if all(is_perfect_power(p, r) for p in parts) and is_perfect_power(total, r):
        lhs = nth_root_floor(total, r)
        rhs = sum(nth_root_floor(p, r) for p in parts)
        return (lhs > rhs) - (lhs < rhs)
    shift = 64
    while shift <= 512:
        scale = 1 << shift
        scale_r = scale**r
        lo_total = nth_root_floor(total * scale_r, r)
        lo_parts = [nth_root_floor(p * scale_r, r) for p in parts]
        # floor bounds: lo <= scale * root < lo + 1
        if lo_total >= sum(lo + 1 for lo in lo_parts):
            return 1
        if lo_total + 1 <= sum(lo_parts):
            return -1
        shift *= 2
    # Separation beyond 512 fractional bits does not occur for desk-scale
    # integers unless the two sides are genuinely equal.
    return 0


def _reduce_row(row: list[int]) -> list[int]:
    g = 0
    for v in row:
        g = gcd(g, v)
    if g > 1:
        row = [v // g for v in row]
    return row


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals of an integer matrix, computed exactly."""
    basis = IntegerRowBasis()
    for row in rows:
        basis.try_add(tuple(row))
    return basis.rank


class IntegerRowBasis:
    """Incremental echelon basis of integer rows with exact arithmetic.

    Rows are appended after fraction-free reduction against the current
    basis, so push/pop follows stack discipline (used by the cube search).
    """

    def __init__(self) -> None:
        self._rows: list[list[int]] = []
        self._pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, vec: Sequence[int]) -> list[int]:
        work = list(vec)
        for row, pivot in zip(self._rows, self._pivots):
            if work[pivot]:
                lead = work[pivot]
                piv = row[pivot]
                work = [w * piv - r * lead for w, r in zip(work, row)]
                work = _reduce_row(work)
        return work

    def try_add(self, vec: Sequence[int]) -> bool:
        """Append vec if independent of the basis; report whether it was."""
        work = self.reduce(vec)
        for i, v in enumerate(work):
            if v:
                if v < 0:
                    work = [-w for w in work]
                self._rows.append(work)
                self._pivots.append(i)
                return True
        return False

    def pop(self) -> None:
        self._rows.pop()
        self._pivots.pop()


def format_rational(q: Fraction | int) -> str:
    """Render a rational exactly: "p/q" for non-integers, "p" otherwise."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of format_rational; accepts only "p" or "p/q" with q > 0."""
    match = re.fullmatch(r"(-?\d+)(?:/(\d+))?", text.strip())
    if match is None:
        raise ValueError(f"not a rational literal: {text!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) else 1
    if denominator == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(numerator, denominator)
