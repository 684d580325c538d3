"""Exact coefficient certificates for the sumset growth bound.

The target constant is growth_constant(d).  A certificate for a pair
(k, d), 0 <= k < d, is a convex combination of coefficient family vectors
over Hamming levels 0..k, optionally followed by a surplus redistribution
sweep, such that every level coefficient is >= the target.  All arithmetic
is exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

__all__ = [
    "growth_constant",
    "strong_coefficient",
    "strong_vector",
    "averaging_coefficient",
    "decomposition_count",
    "family_vector",
    "redistribute",
    "Certificate",
    "certify_case",
    "certify_range",
    "f_even",
    "f1_odd",
    "exceptional_pairs",
    "FAMILY_IDS",
]

FAMILY_IDS = ("AI", "SI", "SI2", "SI3", "SI4", "SIavg")


def growth_constant(d: int) -> Fraction:
    """The sharp growth coefficient for dimension d."""
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if d <= 5:
        return 2 * Fraction(3, 2) ** (d - 1)
    if d % 2 == 0:
        return Fraction(2 ** (d // 2 + 1) - 1)
    return 3 * Fraction(2) ** ((d - 1) // 2) - Fraction(3, 2)


def _check_pair(k: int, d: int) -> None:
    if d < 1 or not 0 <= k < d:
        raise ValueError(f"need 0 <= k < d with d >= 1, got k={k}, d={d}")


def strong_coefficient(k: int, d: int, s: int) -> Fraction:
    """Level-s coefficient 2^(k-s) + (2^(d-k) - 1) * 2^s."""
    _check_pair(k, d)
    if not 0 <= s <= k:
        raise ValueError(f"level must satisfy 0 <= s <= k, got s={s}, k={k}")
    return Fraction(2 ** (k - s) + (2 ** (d - k) - 1) * 2**s)


def strong_vector(k: int, d: int) -> tuple[Fraction, ...]:
    return tuple(strong_coefficient(k, d, s) for s in range(k + 1))


def averaging_coefficient(k: int, d: int) -> Fraction:
    """Uniform per-level coefficient 2*(3/2)^k + 2^(d-k) - 2."""
    _check_pair(k, d)
    return 2 * Fraction(3, 2) ** k + 2 ** (d - k) - 2


def decomposition_count(w: Sequence[int]) -> int:
    """Number of ways to write w in {0,1,2}^k as u + v with u, v in {0,1}^k."""
    if any(c not in (0, 1, 2) for c in w):
        raise ValueError(f"entries must be 0, 1 or 2, got {tuple(w)}")
    return 2 ** sum(1 for c in w if c == 1)


def family_vector(
    family: str, k: int, d: int, t: int | None = None
) -> tuple[Fraction, ...]:
    """Level coefficient vector (length k+1) of one certificate family.

    Side conditions: SI2 and SIavg need k >= 2 and 2^(d-k) >= k; SI3 needs
    k >= 4; SI4 needs a parameter t with 3 <= t <= k.
    """
    _check_pair(k, d)
    if family == "AI":
        return (averaging_coefficient(k, d),) * (k + 1)
    if family == "SI":
        return strong_vector(k, d)

    base = list(strong_vector(k, d))
    two = 2 ** (d - k)
    if family == "SI2":
        if k < 2 or two < k:
            raise ValueError(f"SI2 requires k >= 2 and 2^(d-k) >= k at k={k}, d={d}")
        base[0] -= 1
        base[1] += 1
        base[2] += 1 - two
    elif family == "SIavg":
        if k < 2 or two < k:
            raise ValueError(f"SIavg requires k >= 2 and 2^(d-k) >= k at k={k}, d={d}")
        base[0] -= Fraction(1, 2)
        base[1] += Fraction(1, 2)
        base[2] -= Fraction(two - 1, 2)
    elif family == "SI3":
        # k = 3 is excluded: the triple-modification argument behind these
        # level adjustments degenerates there (only one usable triple), and
        # the constant assignment at (k, d) = (3, 5) violates the would-be
        # bound (108 < 110).  Four is the smallest k with enough triples.
        if k < 4:
            raise ValueError(f"SI3 requires k >= 4, got k={k}")
        base[0] += 4 - comb(k, 2) - 2 * two
        base[1] += 1
        base[2] += two - 1
        base[3] += 1 - two
    elif family == "SI4":
        if t is None or not 3 <= t <= k:
            raise ValueError(f"SI4 requires 3 <= t <= k, got t={t}, k={k}")
        c = comb(k, t)
        base[0] -= c
        base[1] += Fraction(c, k)
        base[t - 1] += Fraction(c, comb(k, t - 1))
        base[t] += 1 - two
    else:
        raise ValueError(f"unknown family {family!r}")
    return tuple(Fraction(v) for v in base)


def redistribute(
    vector: Sequence[Fraction | int], target: Fraction | int
) -> tuple[Fraction, ...]:
    """Move level surpluses upward until no level below the last deficit
    keeps more than the target.

    A surplus c_s - target at level s converts to (c_s - target)*(s+1)/(k-s)
    at level s+1 (levels average binomially, so mass moves at that exchange
    rate).  The sweep runs low to high and stops after the last initially
    deficient level; levels past it are already at or above the target and
    are left untouched.
    """
    target = Fraction(target)
    out = [Fraction(v) for v in vector]
    k = len(out) - 1
    deficient = [s for s, v in enumerate(out) if v < target]
    if not deficient:
        return tuple(out)
    last = deficient[-1]
    for s in range(last):
        if out[s] > target:
            surplus = out[s] - target
            out[s] = target
            out[s + 1] += surplus * Fraction(s + 1, k - s)
    return tuple(out)


@dataclass(frozen=True)
class Certificate:
    """Outcome of certify_case: the vector that witnesses the growth bound."""

    k: int
    d: int
    strategy: str
    families: tuple[tuple[str, int | None, Fraction], ...]  # (family, t, weight)
    redistributed: bool
    target: Fraction
    base_vector: tuple[Fraction, ...]
    final_vector: tuple[Fraction, ...]
    ok: bool
    first_violation: int | None


# Strategy table: first matching row wins.  Each row is a predicate on
# (k, d, m) and the certificate recipe (families with weights, sweep flag),
# where m = d//2 for even d and (d-1)//2 for odd d.
def _strategy(k: int, d: int) -> tuple[str, list[tuple[str, int | None, Fraction]], bool]:
    one = Fraction(1)
    half = Fraction(1, 2)
    if k == 0 or k == d - 1:
        return "AI", [("AI", None, one)], False
    if d <= 5:
        if k == 1:
            return "AI", [("AI", None, one)], False
        if (k, d) == (3, 5):
            return "SI+R", [("SI", None, one)], True
        return "SI", [("SI", None, one)], False
    m = d // 2 if d % 2 == 0 else (d - 1) // 2
    if k <= m:
        return "SI", [("SI", None, one)], False
    if d % 2 == 0:
        return "SI+R", [("SI", None, one)], True
    if k == m + 1:
        return "SIavg", [("SIavg", None, one)], False
    if (k, m) == (5, 3):
        return "SI/SI3 mix", [("SI", None, Fraction(1, 6)), ("SI3", None, Fraction(5, 6))], False
    if (k, m) in {(6, 4), (7, 5)}:
        return "SI/SI3 mix", [("SI", None, half), ("SI3", None, half)], False
    if (k, m) == (7, 4):
        return "SI4+R", [("SI4", 4, one)], True
    return "SI+R", [("SI", None, one)], True


def certify_case(k: int, d: int) -> Certificate:
    """Build and check the certificate for one (k, d) pair."""
    _check_pair(k, d)
    strategy, families, sweep = _strategy(k, d)
    if sum(w for _, _, w in families) != 1:
        raise AssertionError(f"strategy weights must sum to 1 at (k={k}, d={d})")
    base = [Fraction(0)] * (k + 1)
    for family, t, weight in families:
        vec = family_vector(family, k, d, t=t)
        for s in range(k + 1):
            base[s] += weight * vec[s]
    target = growth_constant(d)
    final = redistribute(base, target) if sweep else tuple(base)
    violations = [s for s, v in enumerate(final) if v < target]
    return Certificate(
        k=k,
        d=d,
        strategy=strategy,
        families=tuple(families),
        redistributed=sweep,
        target=target,
        base_vector=tuple(base),
        final_vector=final,
        ok=not violations,
        first_violation=violations[0] if violations else None,
    )


def certify_range(max_d: int) -> list[Certificate]:
    """Certificates for every 0 <= k < d <= max_d."""
    if max_d < 1:
        raise ValueError(f"max_d must be >= 1, got {max_d}")
    return [certify_case(k, d) for d in range(1, max_d + 1) for k in range(d)]


def f_even(k: int, m: int) -> Fraction:
    """Sign criterion for single-sweep coverage in even dimension 2m."""
    two = Fraction(2)
    return (
        Fraction(k - m, m + 1) * (two ** (m - 1) - two ** (k - m - 1) + 1)
        - two ** (k - m)
        + 1
    )


def f1_odd(k: int, m: int) -> Fraction:
    """Sign criterion for single-sweep coverage in odd dimension 2m + 1."""
    two = Fraction(2)
    th = Fraction(3, 2)
    return (
        (m + 2) * (m + 1) * (two ** (k - m) - th)
        + (m + 1) * (k - m - 1) * (two ** (k - m - 1) - th)
        - (k - m - 1) * (k - m) * (3 * two ** (m - 1) - two ** (k - m - 2) + th)
    )


def exceptional_pairs(max_m: int) -> list[tuple[int, int]]:
    """Pairs (k, m), m + 2 <= k <= 2m - 1, where f1_odd is positive."""
    if max_m < 3:
        raise ValueError(f"scan range starts at m = 3, got max_m={max_m}")
    return [
        (k, m)
        for m in range(3, max_m + 1)
        for k in range(m + 2, 2 * m)
        if f1_odd(k, m) > 0
    ]
