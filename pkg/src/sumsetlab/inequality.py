"""Weight assignments on {0,1}^k and the induced grid inequality.

Given non-negative weights x on the cube {0,1}^k that are monotone
decreasing upward (x_u >= x_v whenever u is coordinatewise <= v), the
minimal feasible grid y on {0,1,2}^k has y_w = max(x_u + x_v) over all
decompositions w = u + v.  The central quantity is

    ratio(x, d) = sum_w y_w^(d-k) / sum_u x_u^(d-k),

which is bounded below by growth_constant(d) for every monotone x.  This
module evaluates the ratio exactly on rational inputs, checks each
coefficient family's inequality, and searches for the minimum ratio by an
exact sweep over down-set indicators plus a multi-start local descent.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from numbers import Rational
from typing import Iterator, Sequence

import numpy as np

from .certificates import family_vector, growth_constant

__all__ = [
    "WeightAssignment",
    "GridAssignment",
    "cube_indices",
    "grid_indices",
    "minimal_grid",
    "level_sums",
    "ratio",
    "FamilyCheck",
    "check_family",
    "monotone_envelope",
    "random_assignment",
    "downset_indicators",
    "MinRatioResult",
    "min_ratio_search",
]


@lru_cache(maxsize=None)
def cube_indices(k: int) -> tuple[tuple[int, ...], ...]:
    """All of {0,1}^k in lexicographic order."""
    return tuple(product((0, 1), repeat=k))


@lru_cache(maxsize=None)
def grid_indices(k: int) -> tuple[tuple[int, ...], ...]:
    """All of {0,1,2}^k in lexicographic order."""
    return tuple(product((0, 1, 2), repeat=k))


@lru_cache(maxsize=None)
def _decompositions(k: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """For each grid position, the (u, v) cube position pairs with u + v = w."""
    pos = {u: i for i, u in enumerate(cube_indices(k))}
    out: list[list[tuple[int, int]]] = [[] for _ in range(3**k)]
    gpos = {w: i for i, w in enumerate(grid_indices(k))}
    for u in cube_indices(k):
        for v in cube_indices(k):
            w = tuple(a + b for a, b in zip(u, v))
            out[gpos[w]].append((pos[u], pos[v]))
    return tuple(tuple(p) for p in out)


@lru_cache(maxsize=None)
def _supersets(k: int) -> tuple[tuple[int, ...], ...]:
    """For each cube position, positions of all coordinatewise-larger points."""
    idx = cube_indices(k)
    pos = {u: i for i, u in enumerate(idx)}
    return tuple(
        tuple(pos[v] for v in idx if all(a <= b for a, b in zip(u, v)))
        for u in idx
    )


@dataclass(frozen=True)
class WeightAssignment:
    """Weights on {0,1}^k, stored densely in lexicographic index order."""

    k: int
    values: tuple

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError(f"k must be >= 0, got {self.k}")
        if len(self.values) != 2**self.k:
            raise ValueError(f"expected {2 ** self.k} values, got {len(self.values)}")
        if any(v < 0 for v in self.values):
            raise ValueError("weights must be non-negative")

    def value(self, u: Sequence[int]) -> object:
        return self.values[cube_indices(self.k).index(tuple(u))]

    def is_monotone(self) -> bool:
        """x_u >= x_v whenever u <= v coordinatewise."""
        sups = _supersets(self.k)
        vals = self.values
        return all(vals[i] >= vals[j] for i, s in enumerate(sups) for j in s)

    def is_exact(self) -> bool:
        return all(isinstance(v, Rational) for v in self.values)


@dataclass(frozen=True)
class GridAssignment:
    """Values on {0,1,2}^k, stored densely in lexicographic index order."""

    k: int
    values: tuple

    def __post_init__(self) -> None:
        if len(self.values) != 3**self.k:
            raise ValueError(f"expected {3 ** self.k} values, got {len(self.values)}")

    def value(self, w: Sequence[int]) -> object:
        return self.values[grid_indices(self.k).index(tuple(w))]


def minimal_grid(x: WeightAssignment) -> GridAssignment:
    """Smallest grid satisfying y_(u+v) >= x_u + x_v for all u, v."""
    vals = x.values
    y = tuple(
        max(vals[u] + vals[v] for u, v in pairs)
        for pairs in _decompositions(x.k)
    )
    return GridAssignment(k=x.k, values=y)


def level_sums(x: WeightAssignment, d: int) -> list:
    """X_s = sum of x_u^(d-k) over |u| = s, for s = 0..k."""
    p = d - x.k
    out = [0] * (x.k + 1)
    for u, v in zip(cube_indices(x.k), x.values):
        out[sum(u)] += v**p
    return out


def ratio(x: WeightAssignment, d: int) -> Fraction | float:
    """sum_w y_w^(d-k) / sum_u x_u^(d-k) for the minimal feasible grid.

    Exact (Fraction) when all weights are rational; float otherwise.
    Raises on the all-zero assignment.
    """
    if not 0 <= x.k < d:
        raise ValueError(f"need 0 <= k < d, got k={x.k}, d={d}")
    if all(v == 0 for v in x.values):
        raise ValueError("ratio undefined for the all-zero assignment")
    p = d - x.k
    y = minimal_grid(x)
    num = sum(v**p for v in y.values)
    den = sum(v**p for v in x.values)
    if x.is_exact():
        return Fraction(num) / Fraction(den)
    return float(num) / float(den)


@dataclass(frozen=True)
class FamilyCheck:
    family: str
    ok: bool
    slack: Fraction | float
    lhs: Fraction | float | None = None
    rhs: Fraction | float | None = None


def _sort_axes_by_singletons(x: WeightAssignment) -> WeightAssignment:
    """Permute coordinates so the singleton weights are non-increasing."""
    k = x.k
    idx = cube_indices(k)
    singles = []
    for axis in range(k):
        e = tuple(1 if i == axis else 0 for i in range(k))
        singles.append(x.value(e))
    order = sorted(range(k), key=lambda a: (singles[a],), reverse=True)
    pos = {u: i for i, u in enumerate(idx)}
    permuted = [None] * len(idx)
    for u, v in zip(idx, x.values):
        image = tuple(u[order[i]] for i in range(k))
        permuted[pos[image]] = v
    return WeightAssignment(k=k, values=tuple(permuted))


def check_family(
    family: str, x: WeightAssignment, d: int, t: int | None = None
) -> FamilyCheck:
    """Verify one family's inequality on a monotone assignment.

    Families AI/SI/SI2/SI3/SI4/SIavg compare sum_w y_w^(d-k) against the
    family's weighted level sums.  Family "R" checks the redistribution
    chain X_s >= (s+1)/(k-s) * X_(s+1).  Slack is lhs - rhs (minimum over
    the chain for "R"); exact on rational input.
    """
    if not x.is_monotone():
        raise ValueError("assignment must be monotone decreasing upward")
    k = x.k
    if not 0 <= k < d:
        raise ValueError(f"need 0 <= k < d, got k={k}, d={d}")
    if family == "R":
        levels = level_sums(x, d)
        slacks = [
            levels[s] - Fraction(s + 1, k - s) * levels[s + 1] for s in range(k)
        ]
        slack = min(slacks) if slacks else Fraction(0)
        return FamilyCheck(family=family, ok=slack >= 0, slack=slack)
    if family in ("SI2", "SI3", "SI4", "SIavg"):
        x = _sort_axes_by_singletons(x)
    coeffs = family_vector(family, k, d, t=t)
    p = d - k
    lhs = sum(v**p for v in minimal_grid(x).values)
    levels = level_sums(x, d)
    rhs = sum(c * s for c, s in zip(coeffs, levels))
    if x.is_exact():
        lhs = Fraction(lhs)
        rhs = Fraction(rhs)
    slack = lhs - rhs
    return FamilyCheck(family=family, ok=slack >= 0, slack=slack, lhs=lhs, rhs=rhs)


def monotone_envelope(raw: Sequence, k: int) -> tuple:
    """x_u = max of raw over all v >= u; always monotone, fixes monotone input."""
    sups = _supersets(k)
    return tuple(max(raw[j] for j in s) for s in sups)


def random_assignment(
    k: int, rng: random.Random, exact: bool = True
) -> WeightAssignment:
    """Random monotone assignment: the envelope of i.i.d. non-negative draws.

    Exact mode draws small rationals (denominators up to 4); float mode
    draws uniform [0, 1).  Roughly one raw entry in five is zeroed so that
    indicator-like shapes appear too; an all-zero draw is nudged to the
    point-mass at the bottom so the assignment stays usable in ratios.
    """
    size = 2**k
    raw: list
    if exact:
        raw = [
            Fraction(rng.randint(0, 12), rng.randint(1, 4))
            if rng.random() >= 0.2
            else Fraction(0)
            for _ in range(size)
        ]
    else:
        raw = [rng.random() if rng.random() >= 0.2 else 0.0 for _ in range(size)]
    if not any(raw):
        raw[0] = Fraction(1) if exact else 1.0
    return WeightAssignment(k, monotone_envelope(raw, k))


def downset_indicators(k: int) -> Iterator[WeightAssignment]:
    """All non-empty down-set indicator assignments on {0,1}^k.

    Points are scanned in a linear extension; a point may enter only when
    all its immediate predecessors are in, which enumerates each down-set
    exactly once.
    """
    idx = sorted(cube_indices(k), key=lambda u: (sum(u), u))
    pos = {u: i for i, u in enumerate(cube_indices(k))}
    lowers = {
        u: [u[:i] + (0,) + u[i + 1 :] for i in range(k) if u[i] == 1] for u in idx
    }
    chosen: set[tuple[int, ...]] = set()

    def rec(i: int) -> Iterator[frozenset]:
        if i == len(idx):
            if chosen:
                yield frozenset(chosen)
            return
        u = idx[i]
        yield from rec(i + 1)
        if all(v in chosen for v in lowers[u]):
            chosen.add(u)
            yield from rec(i + 1)
            chosen.remove(u)

    for members in rec(0):
        vals = [0] * 2**k
        for u in members:
            vals[pos[u]] = 1
        yield WeightAssignment(k=k, values=tuple(vals))


@dataclass(frozen=True)
class MinRatioResult:
    k: int
    d: int
    value: float
    exact: Fraction | None  # set when the indicator sweep attains the minimum
    argmin: tuple[float, ...]
    meets_bound: bool  # value >= growth_constant(d) - tol
    monotone: bool
    candidates: tuple[tuple[float, tuple[float, ...]], ...] = ()


@lru_cache(maxsize=None)
def _descent_tables(k: int):
    sups = _supersets(k)
    sup_flat = np.array([j for s in sups for j in s], dtype=np.intp)
    sup_off = np.array([0] + list(np.cumsum([len(s) for s in sups]))[:-1], dtype=np.intp)
    pairs = _decompositions(k)
    u_flat = np.array([u for ps in pairs for u, _ in ps], dtype=np.intp)
    v_flat = np.array([v for ps in pairs for _, v in ps], dtype=np.intp)
    pair_off = np.array([0] + list(np.cumsum([len(ps) for ps in pairs]))[:-1], dtype=np.intp)
    return sup_flat, sup_off, u_flat, v_flat, pair_off


def _batch_ratio(raw: np.ndarray, k: int, p: int, monotone: bool) -> np.ndarray:
    sup_flat, sup_off, u_flat, v_flat, pair_off = _descent_tables(k)
    if monotone:
        x = np.maximum.reduceat(raw[:, sup_flat], sup_off, axis=1)
    else:
        x = raw
    y = np.maximum.reduceat(x[:, u_flat] + x[:, v_flat], pair_off, axis=1)
    num = (y**p).sum(axis=1)
    den = (x**p).sum(axis=1)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = num / den
    out[den <= 0] = np.inf
    return out


def min_ratio_search(
    k: int,
    d: int,
    restarts: int = 200,
    seed: int = 0,
    tol: float = 1e-6,
    monotone: bool = True,
) -> MinRatioResult:
    """Search for the minimum of ratio(x, d) over monotone assignments.

    Two routes are combined: an exact sweep over all non-empty down-set
    indicators (the combinatorial candidates), and a seeded multi-start
    coordinate descent with geometric step decay over the monotone-envelope
    parameterization.  With monotone=False the envelope and the sweep are
    skipped and any descent value below the bound is recorded as a
    candidate rather than asserted against.
    """
    if not (1 <= k < d <= 12 and k <= 5):
        raise ValueError(f"need 1 <= k < d <= 12 with k <= 5, got k={k}, d={d}")
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    p = d - k
    n = 2**k

    best_exact: Fraction | None = None
    best_indicator: WeightAssignment | None = None
    if monotone:
        for ind in downset_indicators(k):
            r = ratio(ind, d)
            if best_exact is None or r < best_exact:
                best_exact, best_indicator = r, ind

    rng = np.random.default_rng(seed)
    raw = rng.random((restarts, n))
    cur = _batch_ratio(raw, k, p, monotone)
    step = 0.25
    floor_step = max(tol / 10.0, 1e-9)
    while step > floor_step:
        improved = True
        passes = 0
        while improved and passes < 100:
            improved = False
            passes += 1
            for i in range(n):
                for sign in (1.0, -1.0):
                    cand = raw.copy()
                    cand[:, i] = np.clip(cand[:, i] + sign * step, 0.0, 1.0)
                    val = _batch_ratio(cand, k, p, monotone)
                    better = val < cur - 1e-15
                    if better.any():
                        raw[better] = cand[better]
                        cur[better] = val[better]
                        improved = True
        step *= 0.5

    # deterministic merge: best value, ties broken by lexicographic argmin
    order = np.lexsort((*(raw.T[::-1]), cur))
    best_row = order[0]
    descent_value = float(cur[best_row])
    if monotone:
        descent_x = monotone_envelope(tuple(raw[best_row]), k)
    else:
        descent_x = tuple(float(v) for v in raw[best_row])
    norm = sum(v**p for v in descent_x)
    if norm > 0:
        scale = norm ** (-1.0 / p)
        descent_x = tuple(float(v) * scale for v in descent_x)

    candidates: list[tuple[float, tuple[float, ...]]] = []
    bound = float(growth_constant(d))
    if monotone and best_exact is not None and float(best_exact) <= descent_value + 1e-12:
        value = float(best_exact)
        exact = best_exact
        argmin = tuple(float(v) for v in best_indicator.values)
    else:
        value = descent_value
        exact = None
        argmin = descent_x
    if not monotone and value < bound - tol:
        candidates.append((value, argmin))
    return MinRatioResult(
        k=k,
        d=d,
        value=value,
        exact=exact,
        argmin=argmin,
        meets_bound=value >= bound - tol,
        monotone=monotone,
        candidates=tuple(candidates),
    )
