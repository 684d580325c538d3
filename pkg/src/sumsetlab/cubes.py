"""Search for affine cubes inside finite lattice sets.

An affine k-cube is a base point plus all 2^k subset sums of k linearly
independent generator vectors.  The cube dimension of a set is the largest
k for which such a cube lies entirely inside the set.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .exactmath import IntegerRowBasis, integer_rank
from .lattice import LatticeSet, Point

__all__ = [
    "CubeWitness",
    "DimensionResult",
    "SearchBudgetExceeded",
    "find_cube",
    "cube_dimension",
    "validate_witness",
    "affine_rank",
]


class SearchBudgetExceeded(RuntimeError):
    """The wall-clock budget ran out before the search finished."""


@dataclass(frozen=True)
class CubeWitness:
    """Base point and generators of an affine cube."""

    base: Point
    generators: tuple[Point, ...]

    @property
    def k(self) -> int:
        return len(self.generators)

    def vertices(self) -> list[Point]:
        """All 2^k subset sums, in subset-mask order."""
        verts = [self.base]
        for g in self.generators:
            verts += [tuple(v + d for v, d in zip(p, g)) for p in verts]
        return verts


@dataclass(frozen=True)
class DimensionResult:
    dimension: int
    witness: CubeWitness | None
    certified: bool  # False when the budget ran out: dimension is a lower bound


def validate_witness(a: LatticeSet, witness: CubeWitness) -> bool:
    """Recompute membership of all vertices and the exact generator rank."""
    if witness.k == 0:
        return witness.base in a.points
    if any(len(g) != a.dim for g in witness.generators):
        return False
    if integer_rank(witness.generators) != witness.k:
        return False
    return all(v in a.points for v in witness.vertices())


def affine_rank(a: LatticeSet) -> int:
    """Dimension of the affine hull of a (0 for a single point)."""
    pts = a.sorted_points()
    if len(pts) < 2:
        return 0
    p0 = pts[0]
    return integer_rank([tuple(c - b for c, b in zip(p, p0)) for p in pts[1:]])


def _check_deadline(deadline: float | None) -> None:
    if deadline is not None and time.monotonic() > deadline:
        raise SearchBudgetExceeded("cube search budget exhausted")


def find_cube(a: LatticeSet, k: int, budget_ms: float | None = None) -> CubeWitness | None:
    """First affine k-cube inside a, or None if there is none.

    Bases are scanned in lexicographic order and generators are built as
    increasing lexicographically-positive difference tuples, so the result
    is the lexicographically least witness.  Raises SearchBudgetExceeded
    when budget_ms elapses before the search is complete.
    """
    if k < 1:
        raise ValueError(f"cube order must be >= 1, got {k}")
    deadline = time.monotonic() + budget_ms / 1000.0 if budget_ms is not None else None
    if k > a.dim or (1 << k) > len(a) or k > affine_rank(a):
        return None
    pts = a.sorted_points()
    members = a.points

    for base_idx, v0 in enumerate(pts):
        # every cube has a representation based at its lex-least vertex with
        # all generators lexicographically positive
        diffs = [tuple(c - b for c, b in zip(p, v0)) for p in pts[base_idx + 1 :]]
        if len(diffs) < k:
            continue
        found = _dfs(diffs, k, v0, members, deadline)
        if found is not None:
            return CubeWitness(base=v0, generators=found)
    return None


def _dfs(
    diffs: list[Point],
    k: int,
    base: Point,
    members: frozenset[Point],
    deadline: float | None,
) -> tuple[Point, ...] | None:
    basis = IntegerRowBasis()
    chosen: list[Point] = []
    vertices: list[Point] = [base]

    def recurse(start: int) -> tuple[Point, ...] | None:
        if len(chosen) == k:
            return tuple(chosen)
        _check_deadline(deadline)
        needed = k - len(chosen)
        for i in range(start, len(diffs) - needed + 1):
            g = diffs[i]
            shifted = [tuple(v + d for v, d in zip(p, g)) for p in vertices]
            if not all(s in members for s in shifted):
                continue
            if not basis.try_add(g):
                continue
            chosen.append(g)
            vertices.extend(shifted)
            result = recurse(i + 1)
            if result is not None:
                return result
            del vertices[len(vertices) - len(shifted) :]
            chosen.pop()
            basis.pop()
        return None

    return recurse(0)


def cube_dimension(
    a: LatticeSet, k_max: int | None = None, budget_ms: float | None = None
) -> DimensionResult:
    """Largest k such that a contains an affine k-cube.

    Searches k = 1, 2, ... upward so that a witness is always in hand; if
    the budget runs out mid-level the best witness so far is returned with
    certified=False (the dimension is then only a lower bound).
    """
    if len(a) < 2:
        raise ValueError("cube dimension requires at least two points")
    deadline = time.monotonic() + budget_ms / 1000.0 if budget_ms is not None else None
    upper = min(a.dim, len(a).bit_length() - 1, affine_rank(a))
    if k_max is not None:
        upper = min(upper, k_max)

    best_k = 0
    best_witness: CubeWitness | None = None
    for k in range(1, upper + 1):
        remaining = None if deadline is None else max(0.0, (deadline - time.monotonic()) * 1000.0)
        try:
            witness = find_cube(a, k, budget_ms=remaining)
        except SearchBudgetExceeded:
            return DimensionResult(best_k, best_witness, certified=False)
        if witness is None:
            break
        best_k, best_witness = k, witness
    return DimensionResult(best_k, best_witness, certified=True)
