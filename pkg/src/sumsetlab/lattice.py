"""Finite lattice point sets: sumsets, down-sets, coordinate compression.

Points are integer tuples of a fixed dimension.  Sets are immutable once
constructed; every operation returns a new set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator

import numpy as np

__all__ = [
    "LatticeError",
    "DimensionMismatchError",
    "EmptySetError",
    "LatticeSet",
    "minkowski_sum",
    "is_down_set",
    "compress_coordinate",
    "compress_all",
    "doubling",
    "DoublingReport",
    "box",
    "unit_cube",
]

Point = tuple[int, ...]

# numpy int64 fast path is guarded by this bound so coordinate sums can
# never wrap; larger coordinates fall back to pure python.
_INT64_SAFE = 1 << 62


class LatticeError(ValueError):
    """Base error for lattice operations."""


class DimensionMismatchError(LatticeError):
    """Operands have different ambient dimensions."""


class EmptySetError(LatticeError):
    """Operation undefined on the empty set."""


class LatticeSet:
    """An immutable finite subset of Z^dim."""

    __slots__ = ("_points", "_dim", "_sorted")

    def __init__(self, points: Iterable[Iterable[int]], dim: int | None = None):
        pts = frozenset(tuple(int(c) for c in p) for p in points)
        if pts:
            dims = {len(p) for p in pts}
            if len(dims) != 1:
                raise DimensionMismatchError(f"mixed point dimensions: {sorted(dims)}")
            inferred = dims.pop()
            if dim is not None and dim != inferred:
                raise DimensionMismatchError(f"declared dim {dim} != point dim {inferred}")
            dim = inferred
        elif dim is None:
            raise LatticeError("dimension required for an empty set")
        if dim < 1:
            raise LatticeError(f"dimension must be >= 1, got {dim}")
        self._points = pts
        self._dim = dim
        self._sorted: tuple[Point, ...] | None = None

    @property
    def points(self) -> frozenset[Point]:
        return self._points

    @property
    def dim(self) -> int:
        return self._dim

    def sorted_points(self) -> tuple[Point, ...]:
        if self._sorted is None:
            self._sorted = tuple(sorted(self._points))
        return self._sorted

    def __len__(self) -> int:
        return len(self._points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.sorted_points())

    def __contains__(self, p: object) -> bool:
        return p in self._points

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LatticeSet):
            return NotImplemented
        return self._dim == other._dim and self._points == other._points

    def __hash__(self) -> int:
        return hash((self._dim, self._points))

    def __repr__(self) -> str:
        return f"LatticeSet(dim={self._dim}, size={len(self._points)})"


def box(sides: Iterable[int]) -> LatticeSet:
    """Axis-aligned box with the given side lengths: [0, s_i - 1] per axis."""
    sides = tuple(int(s) for s in sides)
    if not sides or any(s < 1 for s in sides):
        raise LatticeError(f"box sides must be positive, got {sides}")
    return LatticeSet(product(*(range(s) for s in sides)), dim=len(sides))


def unit_cube(dim: int) -> LatticeSet:
    """The vertex set {0,1}^dim."""
    return box((2,) * dim)


def _sum_python(a: LatticeSet, b: LatticeSet) -> set[Point]:
    out: set[Point] = set()
    bpts = b.sorted_points()
    for p in a.points:
        for q in bpts:
            out.add(tuple(x + y for x, y in zip(p, q)))
    return out


def _coords_small(s: LatticeSet) -> bool:
    return all(-_INT64_SAFE < c < _INT64_SAFE for p in s.points for c in p)


def minkowski_sum(a: LatticeSet, b: LatticeSet) -> LatticeSet:
    """Pointwise sum {p + q : p in a, q in b}."""
    if a.dim != b.dim:
        raise DimensionMismatchError(f"cannot add dim {a.dim} to dim {b.dim}")
    if not a.points or not b.points:
        return LatticeSet((), dim=a.dim)
    if len(a) * len(b) < 2048 or not (_coords_small(a) and _coords_small(b)):
        return LatticeSet(_sum_python(a, b), dim=a.dim)
    arr_a = np.array(a.sorted_points(), dtype=np.int64)
    arr_b = np.array(b.sorted_points(), dtype=np.int64)
    sums = (arr_a[:, None, :] + arr_b[None, :, :]).reshape(-1, a.dim)
    uniq = np.unique(sums, axis=0)
    return LatticeSet(map(tuple, uniq.tolist()), dim=a.dim)


def is_down_set(a: LatticeSet) -> bool:
    """True iff a sits in the non-negative orthant and is closed downward.

    Closure under decrementing one coordinate at a time implies closure
    under arbitrary coordinate decrease, so only unit steps are checked.
    """
    pts = a.points
    for p in pts:
        for i, c in enumerate(p):
            if c < 0:
                return False
            if c > 0 and p[:i] + (c - 1,) + p[i + 1 :] not in pts:
                return False
    return True


def compress_coordinate(a: LatticeSet, axis: int) -> LatticeSet:
    """Push every fiber along `axis` down to an initial segment {0,...,m-1}.

    The fiber of a point is the set of points agreeing with it on all other
    coordinates; each fiber of size m is replaced by the same fiber with
    axis values 0..m-1.  Cardinality is preserved.
    """
    if not 0 <= axis < a.dim:
        raise LatticeError(f"axis {axis} out of range for dim {a.dim}")
    fibers: dict[tuple[Point, Point], int] = {}
    out: list[Point] = []
    for p in a.sorted_points():
        key = (p[:axis], p[axis + 1 :])
        slot = fibers.get(key, 0)
        fibers[key] = slot + 1
        out.append(key[0] + (slot,) + key[1])
    return LatticeSet(out, dim=a.dim)


def compress_all(a: LatticeSet) -> LatticeSet:
    """Compress every coordinate once, in axis order 0..dim-1."""
    for axis in range(a.dim):
        a = compress_coordinate(a, axis)
    return a


@dataclass(frozen=True)
class DoublingReport:
    size: int
    sumset_size: int
    sigma: Fraction


def doubling(a: LatticeSet) -> DoublingReport:
    """Sizes of a and a + a together with the ratio |a+a| / |a|."""
    if not a.points:
        raise EmptySetError("doubling is undefined for the empty set")
    s = minkowski_sum(a, a)
    return DoublingReport(size=len(a), sumset_size=len(s), sigma=Fraction(len(s), len(a)))
