"""Block decomposition of a down-set by its small-coordinate pattern.

For a subset S of the axes, the S-block of a set A holds the points whose
coordinates are < 2 exactly on S; the block splits into slices A_S(u),
u in {0,1}^S, projected to the complementary axes.  The sumset B = A + A
decomposes the same way with threshold 3 and slices over {0,1,2}^S.  The
slice counts feed the grid inequality as d-k-th roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Mapping

from .certificates import growth_constant
from .exactmath import compare_root_sum
from .inequality import GridAssignment, WeightAssignment, cube_indices, grid_indices
from .lattice import LatticeSet, Point, is_down_set, minkowski_sum, unit_cube

__all__ = [
    "BlockDecomposition",
    "BlockInstanceError",
    "block_decomposition",
    "FiberCheckReport",
    "check_fiber_inclusions",
    "check_all_fiber_inclusions",
    "blocks_to_instance",
]


class BlockInstanceError(ValueError):
    """The slice counts violate a hypothesis they are guaranteed to satisfy."""


def _validate_axes(dim: int, axes: tuple[int, ...]) -> tuple[int, ...]:
    axes = tuple(sorted(axes))
    if len(set(axes)) != len(axes):
        raise ValueError(f"duplicate axes in {axes}")
    if axes and (axes[0] < 0 or axes[-1] >= dim):
        raise ValueError(f"axes {axes} out of range for dim {dim}")
    return axes


def _slices(
    points: frozenset[Point], axes: tuple[int, ...], dim: int, threshold: int
) -> dict[tuple[int, ...], frozenset[Point]]:
    """Group points with coords < threshold exactly on `axes` by their
    pattern there, projecting each onto the complementary axes."""
    rest = [i for i in range(dim) if i not in axes]
    out: dict[tuple[int, ...], set[Point]] = {}
    for p in points:
        if any(p[i] >= threshold for i in axes):
            continue
        if any(p[i] < threshold for i in rest):
            continue
        pattern = tuple(p[i] for i in axes)
        out.setdefault(pattern, set()).add(tuple(p[i] for i in rest))
    return {k: frozenset(v) for k, v in out.items()}


@dataclass(frozen=True)
class BlockDecomposition:
    dim: int
    axes: tuple[int, ...]
    blocks: Mapping[tuple[int, ...], frozenset[Point]]  # u in {0,1}^S
    grid_blocks: Mapping[tuple[int, ...], frozenset[Point]]  # w in {0,1,2}^S

    def block(self, u: tuple[int, ...]) -> frozenset[Point]:
        return self.blocks.get(tuple(u), frozenset())

    def grid_block(self, w: tuple[int, ...]) -> frozenset[Point]:
        return self.grid_blocks.get(tuple(w), frozenset())

    @property
    def size(self) -> int:
        return sum(len(v) for v in self.blocks.values())

    @property
    def grid_size(self) -> int:
        return sum(len(v) for v in self.grid_blocks.values())


def block_decomposition(
    a: LatticeSet, axes: tuple[int, ...] | list[int], sumset: LatticeSet | None = None
) -> BlockDecomposition:
    """Slices of a and of a + a for one axis subset S.

    Over all S the blocks partition the set: every point lands in the block
    of S = {axes where its coordinate is < 2}.
    """
    axes = _validate_axes(a.dim, tuple(axes))
    if not is_down_set(a):
        raise ValueError("block decomposition requires a down-set")
    b = sumset if sumset is not None else minkowski_sum(a, a)
    return BlockDecomposition(
        dim=a.dim,
        axes=axes,
        blocks=_slices(a.points, axes, a.dim, 2),
        grid_blocks=_slices(b.points, axes, a.dim, 3),
    )


@dataclass(frozen=True)
class FiberCheckReport:
    axes: tuple[int, ...]
    inclusions_ok: bool
    failures: tuple[tuple[tuple[int, ...], tuple[int, ...], Point], ...]
    block_size: int
    grid_block_size: int
    bound_ok: bool | None  # None when S is the full axis set
    bound_slack: Fraction | None

    @property
    def ok(self) -> bool:
        return self.inclusions_ok and self.bound_ok is not False


def _shifted_sum(
    xs: frozenset[Point], ys: frozenset[Point], shifts: list[Point]
) -> set[Point]:
    out: set[Point] = set()
    for p in xs:
        for q in ys:
            base = tuple(i + j for i, j in zip(p, q))
            for s in shifts:
                out.add(tuple(i + j for i, j in zip(base, s)))
    return out


def check_fiber_inclusions(
    a: LatticeSet, axes: tuple[int, ...] | list[int], sumset: LatticeSet | None = None
) -> FiberCheckReport:
    """Verify the slice inclusions for one S, plus the per-block bound.

    For u, v patterns with both slices non-empty:
        B_S(u+v) contains A_S(u) + A_S(v) + {-1,0}^(d-k);
    when A_S(u) is empty and A_S(v) is not:
        B_S(u+v) contains A_S(v) + {1}^(d-k).
    The bound |B_S| >= growth_constant(d) * |A_S| applies to proper S only.
    Requires a down-set containing {0,1}^dim.
    """
    axes = _validate_axes(a.dim, tuple(axes))
    if not unit_cube(a.dim).points <= a.points:
        raise ValueError("fiber check requires the set to contain {0,1}^dim")
    dec = block_decomposition(a, axes, sumset=sumset)
    k = len(axes)
    n = a.dim - k
    down_shifts = [tuple(s) for s in product((-1, 0), repeat=n)]
    ones = tuple(1 for _ in range(n))

    failures: list[tuple[tuple[int, ...], tuple[int, ...], Point]] = []
    for u in cube_indices(k):
        for v in cube_indices(k):
            au, av = dec.block(u), dec.block(v)
            w = tuple(i + j for i, j in zip(u, v))
            bw = dec.grid_block(w)
            if au and av:
                required = _shifted_sum(au, av, down_shifts)
            elif not au and av:
                required = {tuple(i + j for i, j in zip(p, ones)) for p in av}
            else:
                continue
            for point in sorted(required - bw):
                failures.append((u, v, point))

    if k < a.dim:
        slack = Fraction(dec.grid_size) - growth_constant(a.dim) * dec.size
        bound_ok: bool | None = slack >= 0
    else:
        slack = None
        bound_ok = None
    return FiberCheckReport(
        axes=axes,
        inclusions_ok=not failures,
        failures=tuple(failures),
        block_size=dec.size,
        grid_block_size=dec.grid_size,
        bound_ok=bound_ok,
        bound_slack=slack,
    )


def check_all_fiber_inclusions(a: LatticeSet) -> list[FiberCheckReport]:
    """Fiber checks for every S, computing the sumset once."""
    b = minkowski_sum(a, a)
    reports = []
    for r in range(a.dim + 1):
        for axes in _axis_subsets(a.dim, r):
            reports.append(check_fiber_inclusions(a, axes, sumset=b))
    return reports


def _axis_subsets(dim: int, r: int):
    from itertools import combinations

    return combinations(range(dim), r)


def blocks_to_instance(
    a: LatticeSet, axes: tuple[int, ...] | list[int], sumset: LatticeSet | None = None
) -> tuple[WeightAssignment, GridAssignment]:
    """Turn slice counts into a grid-inequality instance.

    x_u = |A_S(u)|^(1/(d-k)) and y_w = |B_S(w)|^(1/(d-k)).  Verifies, with
    exact integer root comparisons, that x is monotone decreasing upward
    and that y_(u+v) >= x_u + x_v; a violation means the decomposition
    breaks a guaranteed hypothesis and raises BlockInstanceError.
    """
    axes = _validate_axes(a.dim, tuple(axes))
    k = len(axes)
    n = a.dim - k
    if n < 1:
        raise ValueError("instance requires a proper axis subset")
    dec = block_decomposition(a, axes, sumset=sumset)
    cube = cube_indices(k)
    counts = {u: len(dec.block(u)) for u in cube}
    grid_counts = {w: len(dec.grid_block(w)) for w in grid_indices(k)}

    for u in cube:
        for v in cube:
            if all(i <= j for i, j in zip(u, v)) and counts[u] < counts[v]:
                raise BlockInstanceError(f"slice counts not monotone at {u} <= {v}")
    for u in cube:
        for v in cube:
            w = tuple(i + j for i, j in zip(u, v))
            if compare_root_sum(grid_counts[w], [counts[u], counts[v]], n) < 0:
                raise BlockInstanceError(
                    f"grid hypothesis fails at {u} + {v}: "
                    f"{grid_counts[w]} vs {counts[u]}, {counts[v]}"
                )

    x = WeightAssignment(k=k, values=tuple(counts[u] ** (1.0 / n) for u in cube))
    y = GridAssignment(
        k=k, values=tuple(grid_counts[w] ** (1.0 / n) for w in grid_indices(k))
    )
    return x, y
