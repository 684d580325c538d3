"""Named point-set families, growth-bound experiments, and permutation geometry.

The closed-form families (``box``, ``even``, ``odd``, ``cube``) are unions of
corner boxes ``[0,t_1] x ... x [0,t_d]``, and their sumsets are again unions
of corner boxes, so exact cardinalities come from inclusion-exclusion over
coordinatewise minima.  ``verify_main_bound`` checks the two lower bounds on
``|A+A|`` (the sharp linear bound in the exponential dimension, and the
``sqrt(2)^dim |A|`` bound) with exact integer arithmetic.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .certificates import growth_constant
from .cubes import CubeWitness, cube_dimension, validate_witness
from .exactmath import compare_root_sum
from .lattice import (
    DimensionMismatchError,
    EmptySetError,
    LatticeSet,
    Point,
    box,
    minkowski_sum,
    unit_cube,
)

FAMILY_KINDS = ("box", "even", "odd", "cube", "permutohedron", "lehmer-box")

__all__ = [
    "FAMILY_KINDS",
    "FamilySpec",
    "MainBoundReport",
    "RootSumReport",
    "TranspositionCubeReport",
    "family_limit",
    "generate",
    "predicted_counts",
    "verify_main_bound",
    "root_sum_check",
    "random_downset",
    "lehmer_code",
    "lehmer_image",
    "transposition_cube",
    "transposition_cube_report",
]


@dataclass(frozen=True)
class FamilySpec:
    """A named family instance: kind, ambient dimension d, side parameter n."""

    kind: str
    d: int
    n: int = 0

    def __post_init__(self) -> None:
        if self.kind not in FAMILY_KINDS:
            raise ValueError(
                f"unknown family kind {self.kind!r}; expected one of: "
                + ", ".join(FAMILY_KINDS)
            )
        if self.d < 1:
            raise ValueError(f"family dimension must be >= 1, got {self.d}")
        if self.kind == "box" and self.n < 0:
            raise ValueError("box family needs n >= 0")
        if self.kind == "even":
            if self.d % 2 != 0:
                raise ValueError("even family needs an even dimension")
            if self.n < 1:
                raise ValueError("even family needs n >= 1")
        if self.kind == "odd":
            if self.d % 2 != 1 or self.d < 3:
                raise ValueError("odd family needs an odd dimension >= 3")
            if self.n < 1:
                raise ValueError("odd family needs n >= 1")


def _corner_boxes(spec: FamilySpec) -> list[tuple[int, ...]]:
    """Top corners of the boxes whose union is the family's point set."""
    d, n = spec.d, spec.n
    if spec.kind == "box":
        return [(1,) * (d - 1) + (n,)]
    if spec.kind == "cube":
        return [(1,) * d]
    if spec.kind == "even":
        m = d // 2
        return [(1,) * d, (0,) * m + (n,) * m]
    if spec.kind == "odd":
        m = (d - 1) // 2
        return [(1,) * d, (0,) * m + (1,) + (n,) * m]
    raise ValueError(f"family kind {spec.kind!r} is not a union of corner boxes")


def _corner_sum_boxes(spec: FamilySpec) -> list[tuple[int, ...]]:
    """Top corners of the boxes whose union is the family's sumset."""
    d, n = spec.d, spec.n
    if spec.kind == "box":
        return [(2,) * (d - 1) + (2 * n,)]
    if spec.kind == "cube":
        return [(2,) * d]
    if spec.kind == "even":
        m = d // 2
        return [
            (2,) * d,
            (1,) * m + (n + 1,) * m,
            (0,) * m + (2 * n,) * m,
        ]
    if spec.kind == "odd":
        m = (d - 1) // 2
        return [
            (2,) * d,
            (1,) * m + (2,) + (n + 1,) * m,
            (0,) * m + (2,) + (2 * n,) * m,
        ]
    raise ValueError(f"no closed-form sumset for family kind {spec.kind!r}")


def _union_size(corners: Sequence[tuple[int, ...]]) -> int:
    """|union of corner boxes| by inclusion-exclusion over coordinate minima."""
    total = 0
    for r in range(1, len(corners) + 1):
        for combo in itertools.combinations(corners, r):
            size = 1
            for tops in zip(*combo):
                size *= min(tops) + 1
            total += size if r % 2 == 1 else -size
    return total


def generate(spec: FamilySpec) -> LatticeSet:
    """The literal point set of a family instance."""
    if spec.kind == "permutohedron":
        return LatticeSet(itertools.permutations(range(1, spec.d + 1)), dim=spec.d)
    if spec.kind == "lehmer-box":
        return box(range(spec.d, 0, -1))
    points: set[Point] = set()
    for corner in _corner_boxes(spec):
        points.update(itertools.product(*(range(t + 1) for t in corner)))
    return LatticeSet(points, dim=spec.d)


def predicted_counts(spec: FamilySpec) -> tuple[int, int]:
    """Exact (|A|, |A+A|) from the closed-form corner-box decompositions."""
    if spec.kind not in ("box", "even", "odd", "cube"):
        raise ValueError(f"no closed-form counts for family kind {spec.kind!r}")
    return _union_size(_corner_boxes(spec)), _union_size(_corner_sum_boxes(spec))


def family_limit(kind: str, d: int) -> Fraction:
    """Limiting doubling ratio |A+A|/|A| of the family as n grows.

    box: 2*(3/2)^(d-1); even: 2^(d/2+1)-1; odd: 3*2^((d-1)/2)-3/2.  The
    minimum of the limits applicable to a given d equals growth_constant(d).
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if kind == "box":
        return 2 * Fraction(3, 2) ** (d - 1)
    if kind == "even":
        if d % 2 != 0:
            raise ValueError("even family needs an even dimension")
        return Fraction(2 ** (d // 2 + 1) - 1)
    if kind == "odd":
        if d % 2 != 1 or d < 3:
            raise ValueError("odd family needs an odd dimension >= 3")
        return 3 * Fraction(2) ** ((d - 1) // 2) - Fraction(3, 2)
    raise ValueError(f"no limiting ratio for family kind {kind!r}")


@dataclass(frozen=True)
class MainBoundReport:
    """Both lower bounds on |A+A| evaluated on one instance.

    main_bound is growth*(|A| - 2^dim) + 3^dim with growth = growth_constant(dim);
    root2_bound is sqrt(2)^dim * |A|, checked exactly via squared integers.
    error_term is 3^dim - growth*2^dim, so main_bound = growth*|A| + error_term;
    its sign is computed, not assumed (it first turns positive at dim = 12).
    Dimension-0 instances (single points) use the trivial coefficient 1.
    """

    size: int
    sumset_size: int
    dimension: int
    dimension_certified: bool
    growth: Fraction
    main_bound: Fraction
    main_ok: bool
    slack: Fraction
    equality: bool
    root2_bound: float
    root2_ok: bool
    error_term: Fraction
    error_term_positive: bool

    @property
    def ok(self) -> bool:
        return self.main_ok and self.root2_ok


def verify_main_bound(
    a: LatticeSet,
    dim: int | None = None,
    budget_ms: float | None = None,
    sumset: LatticeSet | None = None,
) -> MainBoundReport:
    """Check |A+A| against both lower bounds in the exponential dimension.

    When dim is not asserted it is searched for; if the search budget runs
    out the report carries the best dimension found with
    dimension_certified=False, and the bounds are evaluated at that lower
    bound (they only get weaker, so an OK verdict still stands).  A
    precomputed sumset may be passed to avoid recomputation.
    """
    if len(a) == 0:
        raise EmptySetError("cannot verify bounds on an empty set")
    if sumset is None:
        sumset = minkowski_sum(a, a)
    if dim is not None:
        if dim < 0:
            raise ValueError(f"dimension must be >= 0, got {dim}")
        dimension, certified = dim, True
    elif len(a) == 1:
        dimension, certified = 0, True
    else:
        found = cube_dimension(a, budget_ms=budget_ms)
        dimension, certified = found.dimension, found.certified
    growth = growth_constant(dimension) if dimension >= 1 else Fraction(1)
    main_bound = growth * (len(a) - 2**dimension) + 3**dimension
    slack = Fraction(len(sumset)) - main_bound
    root2_ok = len(sumset) ** 2 >= 2**dimension * len(a) ** 2
    error_term = 3**dimension - growth * 2**dimension
    return MainBoundReport(
        size=len(a),
        sumset_size=len(sumset),
        dimension=dimension,
        dimension_certified=certified,
        growth=growth,
        main_bound=main_bound,
        main_ok=slack >= 0,
        slack=slack,
        equality=slack == 0,
        root2_bound=math.sqrt(2.0) ** dimension * len(a),
        root2_ok=root2_ok,
        error_term=error_term,
        error_term_positive=error_term > 0,
    )


@dataclass(frozen=True)
class RootSumReport:
    """Exact verdict on |X+Y+{0,1}^d|^(1/d) >= |X|^(1/d) + |Y|^(1/d)."""

    dim: int
    x_size: int
    y_size: int
    expanded_size: int
    ok: bool
    equality: bool
    slack: float


def root_sum_check(x: LatticeSet, y: LatticeSet) -> RootSumReport:
    """Superadditivity of the d-th root of cardinality under cube-padded sums.

    The comparison |X+Y+{0,1}^d| >= (|X|^(1/d) + |Y|^(1/d))^d is decided
    exactly in integer arithmetic (compare_root_sum); the reported slack is
    the float difference of the d-th roots, for display only.
    """
    if x.dim != y.dim:
        raise DimensionMismatchError(
            f"dimension mismatch: {x.dim} vs {y.dim}"
        )
    if len(x) == 0 or len(y) == 0:
        raise EmptySetError("root-sum check needs non-empty sets")
    d = x.dim
    expanded = minkowski_sum(minkowski_sum(x, y), unit_cube(d))
    verdict = compare_root_sum(len(expanded), [len(x), len(y)], d)
    slack = (
        len(expanded) ** (1.0 / d) - len(x) ** (1.0 / d) - len(y) ** (1.0 / d)
    )
    return RootSumReport(
        dim=d,
        x_size=len(x),
        y_size=len(y),
        expanded_size=len(expanded),
        ok=verdict >= 0,
        equality=verdict == 0,
        slack=slack,
    )


def random_downset(
    d: int,
    volume: int,
    seed: int = 0,
    sample_box: Sequence[int] | None = None,
) -> LatticeSet:
    """Union of {0,1}^d with down-closures of corners sampled from a box.

    Corners are drawn uniformly from the box with the given side lengths
    (default 5 per axis, i.e. coordinates 0..4) until at least ``volume``
    points are present.  The last closure may overshoot the target; the
    result is never trimmed, so it is always a down-set containing {0,1}^d.
    Deterministic for a fixed seed.
    """
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    if volume < 1:
        raise ValueError(f"volume target must be >= 1, got {volume}")
    sides = tuple(sample_box) if sample_box is not None else (5,) * d
    if len(sides) != d or any(s < 1 for s in sides):
        raise ValueError("sample box needs one side >= 1 per axis")
    reachable = _union_size([(1,) * d, tuple(s - 1 for s in sides)])
    if volume > reachable:
        raise ValueError(
            f"volume target {volume} exceeds the {reachable} points reachable "
            "from the sample box"
        )
    rng = random.Random(seed)
    points: set[Point] = set(itertools.product((0, 1), repeat=d))
    while len(points) < volume:
        corner = tuple(rng.randrange(s) for s in sides)
        points.update(itertools.product(*(range(c + 1) for c in corner)))
    return LatticeSet(points, dim=d)


def lehmer_code(sigma: Sequence[int]) -> Point:
    """Inversion table of a permutation of {1..d}: c_i = #{j > i : s_j < s_i}."""
    d = len(sigma)
    if sorted(sigma) != list(range(1, d + 1)):
        raise ValueError(f"not a permutation of 1..{d}: {tuple(sigma)!r}")
    return tuple(
        sum(1 for j in range(i + 1, d) if sigma[j] < sigma[i]) for i in range(d)
    )


def lehmer_image(d: int) -> LatticeSet:
    """Codes of all d! permutations; equals the box with sides d, d-1, ..., 1."""
    if d < 1:
        raise ValueError(f"dimension must be >= 1, got {d}")
    return LatticeSet(
        (lehmer_code(sigma) for sigma in itertools.permutations(range(1, d + 1))),
        dim=d,
    )


def transposition_cube(d: int) -> CubeWitness:
    """The (d/2)-cube spanned by disjoint adjacent transpositions of (1..d).

    Base is the identity vector; generator j swaps slots 2j-1 and 2j, i.e.
    adds e_{2j-1} - e_{2j}.  Every vertex is a permutation vector, so the
    witness lies inside the permutohedron vertex set.
    """
    if d < 2 or d % 2 != 0:
        raise ValueError(f"transposition cube needs an even dimension >= 2, got {d}")
    base = tuple(range(1, d + 1))
    generators = []
    for j in range(d // 2):
        gen = [0] * d
        gen[2 * j] = 1
        gen[2 * j + 1] = -1
        generators.append(tuple(gen))
    return CubeWitness(base=base, generators=tuple(generators))


@dataclass(frozen=True)
class TranspositionCubeReport:
    """Witness validation, plus the brute-forced max cube dimension when small.

    ok covers the existence direction only (the d/2 witness is genuine);
    max_dimension is informational.  The permutation vectors can contain
    strictly larger cubes than the transposition construction: already for
    d = 4 the exhaustive search certifies a 3-cube, e.g. base (1,2,3,4)
    with generators (0,0,1,-1), (0,2,-1,-1), (3,-1,-1,-1).
    """

    d: int
    witness: CubeWitness
    witness_valid: bool
    expected_k: int
    max_dimension: int | None
    max_dimension_certified: bool | None

    @property
    def ok(self) -> bool:
        if not (self.witness_valid and self.witness.k == self.expected_k):
            return False
        if self.max_dimension is not None:
            return self.max_dimension >= self.expected_k
        return True


def transposition_cube_report(
    d: int,
    max_check_dim: int = 4,
    budget_ms: float | None = None,
) -> TranspositionCubeReport:
    """Validate the transposition cube against the permutation vectors.

    For d <= max_check_dim the maximum cube dimension over all d!
    permutation vectors is also brute-forced, confirming that d/2 cannot be
    beaten; for larger d that search is skipped (max_dimension=None) and
    only the witness itself is checked.
    """
    witness = transposition_cube(d)
    vertices = generate(FamilySpec("permutohedron", d))
    valid = validate_witness(vertices, witness)
    max_dim: int | None = None
    max_certified: bool | None = None
    if d <= max_check_dim:
        found = cube_dimension(vertices, budget_ms=budget_ms)
        max_dim, max_certified = found.dimension, found.certified
    return TranspositionCubeReport(
        d=d,
        witness=witness,
        witness_valid=valid,
        expected_k=d // 2,
        max_dimension=max_dim,
        max_dimension_certified=max_certified,
    )
