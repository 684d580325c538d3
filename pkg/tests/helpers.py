"""Shared oracle helpers for the test suite.

Everything in this module is implemented independently of the package under
test (plain set comprehensions, Fraction-based elimination, exhaustive
enumeration) so that library results can be checked against a second opinion.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction


# ---------------------------------------------------------------------------
# elementary set oracles


def brute_sumset(a, b):
    """All pairwise sums of two iterables of integer tuples, as a set."""
    return {tuple(x + y for x, y in zip(p, q)) for p in a for q in b}


def brute_is_down_set(points):
    """True iff every point is in N_0^d and every coordinate predecessor is present."""
    pts = {tuple(p) for p in points}
    for p in pts:
        if any(c < 0 for c in p):
            return False
        for i, c in enumerate(p):
            if c > 0:
                q = p[:i] + (c - 1,) + p[i + 1 :]
                if q not in pts:
                    return False
    return True


def down_closure(point):
    """All lattice points coordinatewise between 0 and the given point."""
    return set(itertools.product(*(range(c + 1) for c in point)))


# ---------------------------------------------------------------------------
# exact linear algebra oracle (plain Fraction Gaussian elimination)


def fraction_rank(rows):
    """Rank of an integer matrix, by textbook elimination over Fraction."""
    matrix = [[Fraction(c) for c in row] for row in rows]
    rank = 0
    cols = len(matrix[0]) if matrix else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(matrix)) if matrix[r][col]), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        inv = 1 / matrix[rank][col]
        matrix[rank] = [v * inv for v in matrix[rank]]
        for r in range(len(matrix)):
            if r != rank and matrix[r][col]:
                factor = matrix[r][col]
                matrix[r] = [v - factor * w for v, w in zip(matrix[r], matrix[rank])]
        rank += 1
        if rank == len(matrix):
            break
    return rank


# ---------------------------------------------------------------------------
# exhaustive parallelepiped search (oracle for the dimension search)


def brute_has_cube(points, k):
    """Exhaustively decide whether the set contains all 2^k vertices of a
    non-degenerate k-dimensional parallelepiped.  No pruning beyond membership
    checks; intended for small inputs only."""
    pts = [tuple(p) for p in points]
    pset = set(pts)
    if k < 1 or 2**k > len(pset):
        return False
    for base in pts:
        diffs = [
            tuple(p - b for p, b in zip(q, base)) for q in pts if tuple(q) != base
        ]
        for combo in itertools.combinations(diffs, k):
            ok = True
            for mask in range(1, 2**k):
                vertex = tuple(
                    b + sum(g[i] for j, g in enumerate(combo) if mask >> j & 1)
                    for i, b in enumerate(base)
                )
                if vertex not in pset:
                    ok = False
                    break
            if ok and fraction_rank(combo) == k:
                return True
    return False


def brute_cube_dimension(points, k_max=None):
    """Largest k with a genuine k-cube inside ``points``, by exhaustion."""
    pts = [tuple(p) for p in points]
    if len(set(pts)) < 2:
        raise ValueError("need at least two points")
    cap = min(len(pts[0]), len(set(pts)).bit_length() - 1)
    if k_max is not None:
        cap = min(cap, k_max)
    best = 0
    for k in range(1, cap + 1):
        if brute_has_cube(pts, k):
            best = k
        else:
            break
    return best


# ---------------------------------------------------------------------------
# seeded random instance generators


def random_point_set(rng: random.Random, dim, size, max_coord):
    """A random set of up to ``size`` distinct points in [0, max_coord]^dim."""
    size = min(size, (max_coord + 1) ** dim)
    points = set()
    while len(points) < size:
        points.add(tuple(rng.randint(0, max_coord) for _ in range(dim)))
    return sorted(points)


def random_down_set_points(rng: random.Random, dim, target):
    """A random down-set containing {0,1}^dim, built from corner closures.

    Implemented directly (union of coordinatewise closures) so it does not
    depend on the library's own generator.
    """
    target = min(target, 5**dim)  # corners live in [0,4]^dim
    pts = set(itertools.product((0, 1), repeat=dim))
    while len(pts) < target:
        corner = tuple(rng.randint(0, 4) for _ in range(dim))
        pts |= down_closure(corner)
    return sorted(pts)
