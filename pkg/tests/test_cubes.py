"""Tests for the parallelepiped (affine cube) dimension search."""

import itertools
import random

import pytest

from helpers import (
    brute_cube_dimension,
    brute_has_cube,
    fraction_rank,
    random_point_set,
)
from sumsetlab import (
    CubeWitness,
    LatticeSet,
    affine_rank,
    box,
    cube_dimension,
    find_cube,
    unit_cube,
    validate_witness,
)


def _perm_set(d):
    return LatticeSet(list(itertools.permutations(range(1, d + 1))))


# ---------------------------------------------------------------------------
# witness validation


class TestValidateWitness:
    def test_valid_cube_witness(self):
        a = unit_cube(3)
        w = CubeWitness((0, 0, 0), ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
        assert validate_witness(a, w)

    def test_missing_vertex_rejected(self):
        a = LatticeSet([(0, 0), (1, 0), (0, 1)])  # no (1,1)
        w = CubeWitness((0, 0), ((1, 0), (0, 1)))
        assert not validate_witness(a, w)

    def test_dependent_generators_rejected(self):
        a = LatticeSet([(i,) + (0,) for i in range(7)])
        w = CubeWitness((0, 0), ((1, 0), (2, 0)))
        assert not validate_witness(a, w)

    def test_vertices_enumeration(self):
        w = CubeWitness((1, 1), ((1, 0), (0, 2)))
        assert set(w.vertices()) == {(1, 1), (2, 1), (1, 3), (2, 3)}
        assert w.k == 2


# ---------------------------------------------------------------------------
# find_cube


class TestFindCube:
    def test_cube_contains_itself(self):
        w = find_cube(unit_cube(3), 3)
        assert w is not None and w.k == 3
        assert validate_witness(unit_cube(3), w)

    def test_too_few_points(self):
        a = LatticeSet([(0, 0), (1, 0), (0, 1)])
        assert find_cube(a, 2) is None

    def test_permutations_of_four_symbols_contain_a_square(self):
        a = _perm_set(4)
        w = find_cube(a, 2)
        assert w is not None
        assert validate_witness(a, w)

    def test_box_with_long_axis(self):
        a = box((2, 2, 5))
        w = find_cube(a, 3)
        assert w is not None and validate_witness(a, w)
        assert find_cube(a, 4) is None  # ambient dimension caps k

    def test_monotone_in_k(self):
        rng = random.Random(42)
        for _ in range(30):
            a = LatticeSet(random_point_set(rng, 3, rng.randint(4, 16), 2))
            top = None
            for k in range(3, 0, -1):
                if find_cube(a, k) is not None:
                    top = k
                    break
            if top is not None:
                for k in range(1, top + 1):
                    w = find_cube(a, k)
                    assert w is not None and validate_witness(a, w)


# ---------------------------------------------------------------------------
# cube_dimension


class TestCubeDimension:
    def test_one_dimensional_progression(self):
        a = LatticeSet([(x,) for x in range(4)])
        result = cube_dimension(a)
        assert result.dimension == 1
        assert result.certified

    def test_unit_cubes(self):
        for d in range(1, 5):
            result = cube_dimension(unit_cube(d))
            assert result.dimension == d, d
            assert validate_witness(unit_cube(d), result.witness)

    def test_box_mixed(self):
        a = box((2, 2, 5))
        result = cube_dimension(a)
        assert result.dimension == 3
        assert result.certified

    def test_two_points(self):
        result = cube_dimension(LatticeSet([(0, 0), (3, 1)]))
        assert result.dimension == 1

    def test_rejects_singleton(self):
        with pytest.raises(ValueError):
            cube_dimension(LatticeSet([(5, 5)]))

    def test_agrees_with_brute_force(self):
        rng = random.Random(1337)
        for _ in range(60):
            d = rng.randint(1, 3)
            a = LatticeSet(random_point_set(rng, d, rng.randint(2, 14), 2))
            result = cube_dimension(a)
            assert result.dimension == brute_cube_dimension(a.points), sorted(
                a.points
            )
            if result.witness is not None:
                assert validate_witness(a, result.witness)

    def test_translation_and_reflection_invariance(self):
        rng = random.Random(2718)
        for _ in range(25):
            a = LatticeSet(random_point_set(rng, 2, rng.randint(2, 12), 3))
            base = cube_dimension(a).dimension
            shift = tuple(rng.randint(-5, 5) for _ in range(2))
            translated = LatticeSet([
                tuple(c + s for c, s in zip(p, shift)) for p in a.points
            ])
            reflected = LatticeSet([tuple(-c for c in p) for p in a.points])
            assert cube_dimension(translated).dimension == base
            assert cube_dimension(reflected).dimension == base

    def test_k_max_cap(self):
        result = cube_dimension(unit_cube(4), k_max=2)
        assert result.dimension == 2
        assert validate_witness(unit_cube(4), result.witness)

    def test_budget_exhaustion_reports_lower_bound(self):
        a = box((3, 3, 3, 3, 3))
        result = cube_dimension(a, budget_ms=0.001)
        assert not result.certified
        assert 0 <= result.dimension <= 5
        if result.witness is not None:
            assert validate_witness(a, result.witness)


# ---------------------------------------------------------------------------
# affine rank


class TestAffineRank:
    def test_examples(self):
        assert affine_rank(LatticeSet([(0, 0), (1, 1), (2, 2)])) == 1
        assert affine_rank(unit_cube(3)) == 3
        assert affine_rank(LatticeSet([(7, 7)])) == 0
        assert affine_rank(_perm_set(4)) == 3  # points lie on a hyperplane

    def test_agrees_with_fraction_oracle(self):
        rng = random.Random(4004)
        for _ in range(60):
            d = rng.randint(1, 4)
            pts = random_point_set(rng, d, rng.randint(1, 10), 4)
            base = pts[0]
            diffs = [tuple(c - b for c, b in zip(p, base)) for p in pts[1:]]
            expected = fraction_rank(diffs) if diffs else 0
            assert affine_rank(LatticeSet(pts)) == expected


# ---------------------------------------------------------------------------
# oracle self-check (guards the test suite itself)


def test_brute_oracle_sanity():
    assert brute_has_cube(unit_cube(2).points, 2)
    assert not brute_has_cube([(0, 0), (1, 0), (0, 1)], 2)
    assert brute_cube_dimension(unit_cube(3).points) == 3
