"""Tests for exact integer/rational arithmetic primitives."""

import random
from decimal import Decimal, getcontext
from fractions import Fraction

import pytest

from helpers import fraction_rank
from sumsetlab import (
    compare_root_sum,
    format_rational,
    integer_rank,
    is_perfect_power,
    nth_root_floor,
    parse_rational,
)


# ---------------------------------------------------------------------------
# integer roots


class TestNthRootFloor:
    def test_known_values(self):
        assert nth_root_floor(27, 3) == 3
        assert nth_root_floor(26, 3) == 2
        assert nth_root_floor(28, 3) == 3
        assert nth_root_floor(0, 5) == 0
        assert nth_root_floor(1, 7) == 1
        assert nth_root_floor(10**30, 2) == 10**15

    def test_defining_property_random(self):
        rng = random.Random(20240)
        for _ in range(300):
            n = rng.randint(0, 10 ** rng.randint(1, 24))
            r = rng.randint(1, 8)
            root = nth_root_floor(n, r)
            assert root**r <= n < (root + 1) ** r, (n, r, root)

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            nth_root_floor(-1, 2)
        with pytest.raises(ValueError):
            nth_root_floor(4, 0)


class TestIsPerfectPower:
    def test_exact_powers(self):
        assert is_perfect_power(64, 3)
        assert is_perfect_power(64, 2)
        assert not is_perfect_power(63, 2)
        assert is_perfect_power(1, 9)

    def test_agrees_with_root_floor(self):
        rng = random.Random(7)
        for _ in range(200):
            n = rng.randint(0, 10**12)
            r = rng.randint(1, 6)
            assert is_perfect_power(n, r) == (nth_root_floor(n, r) ** r == n)


# ---------------------------------------------------------------------------
# exact comparison of a d-th root against a sum of d-th roots


class TestCompareRootSum:
    def test_equality_cases(self):
        # 9^(1/2) = 4^(1/2) + 1^(1/2)
        assert compare_root_sum(9, [4, 1], 2) == 0
        # 2^d ^ (1/d) = 1 + 1
        for d in range(1, 6):
            assert compare_root_sum(2**d, [1, 1], d) == 0

    def test_strict_cases(self):
        assert compare_root_sum(10, [4, 1], 2) == 1
        assert compare_root_sum(8, [4, 1], 2) == -1
        assert compare_root_sum(3**3, [8, 1], 3) == 0  # 3 = 2 + 1

    def test_agrees_with_high_precision_decimal(self):
        getcontext().prec = 60
        rng = random.Random(991)
        for _ in range(250):
            d = rng.randint(1, 5)
            total = rng.randint(1, 10**6)
            parts = [rng.randint(1, 10**6) for _ in range(rng.randint(1, 3))]
            lhs = Decimal(total) ** (Decimal(1) / d)
            rhs = sum(Decimal(p) ** (Decimal(1) / d) for p in parts)
            diff = lhs - rhs
            if abs(diff) < Decimal("1e-40"):
                expected = 0
            else:
                expected = 1 if diff > 0 else -1
            assert compare_root_sum(total, parts, d) == expected, (total, parts, d)


# ---------------------------------------------------------------------------
# integer matrix rank


class TestIntegerRank:
    def test_small_fixed_matrices(self):
        assert integer_rank([[1, 0], [0, 1]]) == 2
        assert integer_rank([[0, 0], [0, 0]]) == 0
        assert integer_rank([[1, 2], [2, 4]]) == 1
        assert integer_rank([[2, 0, 0], [0, 3, 0], [2, 3, 0]]) == 2

    def test_agrees_with_fraction_elimination(self):
        rng = random.Random(555)
        for _ in range(200):
            rows = rng.randint(1, 5)
            cols = rng.randint(1, 5)
            matrix = [
                [rng.randint(-6, 6) for _ in range(cols)] for _ in range(rows)
            ]
            assert integer_rank(matrix) == fraction_rank(matrix), matrix


# ---------------------------------------------------------------------------
# rational formatting


class TestRationalText:
    def test_format(self):
        assert format_rational(Fraction(81, 8)) == "81/8"
        assert format_rational(Fraction(15)) == "15"
        assert format_rational(Fraction(-3, 2)) == "-3/2"
        assert format_rational(7) == "7"

    def test_parse(self):
        assert parse_rational("81/8") == Fraction(81, 8)
        assert parse_rational("-3/2") == Fraction(-3, 2)
        assert parse_rational("15") == Fraction(15)

    def test_round_trip_random(self):
        rng = random.Random(31)
        for _ in range(200):
            q = Fraction(rng.randint(-10**9, 10**9), rng.randint(1, 10**6))
            assert parse_rational(format_rational(q)) == q

    def test_parse_rejects_garbage(self):
        for bad in ("", "1/0", "a/b", "1.5", "2/3/4"):
            with pytest.raises(ValueError):
                parse_rational(bad)
