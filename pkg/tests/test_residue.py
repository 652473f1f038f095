"""Unit tests for residue arithmetic: unit groups, the r -> r* twist,
coprime lifts, and the segment-permutation test."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from triangle_words import residue
from triangle_words.residue import (
    InvalidModulusError,
    InvalidSegmentError,
    NotCoprimeError,
    StarUndefinedError,
    UnitResidue,
    as_unit,
    crt_star,
    lift_coprime,
    segment_perm_check,
    unit_group,
)


class TestUnitResidue:
    def test_normalization(self):
        assert UnitResidue(6, 11).value == 5
        assert UnitResidue(6, -1).value == 5

    def test_rejects_non_unit(self):
        with pytest.raises(NotCoprimeError):
            UnitResidue(6, 3)

    def test_rejects_small_modulus(self):
        with pytest.raises(InvalidModulusError):
            UnitResidue(1, 1)

    def test_mul_and_inverse(self):
        r = UnitResidue(12, 5)
        assert (r * r).value == 1
        assert r.inverse() == r
        assert (r * r.inverse()).value == 1

    def test_neg(self):
        assert (-UnitResidue(12, 5)).value == 7

    def test_mixed_moduli_rejected(self):
        with pytest.raises(InvalidModulusError):
            UnitResidue(6, 5) * UnitResidue(12, 5)


class TestUnitGroup:
    def test_twelve(self):
        assert {u.value for u in unit_group(12)} == {1, 5, 7, 11}

    def test_two(self):
        assert {u.value for u in unit_group(2)} == {1}

    def test_42(self):
        g = unit_group(42)
        assert len(g) == 12
        vals = {u.value for u in g}
        assert 1 in vals and 41 in vals

    def test_bad_modulus(self):
        with pytest.raises(InvalidModulusError):
            unit_group(1)

    @given(st.integers(min_value=2, max_value=200))
    def test_order_is_totient(self, n):
        assert len(unit_group(n)) == sum(
            1 for v in range(1, n) if math.gcd(v, n) == 1
        )


# valid (k, m) pairs with gcd <= 2 at small scale
_STAR_PAIRS = [
    (k, m)
    for k in range(2, 13)
    for m in range(2, 13)
    if math.gcd(k, m) <= 2
]


class TestCrtStar:
    def test_example_3_4_5(self):
        assert crt_star(3, 4, 5).value == 11

    def test_example_2_3_1(self):
        assert crt_star(2, 3, 1).value == 5

    def test_gcd_two_succeeds(self):
        # gcd(4,6) = 2 is still within the defined range
        s = crt_star(4, 6, 1)
        assert s.value % 4 == 1 and s.value % 6 == 5

    def test_undefined_for_large_gcd(self):
        with pytest.raises(StarUndefinedError):
            crt_star(4, 8, 1)

    def test_congruences(self):
        for k, m in _STAR_PAIRS:
            lcm = math.lcm(k, m)
            for r in range(1, lcm + 1):
                if math.gcd(r, lcm) != 1:
                    continue
                s = crt_star(k, m, r)
                assert s.value % k == r % k
                assert s.value % m == (-r) % m

    def test_involution(self):
        for k, m in _STAR_PAIRS:
            lcm = math.lcm(k, m)
            for r in range(1, lcm + 1):
                if math.gcd(r, lcm) != 1:
                    continue
                assert crt_star(k, m, crt_star(k, m, r)).value == r % lcm

    def test_translate_of_identity_twist(self):
        for k, m in _STAR_PAIRS:
            lcm = math.lcm(k, m)
            one_star = crt_star(k, m, 1)
            for r in range(1, lcm + 1):
                if math.gcd(r, lcm) != 1:
                    continue
                assert crt_star(k, m, r) == one_star * as_unit(r, lcm)

    def test_negation_commutes(self):
        for k, m in _STAR_PAIRS:
            lcm = math.lcm(k, m)
            for r in range(1, lcm + 1):
                if math.gcd(r, lcm) != 1:
                    continue
                assert crt_star(k, m, (-r) % lcm) == -crt_star(k, m, r)


class TestLiftCoprime:
    def test_example_with_partial_divisibility(self):
        # q is the product of primes in S not dividing r: here only 7
        assert lift_coprime(3, 10, {3, 7}) == 73

    def test_empty_set(self):
        assert lift_coprime(3, 10, set()) == 13

    def test_not_coprime(self):
        with pytest.raises(NotCoprimeError):
            lift_coprime(2, 4, {3})

    @given(
        st.integers(min_value=1, max_value=1000),
        st.integers(min_value=2, max_value=100),
        st.sets(st.sampled_from([2, 3, 5, 7, 11, 13, 17]), max_size=5),
    )
    def test_avoids_primes_and_keeps_residue(self, r, n, primes):
        if math.gcd(r, n) != 1:
            return
        out = lift_coprime(r, n, primes)
        assert out > 0
        assert out % n == r % n
        for p in primes:
            assert out % p != 0


class TestSegmentPermCheck:
    def test_example_false(self):
        assert segment_perm_check(5, 3, 2) is False

    def test_identity_true(self):
        assert segment_perm_check(5, 1, 2) is True

    def test_example_m7(self):
        assert segment_perm_check(7, 6, 5) is False

    def test_c_out_of_range(self):
        with pytest.raises(InvalidSegmentError):
            segment_perm_check(5, 1, 4)
        with pytest.raises(InvalidSegmentError):
            segment_perm_check(5, 1, 0)

    def test_matches_naive_set_comparison(self):
        for m in range(3, 40):
            for r in range(1, m):
                if math.gcd(r, m) != 1:
                    continue
                for c in range(1, m - 1):
                    naive = set(range(1, c + 1)) == {
                        (r * i) % m for i in range(1, c + 1)
                    }
                    assert segment_perm_check(m, r, c) == naive


def test_as_unit_coerces_unit_residue():
    assert as_unit(UnitResidue(6, 5), 12).value == 5
    assert as_unit(17, 12).value == 5
