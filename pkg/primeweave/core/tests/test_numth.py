import unittest

import pytest
from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from .. import numth
from ..errors import NumberTheoryError
from .base import is_slow_test_hostile


class GcdTestCase(unittest.TestCase):

    def test_known_values(self):
        self.assertEqual(numth.gcd(1, 47), 1)
        self.assertEqual(numth.gcd(12, 8), 4)
        self.assertEqual(numth.gcd(7, 11), 1)
        self.assertEqual(numth.gcd(0, 5), 5)

    def test_both_zero(self):
        self.assertRaises(NumberTheoryError, numth.gcd, 0, 0)

    def test_rejects_non_integers(self):
        self.assertRaises(NumberTheoryError, numth.gcd, -4, 2)
        self.assertRaises(NumberTheoryError, numth.gcd, True, 2)
        self.assertRaises(NumberTheoryError, numth.gcd, 2.0, 2)

    def test_beyond_32_bits(self):
        """Python ints do not wrap."""
        big = 2 ** 40
        self.assertEqual(numth.gcd(big, big * 3), big)

    @settings(max_examples=1000)
    @given(st.integers(min_value=1, max_value=10 ** 9), st.integers(min_value=1, max_value=10 ** 9))
    def test_divides_both_and_is_greatest(self, a, b):
        d = numth.gcd(a, b)
        self.assertEqual(a % d, 0)
        self.assertEqual(b % d, 0)
        self.assertEqual(d, numth.gcd(b, a))
        # Whatever divides both divides d
        for common in (2, 3, 5, 7, 11):
            if a % common == 0 and b % common == 0:
                self.assertEqual(d % common, 0)

    @settings(max_examples=1000)
    @given(st.integers(min_value=0, max_value=2 ** 32))
    def test_consecutive_integers_are_coprime(self, a):
        self.assertEqual(numth.gcd(a, a + 1), 1)

    @settings(max_examples=1000)
    @given(st.integers(min_value=0, max_value=2 ** 31).map(lambda x: 2 * x + 1))
    def test_consecutive_odds_are_coprime(self, a):
        self.assertEqual(numth.gcd(a, a + 2), 1)


class IsPrimeTestCase(unittest.TestCase):

    def test_small(self):
        self.assertFalse(numth.is_prime(0))
        self.assertFalse(numth.is_prime(1))
        self.assertTrue(numth.is_prime(2))
        self.assertTrue(numth.is_prime(3))
        self.assertFalse(numth.is_prime(9))
        self.assertTrue(numth.is_prime(13))
        self.assertFalse(numth.is_prime(25))

    def test_32_bit_range(self):
        self.assertTrue(numth.is_prime(4294967291))
        # 3 * 5 * 17 * 257 * 65537
        self.assertFalse(numth.is_prime(4294967295))

    def test_rejects_negative(self):
        self.assertRaises(NumberTheoryError, numth.is_prime, -7)

    @settings(max_examples=1000)
    @given(st.integers(min_value=0, max_value=5000))
    def test_matches_divisor_count(self, n):
        divisors = sum(1 for d in range(1, n + 1) if n % d == 0)
        self.assertEqual(numth.is_prime(n), divisors == 2)


class LargestPrimeTestCase(unittest.TestCase):

    def test_weed_blocks(self):
        self.assertEqual(numth.largest_prime_in_range(3, 6), 5)
        self.assertEqual(numth.largest_prime_in_range(7, 14), 13)

    def test_no_prime(self):
        self.assertIsNone(numth.largest_prime_in_range(8, 10))

    def test_upper_bound_inclusive(self):
        self.assertEqual(numth.largest_prime_in_range(10, 13), 13)
        self.assertEqual(numth.largest_prime_in_range(12, 13), 13)

    def test_malformed_interval(self):
        self.assertRaises(NumberTheoryError, numth.largest_prime_in_range, 5, 5)
        self.assertRaises(NumberTheoryError, numth.largest_prime_in_range, 9, 4)
        self.assertRaises(NumberTheoryError, numth.largest_prime_in_range, 0, 5)

    def test_bertrand_at_powers_of_two(self):
        for i in range(2, 21):
            lo, hi = 2 ** i - 1, 2 ** (i + 1) - 2
            p = numth.largest_prime_in_range(lo, hi)
            self.assertIsNotNone(p, "No prime in ({}, {}]".format(lo, hi))
            self.assertTrue(lo < p <= hi)
            self.assertTrue(numth.is_prime(p))
            self.assertGreater(2 * p, hi)


class PillaiTestCase(unittest.TestCase):

    def test_pairs_never_qualify(self):
        for start in range(1, 200):
            self.assertFalse(numth.window_is_pillai(start, 2))

    def test_window_with_one(self):
        self.assertFalse(numth.window_is_pillai(1, 17))

    def test_known_seventeen_window(self):
        self.assertTrue(numth.window_is_pillai(2184, 17))

    def test_coprime_centers(self):
        self.assertEqual(numth.coprime_centers(1, 4), [1, 3])
        self.assertEqual(numth.coprime_centers(5, 4), [5, 7])
        self.assertEqual(numth.coprime_centers(2184, 17), [])

    def test_coprime_centers_agree_with_pillai(self):
        for start in range(1, 300):
            for m in (2, 5, 8, 17):
                self.assertEqual(numth.window_is_pillai(start, m), not numth.coprime_centers(start, m))

    def test_bad_arguments(self):
        self.assertRaises(NumberTheoryError, numth.window_is_pillai, 0, 17)
        self.assertRaises(NumberTheoryError, numth.window_is_pillai, 5, 1)
        self.assertRaises(NumberTheoryError, numth.find_pillai_run, 17, 0)

    def test_no_pair_run(self):
        self.assertIsNone(numth.find_pillai_run(2, 10 ** 5))

    def test_seventeen_is_found_and_minimal(self):
        run = numth.find_pillai_run(17, 10 ** 5)
        self.assertIsNotNone(run)
        self.assertEqual(run.length, 17)
        self.assertTrue(numth.window_is_pillai(run.start, 17))
        for start in range(1, run.start):
            self.assertFalse(numth.window_is_pillai(start, 17))

    def test_limit_below_first_window(self):
        run = numth.find_pillai_run(17, 10 ** 5)
        self.assertIsNone(numth.find_pillai_run(17, run.start - 1))

    @pytest.mark.skipif(is_slow_test_hostile(), reason="Scans 10**5 starts for fifteen window lengths")
    def test_no_run_below_seventeen(self):
        for m in range(2, 17):
            self.assertIsNone(numth.find_pillai_run(m, 10 ** 5), "Unexpected window of length {}".format(m))
