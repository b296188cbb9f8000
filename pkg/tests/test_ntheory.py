import numpy as np
import pytest

from zetalab.errors import BoundsError
from zetalab.ntheory import (
    BetaClass,
    beta_bruteforce,
    beta_bruteforce_table,
    beta_closed,
    beta_closed_table,
    big_omega,
    build_sieve,
    classify,
    divisors,
    factorize,
    isqrt,
    liouville,
    liouville_table,
    omega_table,
    primes,
)


# trial-division oracles, independent of the sieve


def trial_omega(n: int) -> int:
    count = 0
    p = 2
    while p * p <= n:
        while n % p == 0:
            count += 1
            n //= p
        p += 1
    return count + (1 if n > 1 else 0)


def trial_divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def beta_divisor_scan(n: int) -> int:
    total = 0
    for m in trial_divisors(n):
        total += (-1) ** ((n // m) + 1) * (-1) ** trial_omega(m)
    return total


class TestSieve:
    def test_small_examples(self):
        sv = build_sieve(10)
        assert sv.spf[4] == 2 and sv.spf[9] == 3 and sv.spf[7] == 7

    def test_smallest_case(self):
        assert build_sieve(2).spf[2] == 2

    def test_limit_30(self):
        sv = build_sieve(30)
        assert sv.spf[15] == 3 and sv.spf[25] == 5

    def test_spf_is_smallest_prime_factor(self, sieve_small):
        for n in range(2, 3000):
            p = int(sieve_small.spf[n])
            assert n % p == 0
            assert all(n % q for q in range(2, p))

    def test_primes_marked_as_themselves(self, sieve_small):
        for n in range(2, 2000):
            is_prime = trial_omega(n) == 1
            assert (int(sieve_small.spf[n]) == n) == is_prime

    def test_factorization_reconstructs(self, sieve_small):
        for n in range(1, 5000):
            prod = 1
            for p, e in factorize(sieve_small, n):
                prod *= p**e
            assert prod == n

    def test_bounds(self):
        with pytest.raises(BoundsError):
            build_sieve(1)
        with pytest.raises(BoundsError):
            build_sieve(10**9)


class TestOmegaLiouville:
    def test_examples(self, sieve_small):
        assert big_omega(sieve_small, 1) == 0
        assert big_omega(sieve_small, 12) == 3
        assert big_omega(sieve_small, 1024) == 10

    def test_against_trial_division(self, sieve_small):
        for n in range(1, 5000):
            assert big_omega(sieve_small, n) == trial_omega(n)

    def test_completely_additive(self, sieve_small):
        for a in range(1, 120):
            for b in range(1, 120):
                assert big_omega(sieve_small, a * b) == big_omega(
                    sieve_small, a
                ) + big_omega(sieve_small, b)

    def test_liouville_examples(self, sieve_small):
        assert liouville(sieve_small, 1) == 1
        assert liouville(sieve_small, 2) == -1
        assert liouville(sieve_small, 12) == -1

    def test_liouville_multiplicative(self, sieve_small):
        for a in range(1, 100):
            for b in range(1, 100):
                assert liouville(sieve_small, a * b) == liouville(
                    sieve_small, a
                ) * liouville(sieve_small, b)

    def test_out_of_range(self, sieve_small):
        with pytest.raises(BoundsError):
            big_omega(sieve_small, 0)
        with pytest.raises(BoundsError):
            big_omega(sieve_small, sieve_small.limit + 1)


class TestDivisors:
    def test_examples(self, sieve_small):
        assert divisors(sieve_small, 1) == [1]
        assert divisors(sieve_small, 6) == [1, 2, 3, 6]
        assert divisors(sieve_small, 12) == [1, 2, 3, 4, 6, 12]

    def test_against_scan(self, sieve_small):
        for n in range(1, 2000):
            assert divisors(sieve_small, n) == trial_divisors(n)

    def test_count_matches_exponents(self, sieve_small):
        for n in range(1, 5000):
            tau = 1
            for _, e in factorize(sieve_small, n):
                tau *= e + 1
            assert len(divisors(sieve_small, n)) == tau


class TestBeta:
    def test_examples(self, sieve_small):
        assert beta_bruteforce(sieve_small, 1) == 1
        assert beta_bruteforce(sieve_small, 2) == -2
        assert beta_bruteforce(sieve_small, 6) == 0
        assert beta_bruteforce(sieve_small, 9) == 1  # divisors 1,3,9: +1 -1 +1

    def test_against_divisor_scan(self, sieve_small):
        for n in range(1, 2000):
            assert beta_bruteforce(sieve_small, n) == beta_divisor_scan(n)

    def test_matches_closed_form(self, sieve_small):
        for n in range(1, 20_001):
            assert beta_bruteforce(sieve_small, n) == beta_closed(n)

    def test_odd_prime_power_values(self, sieve_small):
        for p in (3, 5, 7, 11, 13):
            a = 1
            q = p
            while q <= sieve_small.limit:
                expected = 1 if a % 2 == 0 else 0
                assert beta_bruteforce(sieve_small, q) == expected
                a += 1
                q *= p

    def test_multiplicative_step(self, sieve_small):
        # odd prime power times coprime odd m, both sides brute force
        for p, a in [(3, 1), (3, 2), (5, 1), (5, 2), (7, 1), (11, 1)]:
            q = p**a
            for m in range(1, sieve_small.limit // q + 1, 2):
                if m % p == 0:
                    continue
                assert beta_bruteforce(sieve_small, q * m) == beta_bruteforce(
                    sieve_small, q
                ) * beta_bruteforce(sieve_small, m)


class TestIsqrt:
    def test_examples(self):
        assert isqrt(0) == 0
        assert isqrt(15) == 3
        assert isqrt(10**16) == 10**8

    def test_floor_property(self):
        for n in range(0, 10_000):
            r = isqrt(n)
            assert r * r <= n < (r + 1) * (r + 1)

    def test_exact_past_float_precision(self):
        # 2^53 + 1 is where float sqrt starts rounding
        big = (2**26 + 1) ** 2
        assert isqrt(big) == 2**26 + 1
        assert isqrt(big - 1) == 2**26

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            isqrt(-1)


class TestClassify:
    def test_examples(self):
        assert classify(1) == BetaClass("square", 1)
        assert classify(50) == BetaClass("twice_square", 5)
        assert classify(12) == BetaClass("neither")

    def test_partition(self):
        for n in range(1, 10_000):
            c = classify(n)
            is_sq = isqrt(n) ** 2 == n
            half = n // 2
            is_tw = n % 2 == 0 and isqrt(half) ** 2 == half
            assert not (is_sq and is_tw)  # sqrt(2) irrational
            if is_sq:
                assert c.kind == "square" and c.root == isqrt(n)
            elif is_tw:
                assert c.kind == "twice_square" and 2 * c.root**2 == n
            else:
                assert c.kind == "neither" and c.root is None

    def test_str(self):
        assert str(classify(50)) == "TwiceSquare(5)"
        assert str(classify(16)) == "Square(4)"
        assert str(classify(7)) == "Neither"

    def test_domain(self):
        with pytest.raises(BoundsError):
            classify(0)


class TestBetaClosed:
    def test_examples(self):
        assert beta_closed(16) == 1
        assert beta_closed(8) == -2
        assert beta_closed(7) == 0

    def test_closed_table(self):
        table = beta_closed_table(5000)
        for n in range(1, 5001):
            assert int(table[n]) == beta_closed(n)


class TestTables:
    def test_primes(self, sieve_small):
        p = primes(sieve_small, 100)
        assert list(p) == [
            2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
            53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
        ]

    def test_omega_table(self, sieve_small):
        om = omega_table(sieve_small, 5000)
        for n in range(1, 5001):
            assert int(om[n]) == big_omega(sieve_small, n)

    def test_liouville_table(self, sieve_small):
        lam = liouville_table(sieve_small, 5000)
        for n in range(1, 5001):
            assert int(lam[n]) == liouville(sieve_small, n)

    def test_bruteforce_table_matches_per_n(self, sieve_small):
        table = beta_bruteforce_table(sieve_small, 3000)
        for n in range(1, 3001):
            assert int(table[n]) == beta_bruteforce(sieve_small, n)

    def test_bruteforce_table_full_range(self, sieve_small):
        table = beta_bruteforce_table(sieve_small)
        closed = beta_closed_table(sieve_small.limit)
        assert np.array_equal(table[1:], closed[1:])
