"""Exact integer arithmetic for the divisor-sum layer.

Everything here is built on a smallest-prime-factor (spf) sieve:
Omega(n) (prime factors with multiplicity), the Liouville sign
lambda(n) = (-1)^Omega(n), divisor enumeration, and the alternating
divisor sum

    beta(n) = sum over m | n of (-1)^(n/m + 1) * (-1)^Omega(m)

together with its closed form: 1 if n is a perfect square, -2 if n is
twice a perfect square, 0 otherwise.  beta_bruteforce evaluates the sum
term by term and is the oracle; beta_closed needs no factorization and
works for arbitrary n.

All query functions are pure given an immutable sieve, so a sieve may
be built once and shared read-only across threads.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import BoundsError

DEFAULT_SIEVE_LIMIT = 10_000_000
SIEVE_HARD_CAP = 100_000_000


@dataclass(frozen=True)
class FactorSieve:
    """Smallest-prime-factor table for 2..limit.

    spf[n] is the least prime dividing n (so spf[p] == p exactly for
    primes); indices 0 and 1 are unused and hold 0.
    """

    limit: int
    spf: np.ndarray  # int32, length limit + 1


def build_sieve(limit: int) -> FactorSieve:
    """Build the smallest-prime-factor table up to limit (inclusive).

    Classic O(n log log n) sieve: every composite c <= limit has a prime
    factor p <= sqrt(c), so marking multiples of each prime p starting
    at p*p labels all composites; what is left unmarked is prime.
    """
    limit = int(limit)
    if limit < 2:
        raise BoundsError(f"sieve limit must be >= 2, got {limit}")
    if limit > SIEVE_HARD_CAP:
        raise BoundsError(
            f"sieve limit {limit} exceeds the hard cap {SIEVE_HARD_CAP}"
        )
    spf = np.zeros(limit + 1, dtype=np.int32)
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
    unmarked = np.flatnonzero(spf[2:] == 0).astype(np.int32) + 2
    spf[unmarked] = unmarked
    spf.setflags(write=False)
    return FactorSieve(limit, spf)


def _check_index(sieve: FactorSieve, n: int) -> int:
    n = int(n)
    if not 1 <= n <= sieve.limit:
        raise BoundsError(f"n={n} outside sieve range [1, {sieve.limit}]")
    return n


def factorize(sieve: FactorSieve, n: int) -> list[tuple[int, int]]:
    """(prime, exponent) pairs of n in ascending prime order."""
    n = _check_index(sieve, n)
    spf = sieve.spf
    out = []
    while n > 1:
        p = int(spf[n])
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        out.append((p, e))
    return out


def big_omega(sieve: FactorSieve, n: int) -> int:
    """Omega(n): number of prime factors counted with multiplicity."""
    n = _check_index(sieve, n)
    spf = sieve.spf
    count = 0
    while n > 1:
        n //= int(spf[n])
        count += 1
    return count


def liouville(sieve: FactorSieve, n: int) -> int:
    """Liouville sign lambda(n) = (-1)^Omega(n), in {-1, +1}."""
    return -1 if big_omega(sieve, n) & 1 else 1


def divisors(sieve: FactorSieve, n: int) -> list[int]:
    """All positive divisors of n, ascending.

    Enumerated from the prime-power exponent vectors rather than by
    trial division, then sorted for a deterministic order.
    """
    divs = [1]
    for p, e in factorize(sieve, n):
        pk = 1
        more = []
        for _ in range(e):
            pk *= p
            more.extend(d * pk for d in divs)
        divs.extend(more)
    divs.sort()
    return divs


def beta_bruteforce(sieve: FactorSieve, n: int) -> int:
    """The alternating divisor sum, evaluated term by term.

    Exact integer arithmetic: for each divisor m of n the term is
    (-1)^(n/m + 1) * lambda(m).
    """
    n = _check_index(sieve, n)
    total = 0
    for m in divisors(sieve, n):
        sign = 1 if (n // m) % 2 else -1
        total += sign * liouville(sieve, m)
    return total


def isqrt(n: int) -> int:
    """Floor square root via exact integer iteration.

    Returns r with r*r <= n < (r+1)*(r+1).  Never touches floating
    point, so it stays exact past 2**53 where float sqrt misclassifies.
    """
    return math.isqrt(n)


@dataclass(frozen=True)
class BetaClass:
    """Which of the three closed-form cases n falls in.

    kind is one of "square", "twice_square", "neither"; root is the
    integer m with n == m*m or n == 2*m*m, or None for "neither".
    The cases are mutually exclusive: sqrt(2) is irrational, so no n is
    both a square and twice a square.
    """

    kind: str
    root: int | None = None

    def __str__(self) -> str:
        if self.kind == "square":
            return f"Square({self.root})"
        if self.kind == "twice_square":
            return f"TwiceSquare({self.root})"
        return "Neither"

    @property
    def beta(self) -> int:
        return {"square": 1, "twice_square": -2, "neither": 0}[self.kind]


def classify(n: int) -> BetaClass:
    """Classify n as m^2, 2*m^2, or neither, using exact isqrt checks."""
    n = int(n)
    if n < 1:
        raise BoundsError(f"n must be >= 1, got {n}")
    r = math.isqrt(n)
    if r * r == n:
        return BetaClass("square", r)
    if n % 2 == 0:
        half = n // 2
        r = math.isqrt(half)
        if r * r == half:
            return BetaClass("twice_square", r)
    return BetaClass("neither")


def beta_closed(n: int) -> int:
    """Closed form of the divisor sum: 1 / -2 / 0 by squareness class.

    O(1) and valid for any n >= 1, with no sieve needed.
    """
    return classify(n).beta


# ----------------------------------------------------------------------
# Bulk tables.  The audit sweeps query beta for every n up to 10^6, so
# the per-n API above is complemented by vectorized whole-range tables.
# ----------------------------------------------------------------------


def primes(sieve: FactorSieve, limit: int | None = None) -> np.ndarray:
    """All primes <= limit (default: the sieve limit) as an array."""
    limit = sieve.limit if limit is None else int(limit)
    _check_index(sieve, max(limit, 1))
    head = sieve.spf[: limit + 1]
    idx = np.arange(limit + 1, dtype=np.int32)
    p = np.flatnonzero(head == idx)
    return p[p >= 2]


def omega_table(sieve: FactorSieve, limit: int | None = None) -> np.ndarray:
    """Omega(n) for all n <= limit, via one pass per prime power.

    Each prime power q = p^k adds 1 to every multiple of q, which sums
    to the exponent of p in n; int8 suffices (Omega < 27 below 10^8).
    """
    limit = sieve.limit if limit is None else int(limit)
    _check_index(sieve, max(limit, 1))
    om = np.zeros(limit + 1, dtype=np.int8)
    for p in primes(sieve, limit):
        q = int(p)
        while q <= limit:
            om[q::q] += 1
            q *= int(p)
    return om


def liouville_table(sieve: FactorSieve, limit: int | None = None) -> np.ndarray:
    """lambda(n) for all n <= limit (index 0 unused, set to +1)."""
    om = omega_table(sieve, limit)
    return np.where(om & 1, -1, 1).astype(np.int8)


def beta_bruteforce_table(sieve: FactorSieve, limit: int | None = None) -> np.ndarray:
    """The divisor sum for every n <= limit, accumulated divisor-first.

    Same arithmetic as beta_bruteforce, reorganized: each m <= limit
    contributes lambda(m) to its odd multiples m, 3m, 5m, ... and
    -lambda(m) to its even multiples 2m, 4m, ... (the cofactor n/m
    fixes the sign).  No closed-form shortcut is involved, so the table
    remains an independent check of beta_closed.
    """
    limit = sieve.limit if limit is None else int(limit)
    _check_index(sieve, max(limit, 1))
    lam = liouville_table(sieve, limit).astype(np.int32)
    acc = np.zeros(limit + 1, dtype=np.int32)
    for m in range(1, limit // 2 + 1):
        lm = lam[m]
        acc[m :: 2 * m] += lm
        acc[2 * m :: 2 * m] -= lm
    # for m > limit/2 the only multiple in range is n = m (cofactor 1)
    acc[limit // 2 + 1 :] += lam[limit // 2 + 1 :]
    acc[0] = 0
    return acc


def beta_closed_table(limit: int) -> np.ndarray:
    """Closed-form beta for every n <= limit (no sieve required)."""
    limit = int(limit)
    if limit < 1:
        raise BoundsError(f"limit must be >= 1, got {limit}")
    out = np.zeros(limit + 1, dtype=np.int32)
    r = math.isqrt(limit)
    out[np.arange(1, r + 1, dtype=np.int64) ** 2] = 1
    r2 = math.isqrt(limit // 2)
    if r2 >= 1:
        out[2 * np.arange(1, r2 + 1, dtype=np.int64) ** 2] = -2
    return out
