"""a-SafePrime and a-SophieGermainPrime machinery: the f(a,n) interval
boundaries, classification, interval counting, and the Mersenne scan.

A prime N = 2Kp+1 with p prime and a^(2K) < N is an a-SafePrime (the
factor p dominates N-1); a prime p is an a-SophieGermainPrime when some
valid K makes 2Kp+1 prime.  Primes in [f(a,n), f(a,n+1)) with
f(a,n) = a^(2n)/(2n) admit exactly the multipliers K = 1..n.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import mpmath
import numpy as np

from prothforge.config import MemoryBudgetError, memory_budget_bytes, thread_count
from prothforge.logreal import LogReal
from prothforge.numtheory import (
    is_probable_prime,
    lucas_lehmer,
    sieve_bitset,
    sieve_range,
)

# exact rationals for f(a,n) are materialized only up to this many bits
_EXACT_F_BITS = 1 << 22

# n is maximal in decompositions of interest; beyond this the scan would
# be astronomically far out of reach anyway
_MERSENNE_DEFAULT_BUDGET = 23209


def f_log_mpf(a: int, n: int) -> mpmath.mpf:
    """ln f(a,n) = 2n*ln(a) - ln(2n), to 40 significant digits."""
    if a < 2 or n < 1:
        raise ValueError(f"need a >= 2 and n >= 1, got a={a}, n={n}")
    with mpmath.workdps(40):
        return 2 * n * mpmath.log(a) - mpmath.log(2 * n)


@dataclass(frozen=True)
class FValue:
    """f(a,n) = a^(2n)/(2n), exactly when small enough, always in log form."""

    fraction: Fraction | None
    log: LogReal


def f_value(a: int, n: int) -> FValue:
    log = LogReal.from_log(f_log_mpf(a, n))
    if 2 * n * a.bit_length() <= _EXACT_F_BITS:
        return FValue(fraction=Fraction(a ** (2 * n), 2 * n), log=log)
    return FValue(fraction=None, log=log)


def ceil_f(a: int, n: int) -> int:
    """ceil(a^(2n)/(2n)) exactly; the lower endpoint of interval n."""
    power = a ** (2 * n)
    return -(-power // (2 * n))


def _f_cmp(a: int, n: int, p: int) -> int:
    """Sign of a^(2n) - 2n*p, exactly.

    f(a,n) <= p iff this is <= 0.  Huge operands are decided through
    40-digit logs first; the margin there is decisive unless the two
    sides are genuinely close, and an exact tie needs p | a^(2n), which
    for prime p > a is impossible.
    """
    rhs = 2 * n * p
    if a == 2:
        # a^(2n) = 1 << 2n: compare via a shift instead of materializing
        shifted = rhs >> (2 * n)
        if shifted >= 2:
            return -1
        if shifted == 0:
            return 1
        return 0 if rhs == (1 << (2 * n)) else -1
    bits = 2 * n * a.bit_length()
    if bits <= _EXACT_F_BITS or rhs.bit_length() < bits - 1:
        lhs = a ** (2 * n)
        return -1 if lhs < rhs else 0 if lhs == rhs else 1
    with mpmath.workdps(60):
        delta = 2 * n * mpmath.log(a) - mpmath.log(rhs)
        if abs(delta) > mpmath.mpf("1e-30"):
            return -1 if delta < 0 else 1
    lhs = a ** (2 * n)
    return -1 if lhs < rhs else 0 if lhs == rhs else 1


def interval_index(a: int, p: int) -> int:
    """The unique n >= 1 with f(a,n) <= p < f(a,n+1); 0 when p < f(a,1)."""
    if a < 2 or p < 2:
        raise ValueError(f"need a >= 2 and p >= 2, got a={a}, p={p}")
    if _f_cmp(a, 1, p) > 0:
        return 0
    # largest n with a^(2n) <= 2n*p; f grows ~a^2/2-fold per step, so
    # doubling then bisecting terminates in O(log n) exact comparisons
    hi = 1
    while _f_cmp(a, hi * 2, p) <= 0:
        hi *= 2
    lo = hi
    hi = hi * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _f_cmp(a, mid, p) <= 0:
            lo = mid
        else:
            hi = mid
    return lo


def max_valid_k(a: int, p: int) -> int:
    """Largest K >= 0 with a^(2K) < 2Kp + 1 (exact); 0 when none.

    For integer p this is the same predicate as the interval index:
    a^(2K) < 2Kp+1 iff a^(2K) <= 2Kp.
    """
    if a < 2:
        raise ValueError(f"need a >= 2, got {a}")
    if p < 2 or _f_cmp(a, 1, p) > 0:
        return 0
    return interval_index(a, p)


@dataclass(frozen=True)
class SGPRecord:
    p: int
    a: int
    k_max: int
    prime_ks: tuple[int, ...]

    @property
    def is_sgp(self) -> bool:
        return len(self.prime_ks) > 0


@dataclass(frozen=True)
class SafePrimeHit:
    N: int
    p: int
    K: int
    a: int


def classify_sgp(p: int, a: int = 2, oracle_rounds: int = 64) -> SGPRecord:
    """Tests 2Kp+1 for K = 1..max_valid_k against the primality oracle."""
    if not is_probable_prime(p, oracle_rounds):
        raise ValueError(f"p = {p} is not prime")
    k_max = max_valid_k(a, p)
    prime_ks = tuple(
        K for K in range(1, k_max + 1) if is_probable_prime(2 * K * p + 1, oracle_rounds)
    )
    return SGPRecord(p=p, a=a, k_max=k_max, prime_ks=prime_ks)


def is_a_safeprime(N: int, a: int = 2, oracle_rounds: int = 64) -> SafePrimeHit | None:
    """The smallest-K witness that N = 2Kp+1 is an a-SafePrime, or None."""
    if N < 5 or not is_probable_prime(N, oracle_rounds):
        return None
    K = 1
    while a ** (2 * K) < N:
        if (N - 1) % (2 * K) == 0:
            p = (N - 1) // (2 * K)
            if is_probable_prime(p, oracle_rounds):
                return SafePrimeHit(N=N, p=p, K=K, a=a)
        K += 1
    return None


@dataclass(frozen=True)
class IntervalCounts:
    a: int
    n: int
    primes: int
    sgp: int
    sp: int


_PREFILTER_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61)


def count_interval(a: int, n: int, oracle_rounds: int = 64) -> IntervalCounts:
    """Counts (#primes, #a-SGP, #a-SP pairs) over [ceil(f(a,n)), f(a,n+1)).

    Every prime in interval n admits exactly the multipliers K = 1..n, so
    the 2Kp+1 candidates are tested with a packed primality bitset when
    it fits the memory budget and with the probable-prime oracle
    otherwise.
    """
    if a < 2 or n < 1:
        raise ValueError(f"need a >= 2 and n >= 1, got a={a}, n={n}")
    lo, hi = ceil_f(a, n), ceil_f(a, n + 1)
    if hi >= 1 << 40:
        raise MemoryBudgetError(
            f"interval upper bound {hi} is beyond the 2^40 sieve ceiling"
        )
    primes = sieve_range(lo, hi)
    if len(primes) == 0:
        return IntervalCounts(a=a, n=n, primes=0, sgp=0, sp=0)

    candidate_max = 2 * n * int(primes[-1]) + 1
    sp = 0
    sgp_any = np.zeros(len(primes), dtype=bool)
    if candidate_max // 8 + 1 <= memory_budget_bytes():
        table = sieve_bitset(candidate_max)
        for K in range(1, n + 1):
            hits = table.test(2 * K * primes + 1)
            sp += int(np.count_nonzero(hits))
            sgp_any |= hits
    else:
        for K in range(1, n + 1):
            cands = 2 * K * primes + 1
            undecided = np.ones(len(cands), dtype=bool)
            for q in _PREFILTER_PRIMES:
                undecided &= cands % q != 0
            hits = np.zeros(len(cands), dtype=bool)
            for idx in np.flatnonzero(undecided):
                hits[idx] = is_probable_prime(int(cands[idx]), oracle_rounds)
            sp += int(np.count_nonzero(hits))
            sgp_any |= hits
    return IntervalCounts(
        a=a, n=n, primes=len(primes), sgp=int(np.count_nonzero(sgp_any)), sp=sp
    )


def _mersenne_row(q: int, a: int, oracle_rounds: int) -> tuple[int, list[int]] | None:
    if not lucas_lehmer(q):
        return None
    record = classify_sgp((1 << q) - 1, a, oracle_rounds)
    return q, [2 * K for K in record.prime_ks]


def mersenne_sgp_scan(
    max_exponent: int = _MERSENNE_DEFAULT_BUDGET,
    a: int = 2,
    oracle_rounds: int = 64,
) -> list[tuple[int, list[int]]]:
    """For each Mersenne prime 2^q - 1 with q <= max_exponent, the list of
    2K values for which 2K*(2^q - 1) + 1 is a probable prime (may be
    empty).  Ordered by q regardless of worker count.
    """
    if max_exponent < 2:
        raise ValueError(f"max_exponent must be >= 2, got {max_exponent}")
    exponents = [2] + [int(q) for q in sieve_range(3, max_exponent + 1)]
    workers = thread_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda q: _mersenne_row(q, a, oracle_rounds), exponents))
    else:
        rows = [_mersenne_row(q, a, oracle_rounds) for q in exponents]
    return [row for row in rows if row is not None]


def sample_consecutive_primes(start: int, count: int) -> list[int]:
    """The first `count` probable primes >= start, ascending."""
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    found: list[int] = []
    x = max(start, 2)
    if x <= 2:
        found.append(2)
        x = 3
    if x % 2 == 0:
        x += 1
    while len(found) < count:
        if is_probable_prime(x):
            found.append(x)
        x += 2
    return found[:count]
