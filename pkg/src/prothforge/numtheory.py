"""Arbitrary-precision integer utilities: modular exponentiation, sieving,
probable-prime testing, integer roots, and multiplicative orders."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from prothforge.config import MemoryBudgetError, memory_budget_bytes, prng_seed

# Strong-probable-prime tests to these bases are conclusive for every
# n below 3,317,044,064,679,887,385,961,981 (Sorenson-Webster).
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981

_TRIAL_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61,
    67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137,
    139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199,
)


def modpow(base: int, exponent: int, modulus: int) -> int:
    """base**exponent mod modulus, in O(log exponent) multiplications."""
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    if exponent < 0:
        raise ValueError(f"exponent must be >= 0, got {exponent}")
    return pow(base, exponent, modulus)


def gcd(x: int, y: int) -> int:
    """Greatest common divisor; gcd(0, 0) = 0 by convention."""
    return math.gcd(x, y)


def _strong_probable_prime(n: int, a: int) -> bool:
    a %= n
    if a == 0:
        return True
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_probable_prime(n: int, rounds: int = 64, rng: random.Random | None = None) -> bool:
    """Strong probable-prime test; never returns False for a prime.

    Exact for n < 3.3e24 via a fixed deterministic base set.  Above that
    limit, trial division is followed by `rounds` random-base strong
    tests; bases are derived from the configured seed and from n itself,
    so results do not depend on call order.
    """
    if rounds < 1:
        raise ValueError(f"rounds must be >= 1, got {rounds}")
    if n < 2:
        return False
    for p in _TRIAL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < _DETERMINISTIC_LIMIT:
        return all(_strong_probable_prime(n, a) for a in _DETERMINISTIC_BASES)
    if rng is None:
        rng = random.Random(f"{prng_seed()}:spp:{n}")
    return all(
        _strong_probable_prime(n, rng.randrange(2, n - 1)) for _ in range(rounds)
    )


def _simple_sieve(limit: int) -> np.ndarray:
    """Primes <= limit as an int64 array (plain Eratosthenes, small limits)."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for q in range(2, math.isqrt(limit) + 1):
        if flags[q]:
            flags[q * q :: q] = False
    return np.flatnonzero(flags).astype(np.int64)


def sieve_range(lo: int, hi: int) -> np.ndarray:
    """Primes p with lo <= p < hi, via a segmented sieve.

    Segment size respects the configured memory budget; the base primes
    up to sqrt(hi) are always materialized (hi <= 2^40 keeps that small).
    """
    lo = max(lo, 2)
    if hi <= lo:
        return np.empty(0, dtype=np.int64)
    budget = memory_budget_bytes()
    root = math.isqrt(hi - 1)
    if root + 1 > budget:
        raise MemoryBudgetError(
            f"sieving to {hi} needs base primes to {root}, beyond the memory budget"
        )
    base = _simple_sieve(root)
    segment = min(hi - lo, max(budget // 2, 1 << 16))
    out = []
    for start in range(lo, hi, segment):
        end = min(start + segment, hi)
        flags = np.ones(end - start, dtype=bool)
        for q in base:
            q = int(q)
            first = max(q * q, (start + q - 1) // q * q)
            if first < end:
                flags[first - start :: q] = False
        out.append(np.flatnonzero(flags).astype(np.int64) + start)
    return np.concatenate(out) if len(out) > 1 else out[0]


@dataclass(frozen=True)
class PrimeSieve:
    """Exact list of primes <= limit, increasing."""

    limit: int
    primes: np.ndarray

    def __contains__(self, value: int) -> bool:
        idx = int(np.searchsorted(self.primes, value))
        return idx < len(self.primes) and int(self.primes[idx]) == value


def sieve(limit: int) -> PrimeSieve:
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    return PrimeSieve(limit=limit, primes=sieve_range(2, limit + 1))


@dataclass(frozen=True)
class PrimeBitset:
    """Primality lookup table: bit (i & 7) of bits[i >> 3] is set iff i is prime."""

    limit: int
    bits: np.ndarray

    def test(self, values: np.ndarray) -> np.ndarray:
        """Vectorized membership test for 0 <= values <= limit."""
        v = np.asarray(values, dtype=np.int64)
        return (self.bits[v >> 3] >> (v & 7).astype(np.uint8)) & 1 == 1

    def test_one(self, value: int) -> bool:
        return bool((int(self.bits[value >> 3]) >> (value & 7)) & 1)


def sieve_bitset(limit: int) -> PrimeBitset:
    """Bit-packed primality table up to limit (1 bit per integer)."""
    nbytes = limit // 8 + 1
    if nbytes > memory_budget_bytes():
        raise MemoryBudgetError(
            f"bitset to {limit} needs {nbytes} bytes, beyond the memory budget"
        )
    bits = np.zeros(nbytes, dtype=np.uint8)
    base = _simple_sieve(math.isqrt(limit))
    segment = 1 << 24
    for start in range(0, limit + 1, segment):
        end = min(start + segment, limit + 1)
        flags = np.ones(end - start, dtype=bool)
        for q in base:
            q = int(q)
            first = max(q * q, (start + q - 1) // q * q)
            if first < end:
                flags[first - start :: q] = False
        if start == 0:
            flags[:2] = False
        packed = np.packbits(flags, bitorder="little")
        bits[start >> 3 : (start >> 3) + len(packed)] |= packed
    return PrimeBitset(limit=limit, bits=bits)


def integer_root(n: int, k: int) -> int:
    """floor(n ** (1/k)), exact: result**k <= n < (result+1)**k."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if n == 0:
        return 0
    if k == 1:
        return n
    if k == 2:
        return math.isqrt(n)
    r = 1 << -(-n.bit_length() // k)
    while True:
        nr = ((k - 1) * r + n // r ** (k - 1)) // k
        if nr >= r:
            break
        r = nr
    while r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


def is_perfect_power_eq(n: int, k: int) -> int | None:
    """Returns H if n = H**k exactly, else None."""
    r = integer_root(n, k)
    return r if r**k == n else None


def _factorize(n: int) -> dict[int, int]:
    """Trial-division factorization; intended for n <= 1e7."""
    factors: dict[int, int] = {}
    for q in (2, 3):
        while n % q == 0:
            factors[q] = factors.get(q, 0) + 1
            n //= q
    q = 5
    while q * q <= n:
        for step in (q, q + 2):
            while n % step == 0:
                factors[step] = factors.get(step, 0) + 1
                n //= step
        q += 6
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def _carmichael(n: int) -> int:
    lam = 1
    for q, e in _factorize(n).items():
        if q == 2:
            part = 1 if e == 1 else 2 if e == 2 else 1 << (e - 2)
        else:
            part = q ** (e - 1) * (q - 1)
        lam = lam * part // math.gcd(lam, part)
    return lam


def multiplicative_order(a: int, n: int) -> int:
    """Least m >= 1 with a**m = 1 mod n.  Brute-force oracle for n <= 1e7."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if math.gcd(a, n) != 1:
        raise ValueError(f"gcd({a}, {n}) != 1, order undefined")
    if n == 1:
        return 1
    order = _carmichael(n)
    for q in _factorize(order):
        while order % q == 0 and pow(a, order // q, n) == 1:
            order //= q
    return order


def lucas_lehmer(q: int) -> bool:
    """True iff 2**q - 1 is prime (q >= 2)."""
    if q == 2:
        return True
    if q < 2 or not is_probable_prime(q):
        return False
    m = (1 << q) - 1
    s = 4
    for _ in range(q - 2):
        s = s * s - 2
        if s < 0:
            s += m
        s = (s & m) + (s >> q)
        # s == m is a fixed point of the fold; it means s == 0 (mod m)
        if s >= m:
            s -= m
    return s == 0
