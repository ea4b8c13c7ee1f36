"""Shared oracles for the test suite.

Everything here is deliberately independent of the package internals:
sieves are recomputed from scratch, orders and factorizations use plain
trial division, and the vectorized Fermat screen only assumes int64
arithmetic.  Tests freeze values produced by these oracles.
"""
from __future__ import annotations

import math

import numpy as np


def eratosthenes(limit: int) -> np.ndarray:
    """All primes < limit, by a plain sieve (independent oracle)."""
    if limit <= 2:
        return np.empty(0, dtype=np.int64)
    flags = np.ones(limit, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(limit - 1) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.flatnonzero(flags).astype(np.int64)


def trial_division_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


_INT64_SAFE_MOD = 1 << 31  # squaring below this cannot overflow int64


def powmod_vec(bases: np.ndarray, exponents: np.ndarray, moduli: np.ndarray) -> np.ndarray:
    """Elementwise pow(bases, exponents, moduli) on int64 arrays."""
    if moduli.size and int(moduli.max()) >= _INT64_SAFE_MOD:
        raise ValueError("modulus too large for the int64 fast path")
    result = np.ones_like(moduli)
    base = np.mod(bases, moduli)
    exp = exponents.copy()
    while np.any(exp > 0):
        odd = (exp & 1).astype(bool)
        result[odd] = result[odd] * base[odd] % moduli[odd]
        exp >>= 1
        live = (exp > 0)
        base[live] = base[live] * base[live] % moduli[live]
    return result


# ---------------------------------------------------------------------------
# Lemma oracles.  Each returns the list of counterexamples it found (empty
# means the statement held on the checked range).

def lemma_divisor_transfer_violations(limit: int = 200) -> list[tuple[int, int, int]]:
    """If (D*P+1) | (A*P+1) with D >= 1 and 1 <= A <= P <= limit, then D = A."""
    bad = []
    for P in range(1, limit + 1):
        for A in range(1, P + 1):
            value = A * P + 1
            for D in range(1, A + 1):
                if value % (D * P + 1) == 0 and D != A:
                    bad.append((A, P, D))
    return bad


def lemma_order_lift_violations(n_hi: int, bases_per_n: int, seed: int) -> list[tuple[int, int, int, int]]:
    """If p^e divides ord_N(a) for odd N and p coprime to N, some prime
    factor q of N has p^e | q - 1.
    """
    rng = np.random.default_rng(seed)
    bad = []
    for N in range(3, n_hi, 2):
        n_factors = factorize(N)
        picks = set()
        for _ in range(bases_per_n):
            a = int(rng.integers(2, N)) if N > 3 else 2
            if math.gcd(a, N) != 1:
                continue
            picks.add(a)
        for a in picks:
            order = _order_by_trial(a, N, n_factors)
            for p, e in factorize(order).items():
                if N % p == 0:
                    continue
                if not any(q % p**e == 1 for q in n_factors):
                    bad.append((N, a, p, e))
    return bad


def _order_by_trial(a: int, n: int, n_factors: dict[int, int]) -> int:
    # lambda(n) via the standard prime-power formula, then divisor descent
    lam = 1
    for q, e in n_factors.items():
        if q == 2:
            block = 1 if e == 1 else (2 if e == 2 else 2 ** (e - 2))
        else:
            block = (q - 1) * q ** (e - 1)
        lam = lam * block // math.gcd(lam, block)
    order = lam
    for p in factorize(lam):
        while order % p == 0 and pow(a, order // p, n) == 1:
            order //= p
    return order


def lemma_cofactor_growth_violations(x_hi: int = 2000) -> list[tuple[int, int]]:
    """For 22 <= X <= x_hi and 2 <= a <= X/2 with a != sqrt(X+1):
    X | (X-a)*a + 1 implies ((X-a)*a + 1)/X > sqrt(X).
    """
    bad = []
    for X in range(22, x_hi + 1):
        root = math.isqrt(X + 1)
        excluded = root if root * root == X + 1 else 0
        for a in range(2, X // 2 + 1):
            if a == excluded:
                continue
            value = (X - a) * a + 1
            if value % X == 0:
                M = value // X
                if M * M <= X:
                    bad.append((X, a))
    return bad


# ---------------------------------------------------------------------------
# Base-failure census for the one-shot family: for a prime N = K*p^n + 1 the
# count of a in [1, N-1] with a^(K*p^(n-1-j)) != 1 (mod N) must be exactly
# K*p^n - K*p^(n-1-j).

def one_shot_base_census(N: int, K: int, p: int, n: int) -> dict[int, int]:
    """Observed count of bases satisfying L != 1, keyed by level
    n-1-j (so level l uses exponent K*p^l).  Vectorized over all bases.
    """
    if N >= _INT64_SAFE_MOD:
        raise ValueError("N too large for the vectorized census")
    bases = np.arange(1, N, dtype=np.int64)
    mods = np.full_like(bases, N)
    x = powmod_vec(bases, np.full_like(bases, K), mods)
    counts = {}
    for level in range(n):
        counts[level] = int(np.count_nonzero(x != 1))
        if level + 1 < n:
            x = powmod_vec(x, np.full_like(x, p), mods)
    return counts


# ---------------------------------------------------------------------------
# Deterministic vectorized primality.  Witnesses 2, 3, 5, 7 decide every
# n < 3_215_031_751 (Jaeschke's bound), which covers the whole int64 fast
# path of powmod_vec.

def strong_probable_prime_vec(ns: np.ndarray, witness: int) -> np.ndarray:
    """Strong-probable-prime flags for an array of odd ns > 2."""
    d = (ns - 1).copy()
    r = np.zeros_like(ns)
    halvable = (d & 1) == 0
    while halvable.any():
        d[halvable] >>= 1
        r[halvable] += 1
        halvable = (d & 1) == 0
    x = powmod_vec(np.full_like(ns, witness), d, ns)
    flags = (x == 1) | (x == ns - 1)
    steps = r - 1  # squarings still allowed per element
    active = ~flags & (steps > 0)
    while active.any():
        x[active] = x[active] * x[active] % ns[active]
        flags |= active & (x == ns - 1)
        steps -= 1
        active &= ~flags & (steps > 0)
    return flags


def is_prime_int64(ns: np.ndarray) -> np.ndarray:
    """Exact primality for int64 arrays (bounded by the powmod_vec ceiling)."""
    ns = np.asarray(ns, dtype=np.int64)
    out = np.zeros(ns.shape, dtype=bool)
    small = ns < 11
    out[small] = np.isin(ns[small], (2, 3, 5, 7))
    odd = ~small & ((ns & 1) == 1)
    idx = np.flatnonzero(odd)
    if idx.size:
        sub = ns[idx]
        flags = np.ones(idx.size, dtype=bool)
        for witness in (2, 3, 5, 7):
            live = np.flatnonzero(flags)
            if not live.size:
                break
            flags[live] = strong_probable_prime_vec(sub[live], witness)
        out[idx] = flags
    return out
