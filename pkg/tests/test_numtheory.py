"""Integer primitives: pinned values, invariants, and the three lemma oracles."""
import math
import random

import numpy as np
import pytest

from prothforge.numtheory import (
    PrimeBitset,
    gcd,
    integer_root,
    is_perfect_power_eq,
    is_probable_prime,
    lucas_lehmer,
    modpow,
    multiplicative_order,
    sieve_bitset,
    sieve_range,
)

from helpers import (
    eratosthenes,
    lemma_cofactor_growth_violations,
    lemma_divisor_transfer_violations,
    lemma_order_lift_violations,
    trial_division_prime,
)


def test_modpow_pins():
    assert modpow(2, 10, 1000) == 24
    assert modpow(5, 0, 7) == 1
    assert modpow(2, 2 * 107**2, 2450087) == 1302367


def test_modpow_splits_exponents():
    rng = random.Random(11)
    for _ in range(200):
        m = rng.randrange(2, 10**9)
        a = rng.randrange(0, m)
        e1 = rng.randrange(0, 10**12)
        e2 = rng.randrange(0, 10**12)
        assert modpow(a, e1 + e2, m) == modpow(a, e1, m) * modpow(a, e2, m) % m


def test_gcd_pins():
    assert gcd(12, 18) == 6
    assert gcd(1302366, 2450087) == 1
    assert gcd(0, 7) == 7
    assert gcd(7, 0) == 7
    assert gcd(0, 0) == 0


def test_probable_prime_matches_trial_division_exhaustively():
    flags = np.zeros(10**6, dtype=bool)
    flags[eratosthenes(10**6)] = True
    mism = [n for n in range(10**6) if is_probable_prime(n) != bool(flags[n])]
    assert mism == []


def test_probable_prime_large_pins():
    assert is_probable_prime(2450087)
    assert not is_probable_prime(2450088)
    assert is_probable_prime(5423886847)
    assert is_probable_prime(258280327)
    assert is_probable_prime(2**127 - 1)
    assert not is_probable_prime(2**11 - 1)


def test_sieve_range_pins():
    assert list(sieve_range(0, 10)) == [2, 3, 5, 7]
    assert len(sieve_range(11, 33)) == 7
    assert list(sieve_range(20, 23)) == []
    window = sieve_range(10**9, 10**9 + 10**4)
    assert len(window) > 0
    assert all(is_probable_prime(int(p)) for p in window)


def test_sieve_range_matches_oracle():
    assert np.array_equal(sieve_range(0, 10**5), eratosthenes(10**5))
    lo, hi = 999_000, 1_000_000
    oracle = eratosthenes(hi)
    assert np.array_equal(sieve_range(lo, hi), oracle[oracle >= lo])


def test_bitset_lookup():
    table = sieve_bitset(1000)
    assert isinstance(table, PrimeBitset)
    values = np.array([2, 3, 4, 997, 999], dtype=np.int64)
    assert table.test(values).tolist() == [True, True, False, True, False]
    assert table.test_one(991)
    assert not table.test_one(993)


def test_integer_root_pins():
    # 636**3 = 257259456 <= 258280326 < 637**3 = 258474853
    assert integer_root(258280326, 3) == 636
    assert integer_root(27, 3) == 3
    assert integer_root(0, 5) == 0
    assert integer_root(1, 7) == 1


def test_integer_root_brackets_exhaustively():
    for n in range(10**5):
        for k in (2, 3, 7):
            r = integer_root(n, k)
            assert r**k <= n < (r + 1) ** k


def test_perfect_power_detection():
    assert is_perfect_power_eq(27, 3) == 3
    assert is_perfect_power_eq(28, 3) is None
    assert is_perfect_power_eq(2, 3) is None
    assert is_perfect_power_eq(1, 5) == 1
    assert is_perfect_power_eq(2**30, 3) == 2**10


def test_multiplicative_order_pins():
    assert multiplicative_order(2, 7) == 3
    assert multiplicative_order(1, 5) == 1
    order = multiplicative_order(2, 2450087)
    assert order == 107**3
    assert order % 107**2 == 0
    with pytest.raises(ValueError):
        multiplicative_order(2, 4)


def test_multiplicative_order_agrees_with_powers():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randrange(3, 3000)
        a = rng.randrange(1, n)
        if math.gcd(a, n) != 1:
            continue
        order = multiplicative_order(a, n)
        assert pow(a, order, n) == 1
        assert all(pow(a, d, n) != 1 for d in range(1, min(order, 200)))


def test_lucas_lehmer_matches_mersenne_exponent_list():
    known = {2, 3, 5, 7, 13, 17, 19, 31, 61, 89, 107, 127, 521, 607}
    for q in map(int, sieve_range(2, 610)):
        assert lucas_lehmer(q) == (q in known)


def test_lemma_divisor_transfer_holds_to_200():
    assert lemma_divisor_transfer_violations(200) == []


def test_lemma_order_lift_holds_below_1e4():
    assert lemma_order_lift_violations(10**4, bases_per_n=2, seed=17) == []


def test_lemma_cofactor_growth_holds_to_500():
    assert lemma_cofactor_growth_violations(500) == []


def test_trial_division_oracle_self_check():
    primes = set(eratosthenes(2000).tolist())
    for n in range(2000):
        assert trial_division_prime(n) == (n in primes)
