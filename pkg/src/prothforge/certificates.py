"""Primality tests for N = K*p^n + 1 with replayable JSON certificates.

Each test returns a TestOutcome: Certified carries a Certificate whose
congruences and side conditions can be replayed from scratch by
verify_certificate; Inconclusive means the congruence failed for this
base (retry with another); CompositeWitness means compositeness was
proved outright.  Structurally inapplicable calls (a failed side
condition) raise ValueError instead, so callers can distinguish
retryable from impossible.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from enum import Enum

from prothforge.config import prng_seed
from prothforge.numtheory import gcd, is_perfect_power_eq, is_probable_prime, _simple_sieve

# direct Horner summation of Phi_p is preferred up to this p
_PHI_DIRECT_LIMIT = 64

_DEFAULT_BASES = (2, 3, 5, 7, 11)


class TestId(str, Enum):
    PROTH_1878 = "Proth1878"
    POCKLINGTON_FACTOR_FORM = "PocklingtonFactorForm"
    POCKLINGTON_KPN = "PocklingtonKpn"
    GRAU_PHI = "GrauPhi"
    GRAU_J = "GrauJ"
    ONE_SHOT = "OneShot"
    ONE_SHOT_J = "OneShotJ"
    CUBE_BOUND_J = "CubeBoundJ"
    SEVEN_BOUND_J = "SevenBoundJ"
    FERMAT_ONLY_2KP = "FermatOnly2Kp"
    FERMAT_ONLY_2KP2 = "FermatOnly2Kp2"
    FERMAT_ONLY_2KP3 = "FermatOnly2Kp3"


_J_TESTS = frozenset(
    {TestId.GRAU_J, TestId.ONE_SHOT_J, TestId.CUBE_BOUND_J, TestId.SEVEN_BOUND_J}
)


@dataclass(frozen=True)
class ProthForm:
    """Canonical decomposition N = K * p**n + 1 with p prime and p not dividing K."""

    K: int
    p: int
    n: int
    N: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.K < 1:
            raise ValueError(f"K must be >= 1, got {self.K}")
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not is_probable_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.K % self.p == 0:
            raise ValueError(f"K = {self.K} divisible by p = {self.p}: n is not maximal")
        object.__setattr__(self, "N", self.K * self.p**self.n + 1)


class Status(Enum):
    CERTIFIED = "certified"
    INCONCLUSIVE = "inconclusive"
    COMPOSITE_WITNESS = "composite_witness"


@dataclass(frozen=True)
class Certificate:
    """Replayable record of which test, base, j, and witness residue applied."""

    N: int
    K: int
    p: int
    n: int
    test: TestId
    base: int
    j: int
    witness_L: int
    side_conditions: tuple[tuple[str, bool], ...]

    def to_json(self) -> str:
        doc = {
            "version": 1,
            "N": str(self.N),
            "K": str(self.K),
            "p": str(self.p),
            "n": self.n,
            "test": self.test.value,
            "a": str(self.base),
            "j": self.j,
            "L": str(self.witness_L),
            "side_conditions": [
                {"name": name, "holds": holds} for name, holds in self.side_conditions
            ],
        }
        return json.dumps(doc, indent=2)

    @staticmethod
    def from_json(text: str) -> "Certificate":
        """Structural parse only; semantic validity is verify_certificate's job."""
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"not valid JSON: {exc}") from None
        if not isinstance(doc, dict):
            raise ValueError("certificate must be a JSON object")
        if doc.get("version") != 1:
            raise ValueError(f"unsupported certificate version: {doc.get('version')!r}")
        try:
            test = TestId(doc["test"])
            cert = Certificate(
                N=int(doc["N"]),
                K=int(doc["K"]),
                p=int(doc["p"]),
                n=int(doc["n"]),
                test=test,
                base=int(doc["a"]),
                j=int(doc["j"]),
                witness_L=int(doc["L"]),
                side_conditions=tuple(
                    (str(rec["name"]), bool(rec["holds"]))
                    for rec in doc["side_conditions"]
                ),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed certificate: {exc}") from None
        return cert


@dataclass(frozen=True)
class TestOutcome:
    status: Status
    certificate: Certificate | None = None
    reason: str = ""

    @property
    def certified(self) -> bool:
        return self.status is Status.CERTIFIED


def _certified(cert: Certificate) -> TestOutcome:
    return TestOutcome(Status.CERTIFIED, certificate=cert)


def _inconclusive(reason: str) -> TestOutcome:
    return TestOutcome(Status.INCONCLUSIVE, reason=reason)


def _composite(detail: str) -> TestOutcome:
    return TestOutcome(Status.COMPOSITE_WITNESS, reason=detail)


@dataclass(frozen=True)
class FactorFormClaim:
    """Verified statement: every prime factor of N is = 1 (mod q**n)."""

    N: int
    q: int
    n: int
    base: int

    def __str__(self) -> str:
        return f"every prime factor of {self.N} is congruent to 1 (mod {self.q}^{self.n})"


def decompose(N: int, p: int) -> ProthForm:
    """Canonical (K, p, n) for N = K*p^n + 1 with n maximal."""
    if N < 3:
        raise ValueError(f"N must be >= 3, got {N}")
    if not is_probable_prime(p):
        raise ValueError(f"p = {p} is not prime")
    m = N - 1
    if m % p != 0:
        raise ValueError(f"p = {p} does not divide N - 1 = {m}")
    n = 0
    while m % p == 0:
        m //= p
        n += 1
    return ProthForm(K=m, p=p, n=n)


def auto_decompose(N: int, small_prime_bound: int = 10_000) -> ProthForm | None:
    """Trial-divides N-1 by primes <= small_prime_bound and returns the
    decomposition maximizing p^n, or None when even the best has p^n < K
    (no test here applies).  The cofactor left after trial division is
    itself a candidate p when it is a probable prime.
    """
    if N < 3:
        raise ValueError(f"N must be >= 3, got {N}")
    m = N - 1
    candidates: list[int] = []
    rest = m
    for q in map(int, _simple_sieve(small_prime_bound)):
        if q * q > rest and rest > 1:
            break
        if rest % q == 0:
            candidates.append(q)
            while rest % q == 0:
                rest //= q
    if rest > 1 and (rest <= small_prime_bound or is_probable_prime(rest)):
        candidates.append(rest)
    best: ProthForm | None = None
    for q in candidates:
        form = decompose(N, q)
        if best is None or form.p**form.n > best.p**best.n:
            best = form
    if best is None or best.p**best.n < best.K:
        return None
    return best


def side_conditions(
    test: TestId, form: ProthForm, j: int = 0, a: int | None = None
) -> list[tuple[str, bool]]:
    """Exact integer evaluation of the named test's structural side conditions.

    Conditions involving the base a are included only when a is given.
    Every comparison is in exact integer arithmetic; fractional-power
    bounds appear in their cross-power form (e.g. (N-1)^(1/3) <= p^(n-j)
    as N-1 <= p^(3(n-j))).
    """
    K, p, n, N = form.K, form.p, form.n, form.N
    conds: list[tuple[str, bool]] = []
    if test is TestId.PROTH_1878:
        conds.append(("p == 2", p == 2))
        conds.append(("K odd", K % 2 == 1))
        conds.append(("K < 2^n", p != 2 or K < 2**n))
    elif test in (TestId.POCKLINGTON_KPN, TestId.GRAU_PHI):
        conds.append(("K < p^n", K < p**n))
    elif test is TestId.ONE_SHOT:
        conds.append(("p^n >= K", p**n >= K))
    elif test is TestId.GRAU_J:
        conds.append(("0 <= j <= n-1", 0 <= j <= n - 1))
        conds.append(("p^(2(n-j)) > K*p^n", 0 <= j <= n - 1 and p ** (2 * (n - j)) > K * p**n))
    elif test is TestId.ONE_SHOT_J:
        conds.append(("0 <= j <= n-1", 0 <= j <= n - 1))
        conds.append(("p^(n-j) >= K*p^j", 0 <= j <= n - 1 and p ** (n - j) >= K * p**j))
    elif test is TestId.CUBE_BOUND_J:
        ok = 0 <= j <= n - 1
        conds.append(("0 <= j <= n-1", ok))
        conds.append(("j >= n-j", ok and j >= n - j))
        cube = p ** (3 * (n - j)) if ok else 0
        conds.append(("p^(3(n-j)) >= N-1", ok and cube >= N - 1))
        conds.append(("N != p^(3(n-j))+1", ok and N != cube + 1))
    elif test is TestId.SEVEN_BOUND_J:
        ok = 0 <= j <= n - 1
        conds.append(("0 <= j <= n-1", ok))
        conds.append(("j >= 2(n-j)", ok and j >= 2 * (n - j)))
        if ok:
            pw = p ** (n - j)
            cube = pw**3
            conds.append(("p^(7(n-j)) >= (N-1)^2", pw**7 >= (N - 1) ** 2))
            conds.append(("p^(n-j) >= 22", pw >= 22))
            conds.append(("N != p^(3(n-j))+1", N != cube + 1))
            if (N - 1) % cube == 0:
                conds.append(
                    ("(N-1)/p^(3(n-j)) not a perfect cube",
                     is_perfect_power_eq((N - 1) // cube, 3) is None)
                )
            s = is_perfect_power_eq(pw + 1, 2)
            if s is not None:
                conds.append(
                    ("N != (sqrt(p^(n-j)+1)-1)*p^(3(n-j))+1", N != (s - 1) * cube + 1)
                )
        else:
            conds.append(("p^(7(n-j)) >= (N-1)^2", False))
            conds.append(("p^(n-j) >= 22", False))
            conds.append(("N != p^(3(n-j))+1", False))
    elif test is TestId.FERMAT_ONLY_2KP:
        conds.append(("n == 1", n == 1))
        conds.append(("K even", K % 2 == 0))
        conds.append(("2K' <= p", K <= p))
        if a is not None:
            conds.append(("a^(2K') < N", a**K < N))
    elif test is TestId.FERMAT_ONLY_2KP2:
        conds.append(("n == 2", n == 2))
        conds.append(("K even", K % 2 == 0))
        conds.append(("2K' < p", K < p))
        if a is not None:
            conds.append(("a^(2K') < N", a**K < N))
    elif test is TestId.FERMAT_ONLY_2KP3:
        conds.append(("n == 3", n == 3))
        conds.append(("K even", K % 2 == 0))
        conds.append(("p >= 22", p >= 22))
        conds.append(("(2K')^2 < p", K * K < p))
        conds.append(("2K' not a perfect cube", is_perfect_power_eq(K, 3) is None))
        if a is not None:
            conds.append(("a^(2K') < N", a**K < N))
    else:
        raise ValueError(f"no side conditions defined for {test}")
    return conds


def _require_conditions(test: TestId, form: ProthForm, j: int, a: int | None) -> tuple[tuple[str, bool], ...]:
    conds = side_conditions(test, form, j, a)
    for name, holds in conds:
        if not holds:
            raise ValueError(f"{test.value} not applicable: side condition failed: {name}")
    return tuple(conds)


def _check_base(a: int) -> None:
    if a < 2:
        raise ValueError(f"base must be >= 2, got {a}")


def max_admissible_j(form: ProthForm, test: TestId) -> int | None:
    """Largest j in [0, n-1] meeting the test's side conditions, or None."""
    if test not in _J_TESTS:
        raise ValueError(f"{test.value} does not take a j parameter")
    for j in range(form.n - 1, -1, -1):
        if all(holds for _, holds in side_conditions(test, form, j)):
            return j
    return None


def admissible_js(form: ProthForm, test: TestId) -> list[int]:
    """All admissible j for a j-parameterized test, ascending."""
    if test not in _J_TESTS:
        raise ValueError(f"{test.value} does not take a j parameter")
    return [
        j
        for j in range(form.n)
        if all(holds for _, holds in side_conditions(test, form, j))
    ]


def _phi_p_mod(x: int, p: int, N: int) -> tuple[int | None, int | None]:
    """Phi_p(x) = 1 + x + ... + x^(p-1) mod N.

    Returns (value, None), or (None, g) when inverting x-1 uncovers a
    nontrivial factor g of N.  Direct Horner summation for small p,
    (x^p - 1)/(x - 1) via modular inverse otherwise.
    """
    x %= N
    if x == 1:
        return p % N, None
    if p <= _PHI_DIRECT_LIMIT:
        acc = 1
        for _ in range(p - 1):
            acc = (acc * x + 1) % N
        return acc, None
    g = gcd(x - 1, N)
    if g != 1:
        return None, g
    return (pow(x, p, N) - 1) * pow(x - 1, -1, N) % N, None


def proth_1878(form: ProthForm, a: int) -> TestOutcome:
    """Classical test for N = K*2^n + 1, K odd, K < 2^n:
    N is prime iff some a has a^((N-1)/2) = -1 (mod N)."""
    _check_base(a)
    conds = _require_conditions(TestId.PROTH_1878, form, 0, a)
    N = form.N
    r = pow(a, (N - 1) // 2, N)
    if r == N - 1:
        cert = Certificate(
            N=N, K=form.K, p=form.p, n=form.n, test=TestId.PROTH_1878,
            base=a, j=0, witness_L=r, side_conditions=conds,
        )
        return _certified(cert)
    if r == 1:
        return _inconclusive("a^((N-1)/2) = 1: base is a quadratic residue")
    return _inconclusive(f"a^((N-1)/2) = {r}, not -1 (mod N)")


def pocklington_factor_form(N: int, q: int, n: int, a: int) -> FactorFormClaim | None:
    """If a^(N-1) = 1 and gcd(a^((N-1)/q) - 1, N) = 1, every prime factor
    of N is = 1 (mod q^n).  Returns the claim, not a primality certificate."""
    _check_base(a)
    if N < 3 or n < 1:
        raise ValueError(f"need N >= 3 and n >= 1, got N={N}, n={n}")
    if not is_probable_prime(q):
        raise ValueError(f"q = {q} is not prime")
    qn = q**n
    if (N - 1) % qn != 0:
        raise ValueError(f"q^n = {qn} does not divide N - 1")
    if ((N - 1) // qn) % q == 0:
        raise ValueError(f"N - 1 = q^n * R requires q not dividing R")
    if pow(a, N - 1, N) != 1:
        return None
    if gcd(pow(a, (N - 1) // q, N) - 1, N) != 1:
        return None
    return FactorFormClaim(N=N, q=q, n=n, base=a)


def pocklington_kpn(form: ProthForm, a: int) -> TestOutcome:
    """Certified iff a^(N-1) = 1 (mod N) and gcd(a^((N-1)/p) - 1, N) = 1,
    for K < p^n."""
    _check_base(a)
    conds = _require_conditions(TestId.POCKLINGTON_KPN, form, 0, a)
    N, p = form.N, form.p
    x = pow(a, (N - 1) // p, N)
    if pow(x, p, N) != 1:
        # x^p = a^(N-1), so this is an outright Fermat failure
        g = gcd(a, N)
        if g == 1:
            return _composite("a^(N-1) != 1 (mod N): Fermat failure")
        return _composite(f"gcd(a, N) = {g} > 1")
    g = gcd(x - 1, N)
    if g != 1:
        return _inconclusive(f"gcd(a^((N-1)/p) - 1, N) = {g} != 1")
    cert = Certificate(
        N=N, K=form.K, p=form.p, n=form.n, test=TestId.POCKLINGTON_KPN,
        base=a, j=0, witness_L=x, side_conditions=conds,
    )
    return _certified(cert)


def _grau_outcome(form: ProthForm, a: int, j: int, test: TestId,
                  conds: tuple[tuple[str, bool], ...]) -> TestOutcome:
    N, p = form.N, form.p
    x = pow(a, form.K * p ** (form.n - j - 1), N)
    value, factor = _phi_p_mod(x, p, N)
    if factor is not None:
        return _composite(f"gcd(x - 1, N) = {factor} is a nontrivial factor")
    if value == 0:
        cert = Certificate(
            N=N, K=form.K, p=form.p, n=form.n, test=test,
            base=a, j=j, witness_L=x, side_conditions=conds,
        )
        return _certified(cert)
    if x == 1:
        return _inconclusive("x = 1: base is a p-th power residue")
    return _inconclusive("Phi_p(x) != 0 (mod N)")


def grau_phi(form: ProthForm, a: int) -> TestOutcome:
    """Certified iff Phi_p(a^((N-1)/p)) = 0 (mod N), for K < p^n."""
    _check_base(a)
    conds = _require_conditions(TestId.GRAU_PHI, form, 0, a)
    return _grau_outcome(form, a, 0, TestId.GRAU_PHI, conds)


def grau_j(form: ProthForm, a: int, j: int) -> TestOutcome:
    """Certified iff Phi_p(a^(K*p^(n-j-1))) = 0 (mod N), under the exact
    side condition p^(2(n-j)) > K*p^n."""
    _check_base(a)
    conds = _require_conditions(TestId.GRAU_J, form, j, a)
    return _grau_outcome(form, a, j, TestId.GRAU_J, conds)


def _order_outcome(form: ProthForm, a: int, j: int, test: TestId,
                   conds: tuple[tuple[str, bool], ...]) -> TestOutcome:
    """Shared core: L = a^(K*p^(n-j-1)); Certified iff L != 1 and
    L^(p^(j+1)) = 1 (mod N)."""
    N, p = form.N, form.p
    L = pow(a, form.K * p ** (form.n - j - 1), N)
    if L == 1:
        return _inconclusive("condition (i): L = 1")
    if pow(L, p ** (j + 1), N) != 1:
        return _inconclusive("condition (ii): L^(p^(j+1)) != 1 (mod N)")
    cert = Certificate(
        N=N, K=form.K, p=form.p, n=form.n, test=test,
        base=a, j=j, witness_L=L, side_conditions=conds,
    )
    return _certified(cert)


def one_shot(form: ProthForm, a: int) -> TestOutcome:
    """Certified iff L = a^(K*p^(n-1)) satisfies L != 1, L^p = 1 (mod N),
    for p^n >= K."""
    _check_base(a)
    conds = _require_conditions(TestId.ONE_SHOT, form, 0, a)
    return _order_outcome(form, a, 0, TestId.ONE_SHOT, conds)


def one_shot_j(form: ProthForm, a: int, j: int) -> TestOutcome:
    """Certified iff L = a^(K*p^(n-j-1)) satisfies L != 1,
    L^(p^(j+1)) = 1 (mod N), for p^(n-j) >= K*p^j."""
    _check_base(a)
    conds = _require_conditions(TestId.ONE_SHOT_J, form, j, a)
    return _order_outcome(form, a, j, TestId.ONE_SHOT_J, conds)


def cube_bound_j(form: ProthForm, a: int, j: int) -> TestOutcome:
    """As one_shot_j but admissible for larger j: requires j >= n-j and
    p^(3(n-j)) >= N-1, excluding N = p^(3(n-j))+1."""
    _check_base(a)
    conds = _require_conditions(TestId.CUBE_BOUND_J, form, j, a)
    return _order_outcome(form, a, j, TestId.CUBE_BOUND_J, conds)


def seven_bound_j(form: ProthForm, a: int, j: int) -> TestOutcome:
    """As one_shot_j for still larger j: requires j >= 2(n-j) and
    p^(7(n-j)) >= (N-1)^2 with the cube and square exclusion clauses."""
    _check_base(a)
    conds = _require_conditions(TestId.SEVEN_BOUND_J, form, j, a)
    return _order_outcome(form, a, j, TestId.SEVEN_BOUND_J, conds)


def _fermat_only(form: ProthForm, a: int, test: TestId) -> TestOutcome:
    conds = _require_conditions(test, form, 0, a)
    N = form.N
    r = pow(a, N - 1, N)
    if r != 1:
        g = gcd(a, N)
        if g == 1:
            return _composite("a^(N-1) != 1 (mod N): Fermat failure")
        return _composite(f"gcd(a, N) = {g} > 1")
    cert = Certificate(
        N=N, K=form.K, p=form.p, n=form.n, test=test,
        base=a, j=0, witness_L=r, side_conditions=conds,
    )
    return _certified(cert)


def fermat_only_2kp(form: ProthForm, a: int) -> TestOutcome:
    """N = 2K'p + 1 with 2K' <= p and a^(2K') < N: the bare Fermat
    congruence a^(N-1) = 1 already certifies primality."""
    _check_base(a)
    return _fermat_only(form, a, TestId.FERMAT_ONLY_2KP)


def fermat_only_2kp2(form: ProthForm, a: int) -> TestOutcome:
    """N = 2K'p^2 + 1 with 2K' < p and a^(2K') < N: Fermat suffices."""
    _check_base(a)
    return _fermat_only(form, a, TestId.FERMAT_ONLY_2KP2)


def fermat_only_2kp3(form: ProthForm, a: int) -> TestOutcome:
    """N = 2K'p^3 + 1 with p >= 22, (2K')^2 < p, a^(2K') < N and 2K' not
    a perfect cube: Fermat suffices."""
    _check_base(a)
    return _fermat_only(form, a, TestId.FERMAT_ONLY_2KP3)


_SINGLE_TESTS = {
    TestId.PROTH_1878: proth_1878,
    TestId.POCKLINGTON_KPN: pocklington_kpn,
    TestId.GRAU_PHI: grau_phi,
    TestId.ONE_SHOT: one_shot,
    TestId.FERMAT_ONLY_2KP: fermat_only_2kp,
    TestId.FERMAT_ONLY_2KP2: fermat_only_2kp2,
    TestId.FERMAT_ONLY_2KP3: fermat_only_2kp3,
}

_J_TEST_FUNCS = {
    TestId.GRAU_J: grau_j,
    TestId.ONE_SHOT_J: one_shot_j,
    TestId.CUBE_BOUND_J: cube_bound_j,
    TestId.SEVEN_BOUND_J: seven_bound_j,
}


def run_test(form: ProthForm, test: TestId, a: int, j: int | None = None) -> TestOutcome:
    """Dispatch a single named test; j defaults to the largest admissible
    value for j-parameterized tests."""
    if test in _J_TESTS:
        if j is None:
            j = max_admissible_j(form, test)
            if j is None:
                raise ValueError(f"{test.value} not applicable: no admissible j")
        return _J_TEST_FUNCS[test](form, a, j)
    if test is TestId.POCKLINGTON_FACTOR_FORM:
        raise ValueError(
            "PocklingtonFactorForm yields a factor-shape claim, not a certificate; "
            "call pocklington_factor_form directly"
        )
    return _SINGLE_TESTS[test](form, a)


def _applicable(test: TestId, form: ProthForm, j: int = 0, a: int | None = None) -> bool:
    return all(holds for _, holds in side_conditions(test, form, j, a))


def certify(
    N: int,
    p: int | None = None,
    base_list: list[int] | None = None,
    test: TestId | None = None,
    j: int | None = None,
    max_bases: int = 24,
    small_prime_bound: int = 10_000,
    seed: int | None = None,
) -> TestOutcome:
    """Find a certificate for N, trying tests per base in escalation order.

    Per base: a gcd/Fermat screen first (outright compositeness proofs),
    then the one-shot family at ascending j (j = 0 is the plain one-shot
    test), the cube-bound and seven-bound extensions at ascending j, the
    cyclotomic and Pocklington forms, and the Fermat-only corollaries.
    Ascending j keeps the cheapest admissible exponent and matches the
    reference worked examples.  Base list defaults to small primes
    followed by seeded random bases; identical inputs give identical
    outcomes regardless of thread count.
    """
    if N < 3:
        raise ValueError(f"N must be >= 3, got {N}")
    form = decompose(N, p) if p is not None else auto_decompose(N, small_prime_bound)
    if form is None:
        return _inconclusive("no usable decomposition of N - 1 was found")

    if base_list is None:
        bases = list(_DEFAULT_BASES)
        rng = random.Random(f"{prng_seed() if seed is None else seed}:certify:{N}")
        # candidates live in [2, N-2]: never ask for more distinct bases
        # than that pool holds, or the draw loop cannot terminate
        target = min(max_bases, N - 3)
        while len(bases) < target:
            candidate = rng.randrange(2, N - 1)
            if candidate not in bases:
                bases.append(candidate)
    else:
        bases = list(base_list)

    if test is not None:
        last = _inconclusive("no base attempted")
        for a in bases:
            last = run_test(form, test, a, j)
            if last.status is not Status.INCONCLUSIVE:
                return last
        return last

    last_reason = "no applicable test"
    for a in bases:
        g = gcd(a, N)
        if 1 < g < N:
            return _composite(f"gcd(a, N) = {g} is a nontrivial factor")
        if g == N:
            continue
        if pow(a, N - 1, N) != 1:
            return _composite(f"a^(N-1) != 1 (mod N) for a = {a}: Fermat failure")

        attempts: list[tuple[TestId, int | None]] = []
        for jj in admissible_js(form, TestId.ONE_SHOT_J):
            attempts.append((TestId.ONE_SHOT if jj == 0 else TestId.ONE_SHOT_J, jj))
        attempts += [(TestId.CUBE_BOUND_J, jj) for jj in admissible_js(form, TestId.CUBE_BOUND_J)]
        attempts += [(TestId.SEVEN_BOUND_J, jj) for jj in admissible_js(form, TestId.SEVEN_BOUND_J)]
        if _applicable(TestId.GRAU_PHI, form):
            attempts.append((TestId.GRAU_PHI, None))
        attempts += [
            (TestId.GRAU_J, jj) for jj in admissible_js(form, TestId.GRAU_J) if jj > 0
        ]
        if _applicable(TestId.POCKLINGTON_KPN, form):
            attempts.append((TestId.POCKLINGTON_KPN, None))
        if form.p == 2 and _applicable(TestId.PROTH_1878, form):
            attempts.append((TestId.PROTH_1878, None))
        for fermat_test in (TestId.FERMAT_ONLY_2KP, TestId.FERMAT_ONLY_2KP2, TestId.FERMAT_ONLY_2KP3):
            if _applicable(fermat_test, form, 0, a):
                attempts.append((fermat_test, None))

        for which, jj in attempts:
            outcome = run_test(form, which, a, 0 if jj is None else jj)
            if outcome.status is not Status.INCONCLUSIVE:
                return outcome
            last_reason = outcome.reason
    return _inconclusive(f"base budget exhausted; last failure: {last_reason}")


@dataclass(frozen=True)
class VerifyResult:
    accepted: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.accepted


def _rejected(reason: str) -> VerifyResult:
    return VerifyResult(False, reason)


def verify_certificate(cert: Certificate) -> VerifyResult:
    """Independent replay: recompute the decomposition, every side
    condition, and every congruence; shares no state with the prover.

    The stored witness is checked against the certified congruence
    (condition (ii)) before the witness itself is recomputed from the
    base (condition (i)), so a tampered L is reported as the congruence
    it breaks.
    """
    N, K, p, n = cert.N, cert.K, cert.p, cert.n
    if N < 3 or K < 1 or n < 1:
        return _rejected("decomposition: N, K, n out of range")
    if cert.base < 2:
        return _rejected("decomposition: base must be >= 2")
    if not is_probable_prime(p):
        return _rejected("decomposition: p is not prime")
    if K % p == 0:
        return _rejected("decomposition: p divides K")
    if K * p**n + 1 != N:
        return _rejected("decomposition: N != K*p^n + 1")
    if not (0 <= cert.witness_L < N):
        return _rejected("witness out of range")
    if cert.test is TestId.POCKLINGTON_FACTOR_FORM:
        return _rejected("PocklingtonFactorForm is a claim, not a primality certificate")

    try:
        form = ProthForm(K=K, p=p, n=n)
    except ValueError as exc:
        return _rejected(f"decomposition: {exc}")
    j = cert.j if cert.test in _J_TESTS else 0
    if cert.test not in _J_TESTS and cert.j != 0:
        return _rejected("side condition: j must be 0 for this test")
    for name, holds in side_conditions(cert.test, form, j, cert.base):
        if not holds:
            return _rejected(f"side condition: {name}")

    a, L = cert.base, cert.witness_L
    if cert.test in (TestId.ONE_SHOT, TestId.ONE_SHOT_J, TestId.CUBE_BOUND_J, TestId.SEVEN_BOUND_J):
        if L == 1 or pow(L, p ** (j + 1), N) != 1:
            return _rejected("condition (ii)")
        if pow(a, K * p ** (n - j - 1), N) != L:
            return _rejected("condition (i)")
    elif cert.test in (TestId.GRAU_PHI, TestId.GRAU_J):
        value, factor = _phi_p_mod(L, p, N)
        if factor is not None or value != 0:
            return _rejected("condition (ii)")
        if pow(a, K * p ** (n - j - 1), N) != L:
            return _rejected("condition (i)")
    elif cert.test is TestId.PROTH_1878:
        if L != N - 1:
            return _rejected("condition (ii)")
        if pow(a, (N - 1) // 2, N) != L:
            return _rejected("condition (i)")
    elif cert.test is TestId.POCKLINGTON_KPN:
        if pow(L, p, N) != 1 or gcd(L - 1, N) != 1:
            return _rejected("condition (ii)")
        if pow(a, (N - 1) // p, N) != L:
            return _rejected("condition (i)")
    else:
        if L != 1:
            return _rejected("condition (ii)")
        if pow(a, N - 1, N) != 1:
            return _rejected("condition (i)")
    return VerifyResult(True, "")
