"""Hardy-Littlewood style density estimators for a-SafePrimes.

Five estimators for the number of a-SafePrimes among the primes in
[f(a,n), f(a,n+1)), f(a,n) = a^(2n)/(2n): a first-derivative heuristic
(alpha1), a sum of twin-prime-style integrals (alpha2), two
birthday-style probability models over the K = 1..n multipliers
(alpha3, alpha4), and a per-K inclusion-exclusion (alpha5).  All are
stable far beyond float range; interval endpoints only ever enter
through their logarithms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath
import numpy as np
from scipy.integrate import quad
from scipy.special import expi

from prothforge.logreal import LogReal
from prothforge.numtheory import sieve_range
from prothforge.safeprimes import f_log_mpf

TWIN_PRIME_CONSTANT = 0.660161815846870

# alpha1 was tabulated at five-digit precision; reproducing the
# reference tabulation to print accuracy requires the same truncation
_C2_FIVE_DIGIT = 0.66016

_EULER_GAMMA_STR = "0.577215664901532860606512090082"
EULER_GAMMA = float(_EULER_GAMMA_STR)

# quadrature is preferred up to here; the asymptotic expansion of li
# already carries ~1e-14 relative floor at 1e15 and improves upward
_QUAD_LIMIT = 1.0e15
_QUAD_LOG_LIMIT = math.log(_QUAD_LIMIT)

# largest float exponent such that exp() stays finite with headroom
_EXP_CAP = 707.0

_DPS = 40


def twin_prime_constant(limit: int | None = None) -> float:
    """c2 = prod_{q>2} (1 - 1/(q-1)^2) over odd primes; with `limit`,
    the partial product up to limit (converges from above).
    """
    if limit is None:
        return TWIN_PRIME_CONSTANT
    qs = sieve_range(3, limit + 1).astype(np.float64)
    if len(qs) == 0:
        return 1.0
    return float(np.multiply.reduce(1.0 - 1.0 / (qs - 1.0) ** 2))


def _hl_ratio(K: int) -> float:
    """prod_{odd prime q | K} (q-1)/(q-2), the K-dependent part of C_K."""
    if K < 1:
        raise ValueError(f"need K >= 1, got {K}")
    m = K
    while m % 2 == 0:
        m //= 2
    ratio = 1.0
    q = 3
    while q * q <= m:
        if m % q == 0:
            ratio *= (q - 1) / (q - 2)
            while m % q == 0:
                m //= q
        q += 2
    if m > 1:
        ratio *= (m - 1) / (m - 2)
    return ratio


@dataclass(frozen=True)
class HLWeight:
    K: int
    ratio: float
    value: float


def hl_weight(K: int) -> HLWeight:
    """C_K = c2 * prod_{odd q | K} (q-1)/(q-2)."""
    ratio = _hl_ratio(K)
    return HLWeight(K=K, ratio=ratio, value=TWIN_PRIME_CONSTANT * ratio)


@dataclass(frozen=True)
class CkSums:
    """c2-free weight sums over K = 1..n: R0 = sum ratio_K,
    R1 = sum ratio_K ln K, R2 = sum ratio_K ln^2 K, Rsq = sum ratio_K^2.
    """

    n: int
    R0: float
    R1: float
    R2: float
    Rsq: float


_CK_VECTOR_MIN = 2000
_CK_CHUNK = 1 << 22


def _ratio_vector(n: int) -> np.ndarray:
    """ratio_K for K = 0..n (index 0 unused, kept 0)."""
    flags = np.ones(n + 1, dtype=bool)
    flags[:2] = False
    for q in range(2, math.isqrt(n) + 1):
        if flags[q]:
            flags[q * q :: q] = False
    ratios = np.ones(n + 1, dtype=np.float64)
    ratios[0] = 0.0
    for q in np.flatnonzero(flags):
        q = int(q)
        if q == 2:
            continue
        ratios[q::q] *= (q - 1.0) / (q - 2.0)
    return ratios


@lru_cache(maxsize=8)
def _ck_sums(n: int) -> CkSums:
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n < _CK_VECTOR_MIN:
        r0 = r1 = r2 = rsq = 0.0
        for K in range(1, n + 1):
            r = _hl_ratio(K)
            lk = math.log(K)
            r0 += r
            r1 += r * lk
            r2 += r * lk * lk
            rsq += r * r
        return CkSums(n=n, R0=r0, R1=r1, R2=r2, Rsq=rsq)
    ratios = _ratio_vector(n)
    r0 = r1 = r2 = rsq = 0.0
    for start in range(1, n + 1, _CK_CHUNK):
        stop = min(start + _CK_CHUNK, n + 1)
        chunk = ratios[start:stop]
        lk = np.log(np.arange(start, stop, dtype=np.float64))
        r0 += float(chunk.sum())
        r1 += float((chunk * lk).sum())
        r2 += float((chunk * lk * lk).sum())
        rsq += float((chunk * chunk).sum())
    return CkSums(n=n, R0=r0, R1=r1, R2=r2, Rsq=rsq)


# ---------------------------------------------------------------------------
# logarithmic integrals


def _li_quad(u0: float, u1: float) -> float:
    """int e^u/u du over [u0, u1] = li(e^u1) - li(e^u0), for 0 < u0."""
    val = quad(lambda u: math.exp(u) / u, u0, u1, epsabs=0.0, epsrel=1e-12,
               limit=200, full_output=1)[0]
    return float(val)


def _li2_quad(u0: float, u1: float, ln_m: float) -> float:
    """int e^u/(u (u + ln M)) du over [u0, u1]."""
    val = quad(lambda u: math.exp(u) / (u * (u + ln_m)), u0, u1, epsabs=0.0,
               epsrel=1e-12, limit=200, full_output=1)[0]
    return float(val)


def _li_point(u: mpmath.mpf) -> mpmath.mpf:
    """li(e^u) by the divergent asymptotic series, truncated at its
    smallest term: e^u/u * sum_k k!/u^k.  Relative error ~ e^-u.
    """
    with mpmath.workdps(_DPS):
        u = mpmath.mpf(u)
        if u < 40:
            return mpmath.li(mpmath.exp(u))
        term = mpmath.exp(u) / u
        total = mpmath.mpf(0)
        k = 0
        while True:
            total += term
            k += 1
            if k >= u or k > 300:
                break
            nxt = term * k / u
            if nxt < total * mpmath.mpf("1e-39"):
                total += nxt
                break
            term = nxt
        return total


def _coerce_log(x: int | float | LogReal, name: str) -> mpmath.mpf:
    with mpmath.workdps(_DPS):
        if isinstance(x, LogReal):
            if x.sign <= 0:
                raise ValueError(f"{name} must be positive")
            return x.log_magnitude
        if isinstance(x, (int, float)):
            if x <= 0:
                raise ValueError(f"{name} must be positive, got {x}")
            return mpmath.log(mpmath.mpf(x))
        raise TypeError(f"{name} must be int, float, or LogReal")


def _as_result(log_val: mpmath.mpf) -> float | LogReal:
    if log_val < _EXP_CAP:
        return float(mpmath.exp(log_val))
    return LogReal.from_log(log_val)


def li(x_lo, x_hi, method: str = "auto") -> float | LogReal:
    """int_{x_lo}^{x_hi} dt/ln t, for 2 <= x_lo <= x_hi.

    Endpoints may be ints, floats, or LogReal.  Below 1e15 the integral
    is evaluated by adaptive quadrature; above, by the truncated
    asymptotic series for li; a straddling range is split.  `method`
    forces "quadrature" or "asymptotic" for cross-checks.
    """
    u_lo = _coerce_log(x_lo, "x_lo")
    u_hi = _coerce_log(x_hi, "x_hi")
    if u_lo < math.log(2) - 1e-12:
        raise ValueError("x_lo must be >= 2")
    if u_hi < u_lo:
        raise ValueError("need x_lo <= x_hi")
    if u_hi == u_lo:
        return 0.0
    if method not in ("auto", "quadrature", "asymptotic"):
        raise ValueError(f"unknown method {method!r}")
    if method == "quadrature" or (method == "auto" and u_hi <= _QUAD_LOG_LIMIT):
        if u_hi > _EXP_CAP:
            raise ValueError("quadrature endpoint overflows float range")
        return _li_quad(float(u_lo), float(u_hi))
    if method == "auto" and u_lo < _QUAD_LOG_LIMIT:
        head = _li_quad(float(u_lo), _QUAD_LOG_LIMIT)
        with mpmath.workdps(_DPS):
            tail = _li_point(u_hi) - _li_point(mpmath.mpf(_QUAD_LOG_LIMIT))
            return _as_result(mpmath.log(tail + head))
    with mpmath.workdps(_DPS):
        delta = _li_point(u_hi) - _li_point(u_lo)
        if delta <= 0:
            return 0.0
        return _as_result(mpmath.log(delta))


def li2(x_lo, x_hi, K: int, method: str = "auto") -> float | LogReal:
    """int_{x_lo}^{x_hi} dt/(ln t * ln(2Kt)), for 2 <= x_lo <= x_hi.

    Same endpoint conventions and tiering as li().  Above the
    quadrature range the integral is reduced to li differences through
    1/(u(u+m)) = (1/u - 1/(u+m))/m with m = ln 2K.
    """
    if K < 1:
        raise ValueError(f"need K >= 1, got {K}")
    u_lo = _coerce_log(x_lo, "x_lo")
    u_hi = _coerce_log(x_hi, "x_hi")
    if u_lo < math.log(2) - 1e-12:
        raise ValueError("x_lo must be >= 2")
    if u_hi < u_lo:
        raise ValueError("need x_lo <= x_hi")
    if u_hi == u_lo:
        return 0.0
    if method not in ("auto", "quadrature", "asymptotic"):
        raise ValueError(f"unknown method {method!r}")
    ln_m = math.log(2 * K)
    if method == "quadrature" or (method == "auto" and u_hi <= _QUAD_LOG_LIMIT):
        if u_hi > _EXP_CAP:
            raise ValueError("quadrature endpoint overflows float range")
        return _li2_quad(float(u_lo), float(u_hi), ln_m)
    if method == "auto" and u_lo < _QUAD_LOG_LIMIT:
        head = _li2_quad(float(u_lo), _QUAD_LOG_LIMIT, ln_m)
        with mpmath.workdps(_DPS):
            tail = _li2_asym(mpmath.mpf(_QUAD_LOG_LIMIT), u_hi, ln_m)
            return _as_result(mpmath.log(tail + head))
    with mpmath.workdps(_DPS):
        delta = _li2_asym(u_lo, u_hi, ln_m)
        if delta <= 0:
            return 0.0
        return _as_result(mpmath.log(delta))


def _li2_asym(u_lo: mpmath.mpf, u_hi: mpmath.mpf, ln_m: float) -> mpmath.mpf:
    """int e^u/(u(u+m)) du over [u_lo, u_hi] via scaled li differences."""
    with mpmath.workdps(_DPS):
        m = mpmath.mpf(ln_m)
        base = _li_point(u_hi) - _li_point(u_lo)
        if m == 0:
            # int e^u/u^2 = li(e^u) - e^u/u
            edge = mpmath.exp(u_hi) / u_hi - mpmath.exp(u_lo) / u_lo
            return base - edge
        shifted = _li_point(u_hi + m) - _li_point(u_lo + m)
        return (base - shifted * mpmath.exp(-m)) / m


# ---------------------------------------------------------------------------
# scaled-integral expansion shared by the far tiers of alpha2/alpha5
#
# With u0 = ln f(a,n) and d = ln f(a,n+1) - u0, define
#   I_s = e^{-u0} int_{u0}^{u0+d} e^u / u^s du.
# Three integrations by parts give, with E0 = expm1(d),
# E1 = (d-1)e^d + 1, E2 = (d^2-2d+2)e^d - 2:
#   I_s ~ u0^{-s} (E0 - s E1/u0 + s(s+1) E2 / (2 u0^2)),
# relative error O((d/u0)^3); used only when u0 is in the hundreds.


def _i_coeffs(u0: float, d: float) -> tuple[float, float, float, float]:
    e0 = math.expm1(d)
    ed = math.exp(d)
    e1 = (d - 1.0) * ed + 1.0
    e2 = (d * d - 2.0 * d + 2.0) * ed - 2.0
    out = []
    for s in (1, 2, 3, 4):
        out.append(
            (e0 - s * e1 / u0 + s * (s + 1) * e2 / (2.0 * u0 * u0)) / u0**s
        )
    return tuple(out)


def _interval_logs(a: int, n: int) -> tuple[mpmath.mpf, mpmath.mpf]:
    return f_log_mpf(a, n), f_log_mpf(a, n + 1)


def _li2_weighted_sum(a: int, n: int, kt_scale: int) -> float | LogReal:
    """sum_{K<=n} ratio_K * int_f^{f'} dt/(ln t ln(kt_scale*K*t)), no c2.

    Evaluated by per-K quadrature below 1e15, a vectorized Ei identity
    while the scaled exponents stay in float range, and the scaled
    three-term expansion beyond (returned as LogReal when e^{u} itself
    no longer fits a float).
    """
    u0m, u1m = _interval_logs(a, n)
    u0, u1 = float(u0m), float(u1m)
    d = float(u1m - u0m)
    ln_s = math.log(kt_scale)
    if u1 <= _QUAD_LOG_LIMIT:
        lo = max(u0, math.log(2.0))
        total = 0.0
        for K in range(1, n + 1):
            total += _hl_ratio(K) * _li2_quad(lo, u1, ln_s + math.log(K))
        return total
    if u1 + ln_s + math.log(n) < _EXP_CAP:
        ratios = np.array([_hl_ratio(K) for K in range(1, n + 1)])
        ms = ln_s + np.log(np.arange(1, n + 1, dtype=np.float64))
        e_lo, e_hi = expi(u0), expi(u1)
        vals = np.empty(n, dtype=np.float64)
        if ms[0] == 0.0:
            # K = 1 at scale 1 has m = 0: li2 degenerates to int e^u/u^2
            vals[0] = (e_hi - math.exp(u1) / u1) - (e_lo - math.exp(u0) / u0)
            nz = slice(1, None)
        else:
            nz = slice(0, None)
        m = ms[nz]
        vals[nz] = ((e_hi - e_lo) - (expi(u1 + m) - expi(u0 + m)) * np.exp(-m)) / m
        return float(np.dot(ratios, vals))
    # far tier: everything scaled by e^{-u0}
    sums = _ck_sums(n)
    s0 = sums.R0
    s1 = ln_s * sums.R0 + sums.R1
    s2 = ln_s * ln_s * sums.R0 + 2.0 * ln_s * sums.R1 + sums.R2
    _, i2, i3, i4 = _i_coeffs(u0, d)
    scaled_total = s0 * i2 - s1 * i3 + s2 * i4
    with mpmath.workdps(_DPS):
        log_total = u0m + mpmath.log(mpmath.mpf(scaled_total))
    if log_total < _EXP_CAP:
        return float(mpmath.exp(log_total))
    return LogReal.from_log(log_total)


# ---------------------------------------------------------------------------
# the five estimators


def alpha1(a: int, n: int) -> float | LogReal:
    """2 c2 (f'/ln^2 f' - f/ln^2 f) sum_K ratio_K, with the tabulated
    five-digit c2.
    """
    _check_an(a, n)
    u0m, u1m = _interval_logs(a, n)
    r0 = _ck_sums(n).R0
    coef = 2.0 * _C2_FIVE_DIGIT * r0
    if float(u1m) < _EXP_CAP:
        f0, f1 = float(mpmath.exp(u0m)), float(mpmath.exp(u1m))
        lu0, lu1 = float(u0m), float(u1m)
        return coef * (f1 / (lu1 * lu1) - f0 / (lu0 * lu0))
    with mpmath.workdps(_DPS):
        # f'/ln^2 f' (1 - (f/f')(ln f'/ln f)^2), log domain
        ratio = mpmath.exp(u0m - u1m) * (u1m / u0m) ** 2
        log_val = u1m - 2 * mpmath.log(u1m) + mpmath.log1p(-ratio) + mpmath.log(coef)
        return LogReal.from_log(log_val)


def alpha2(a: int, n: int) -> float | LogReal:
    """2 sum_{K<=n} C_K int_f^{f'} dt/(ln t ln 2Kt)."""
    _check_an(a, n)
    return 2.0 * TWIN_PRIME_CONSTANT * _li2_weighted_sum(a, n, kt_scale=2)


def _wide_interval_logs(a: int, n: int) -> tuple[mpmath.mpf, mpmath.mpf]:
    """Logs of 2f(a,n) and 2n f(a,n+1), the candidate range 2Kp+1 sweeps."""
    u0m, u1m = _interval_logs(a, n)
    with mpmath.workdps(_DPS):
        return u0m + mpmath.log(2), u1m + mpmath.log(2 * n)


def alpha3(a: int, n: int, method: str = "auto") -> float | None:
    """Coupon-style model: 1 - (1-rho)^m with rho the prime density of
    the candidate range against the Mertens-product trial density and
    m = 4 e^-gamma n / (2 ln n) draws.  Undefined at n = 1.
    """
    _check_an(a, n)
    if n == 1:
        return None
    lo_m, hi_m = _wide_interval_logs(a, n)
    use_log = method == "log" or (method == "auto" and float(hi_m) > _EXP_CAP)
    if method not in ("auto", "direct", "log"):
        raise ValueError(f"unknown method {method!r}")
    coef = 2.0 * math.exp(-EULER_GAMMA) / (2.0 * math.log(n))
    m_draws = n * 2.0 * coef
    if not use_log:
        x_lo, x_hi = math.exp(float(lo_m)), math.exp(float(hi_m))
        dets = li(x_lo, x_hi)
        rho = float(dets) / (coef * (x_hi - x_lo))
        return _one_minus_pow(rho, m_draws)
    with mpmath.workdps(_DPS):
        li_delta = _li_point(hi_m) - _li_point(lo_m)
        width = mpmath.exp(hi_m) * (-mpmath.expm1(lo_m - hi_m))
        rho = li_delta / (coef * width)
        return _one_minus_pow_mpf(rho, m_draws)


def alpha4(a: int, n: int, method: str = "auto") -> float:
    """Uniform model: 1 - (1 - 2 li(2f, 2nf')/(2nf' - 2f))^n."""
    _check_an(a, n)
    lo_m, hi_m = _wide_interval_logs(a, n)
    use_log = method == "log" or (method == "auto" and float(hi_m) > _EXP_CAP)
    if method not in ("auto", "direct", "log"):
        raise ValueError(f"unknown method {method!r}")
    if not use_log:
        x_lo, x_hi = math.exp(float(lo_m)), math.exp(float(hi_m))
        arg = 2.0 * float(li(x_lo, x_hi)) / (x_hi - x_lo)
        return _one_minus_pow(arg, float(n))
    with mpmath.workdps(_DPS):
        li_delta = _li_point(hi_m) - _li_point(lo_m)
        width = mpmath.exp(hi_m) * (-mpmath.expm1(lo_m - hi_m))
        return _one_minus_pow_mpf(2 * li_delta / width, float(n))


def _one_minus_pow(p: float, exponent: float) -> float:
    """1 - (1-p)^exponent, stable for tiny p; handles p >= 1 literally."""
    if p < 1.0:
        return -math.expm1(exponent * math.log1p(-p))
    return 1.0 - (1.0 - p) ** exponent


def _one_minus_product(zs) -> float:
    """1 - prod (1 - z_K), literal; the log1p route when every factor is
    positive (the early intervals push z past 1, like alpha4 at n = 1).
    """
    if any(z >= 1.0 for z in zs):
        out = 1.0
        for z in zs:
            out *= 1.0 - z
        return 1.0 - out
    return -math.expm1(math.fsum(math.log1p(-z) for z in zs))


def _one_minus_pow_mpf(p: mpmath.mpf, exponent: float) -> float:
    with mpmath.workdps(_DPS):
        if p < 1:
            return float(-mpmath.expm1(exponent * mpmath.log1p(-p)))
        return float(1 - (1 - p) ** mpmath.mpf(exponent))


def alpha5(a: int, n: int) -> float:
    """Per-multiplier inclusion-exclusion:
    1 - prod_{K<=n} (1 - 2 C_K li2_K / li), with li2_K carrying ln(Kt).

    The reference tabulation absorbs the doubling of K into the
    integral's scale, so the per-K logarithm is ln(Kt), not ln(2Kt).
    """
    _check_an(a, n)
    u0m, u1m = _interval_logs(a, n)
    u0, u1 = float(u0m), float(u1m)
    c2 = TWIN_PRIME_CONSTANT
    if u1 <= _QUAD_LOG_LIMIT:
        lo = max(u0, math.log(2.0))
        li_all = _li_quad(lo, u1)
        zs = []
        for K in range(1, n + 1):
            if K == 1:
                # m = ln(1*K) = 0: quadrature on e^u/u^2 directly
                val = quad(lambda u: math.exp(u) / (u * u), lo, u1, epsabs=0.0,
                           epsrel=1e-12, limit=200, full_output=1)[0]
            else:
                val = _li2_quad(lo, u1, math.log(K))
            zs.append(2.0 * c2 * _hl_ratio(K) * val / li_all)
        return _one_minus_product(zs)
    if u1 + math.log(n) < _EXP_CAP:
        ratios = np.array([_hl_ratio(K) for K in range(1, n + 1)])
        ms = np.log(np.arange(1, n + 1, dtype=np.float64))
        e_lo, e_hi = expi(u0), expi(u1)
        vals = np.empty(n, dtype=np.float64)
        vals[0] = (e_hi - math.exp(u1) / u1) - (e_lo - math.exp(u0) / u0)
        vals[1:] = ((e_hi - e_lo)
                    - (expi(u1 + ms[1:]) - expi(u0 + ms[1:])) * np.exp(-ms[1:])) / ms[1:]
        li_all = e_hi - e_lo
        zs = 2.0 * c2 * ratios * vals / li_all
        if bool(np.any(zs >= 1.0)):
            return 1.0 - float(np.prod(1.0 - zs))
        return -math.expm1(float(np.log1p(-zs).sum()))
    # far tier: z_K ~ (2 c2 ratio_K / I1) (I2 - ln K I3 + ln^2 K I4) is
    # tiny, so sum z + z^2/2 suffices; the z^2 cross terms collapse to
    # Rsq because the ln K corrections are second order themselves
    sums = _ck_sums(n)
    d = float(u1m - u0m)
    i1, i2, i3, i4 = _i_coeffs(u0, d)
    z_lin = 2.0 * c2 * (sums.R0 * i2 - sums.R1 * i3 + sums.R2 * i4) / i1
    z_sq = (2.0 * c2 * i2 / i1) ** 2 * sums.Rsq
    return -math.expm1(-(z_lin + 0.5 * z_sq))


def mertens_odd_product(n: int) -> tuple[float, float]:
    """(prod_{2<q<=n} (q-1)/q over odd primes, its asymptotic
    2 e^-gamma / ln n); the empty product is 1.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    qs = sieve_range(3, n + 1).astype(np.float64)
    exact = float(np.multiply.reduce((qs - 1.0) / qs)) if len(qs) else 1.0
    approx = 2.0 * math.exp(-EULER_GAMMA) / math.log(n)
    return exact, approx


def _check_an(a: int, n: int) -> None:
    if a < 2 or n < 1:
        raise ValueError(f"need a >= 2 and n >= 1, got a={a}, n={n}")


def li_interval(a: int, n: int) -> float | LogReal:
    """li over [f(a,n), f(a,n+1)), the expected prime count there."""
    _check_an(a, n)
    u0m, u1m = _interval_logs(a, n)
    if float(u1m) <= _QUAD_LOG_LIMIT:
        return _li_quad(max(float(u0m), math.log(2.0)), float(u1m))
    with mpmath.workdps(_DPS):
        delta = _li_point(u1m) - _li_point(u0m)
        return _as_result(mpmath.log(delta))


def expected_sgp(a: int, n: int, which: int) -> float | LogReal | None:
    """alpha_which * li over the interval: the modelled a-SGP count."""
    if which not in (1, 2, 3, 4, 5):
        raise ValueError(f"which must be 1..5, got {which}")
    _check_an(a, n)
    if which == 1:
        return alpha1(a, n)
    if which == 2:
        return alpha2(a, n)
    alpha = {3: alpha3, 4: alpha4}.get(which, alpha5)(a, n)
    if alpha is None:
        return None
    base = li_interval(a, n)
    if isinstance(base, LogReal):
        return base * alpha
    return alpha * base


@dataclass(frozen=True)
class EstimateReport:
    a: int
    n: int
    alpha1: float | LogReal
    alpha2: float | LogReal
    alpha3: float | None
    alpha4: float
    alpha5: float
    li_interval: float | LogReal
    expected: dict


def estimate_report(a: int, n: int) -> EstimateReport:
    """All five estimators plus the interval prime mass, computed once."""
    _check_an(a, n)
    a1 = alpha1(a, n)
    a2 = alpha2(a, n)
    a3 = alpha3(a, n)
    a4 = alpha4(a, n)
    a5 = alpha5(a, n)
    base = li_interval(a, n)

    def scaled(alpha):
        if alpha is None:
            return None
        if isinstance(base, LogReal):
            return base * alpha
        return alpha * base

    expected = {1: a1, 2: a2, 3: scaled(a3), 4: scaled(a4), 5: scaled(a5)}
    return EstimateReport(
        a=a, n=n, alpha1=a1, alpha2=a2, alpha3=a3, alpha4=a4, alpha5=a5,
        li_interval=base, expected=expected,
    )
