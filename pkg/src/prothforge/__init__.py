"""Primality certificates for N = K*p^n + 1, safe-prime classification,
and Hardy-Littlewood density estimators."""

from prothforge.certificates import (
    Certificate,
    ProthForm,
    Status,
    TestId,
    TestOutcome,
    auto_decompose,
    certify,
    decompose,
    max_admissible_j,
    verify_certificate,
)
from prothforge.density import EstimateReport, estimate_report
from prothforge.safeprimes import (
    SGPRecord,
    SafePrimeHit,
    classify_sgp,
    count_interval,
    interval_index,
    is_a_safeprime,
    max_valid_k,
    mersenne_sgp_scan,
)

__version__ = "0.1.0"

__all__ = [
    "Certificate",
    "EstimateReport",
    "ProthForm",
    "SGPRecord",
    "SafePrimeHit",
    "Status",
    "TestId",
    "TestOutcome",
    "auto_decompose",
    "certify",
    "classify_sgp",
    "count_interval",
    "decompose",
    "estimate_report",
    "interval_index",
    "is_a_safeprime",
    "max_admissible_j",
    "max_valid_k",
    "mersenne_sgp_scan",
    "verify_certificate",
]
