"""Process-wide runtime knobs, overridable through environment variables.

PROTHFORGE_MEMORY_MB   sieve memory budget in MiB (default 256)
PROTHFORGE_SEED        seed for all randomized base/witness choices (default 0)
PROTHFORGE_THREADS     worker threads for table/scan commands (default 1)
"""

from __future__ import annotations

import os

DEFAULT_MEMORY_MB = 256
DEFAULT_SEED = 0
DEFAULT_THREADS = 1


class MemoryBudgetError(RuntimeError):
    """A sieve or scan would exceed the configured memory budget."""


def _env_int(name: str, default: int, minimum: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        return default
    return max(value, minimum)


def memory_budget_bytes() -> int:
    return _env_int("PROTHFORGE_MEMORY_MB", DEFAULT_MEMORY_MB, 1) * 1024 * 1024


def prng_seed() -> int:
    return _env_int("PROTHFORGE_SEED", DEFAULT_SEED, -(1 << 63))


def thread_count() -> int:
    return _env_int("PROTHFORGE_THREADS", DEFAULT_THREADS, 1)
