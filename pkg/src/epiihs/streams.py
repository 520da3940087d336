"""Counter-based random streams for chunked Monte Carlo.

Each chunk of work gets its own Philox generator keyed by ``(seed, chunk)``.
A chunk's draws therefore depend only on those two integers, never on which
worker ran it or in what order, and estimates reduce bit-identically for
any worker count.
"""

from __future__ import annotations

import os

import numpy as np

CHUNK_SIZE = 1 << 16
THREADS_ENV = "EPIIHS_THREADS"

_U64 = (1 << 64) - 1


def chunk_generator(seed: int, chunk: int) -> np.random.Generator:
    if not 0 <= seed <= _U64:
        raise ValueError(f"seed must fit in an unsigned 64-bit integer, got {seed}")
    key = np.array([seed, chunk], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def chunk_sizes(n_samples: int, chunk_size: int = CHUNK_SIZE) -> list[int]:
    full, rest = divmod(n_samples, chunk_size)
    return [chunk_size] * full + ([rest] if rest else [])


def worker_count() -> int:
    """Worker count from ``EPIIHS_THREADS``, defaulting to the CPU count."""
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw.strip() == "":
        return os.cpu_count() or 1
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise ValueError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return n
