"""Shared helpers: deterministic seeding and worker-count policy."""

from __future__ import annotations

import os
import zlib

import numpy as np


def stable_int(value) -> int:
    """Map a string (or int) to a stable non-negative integer.

    Python's builtin hash() is salted per process, so ids derived from it
    would break run-to-run reproducibility; crc32 is stable everywhere.
    """
    if isinstance(value, (int, np.integer)):
        return int(value) & 0xFFFFFFFF
    return zlib.crc32(str(value).encode("utf-8"))


def rng_for(*parts) -> np.random.Generator:
    """Deterministic Generator keyed by an ordered tuple of ints/strings."""
    return np.random.default_rng([stable_int(p) for p in parts])


def worker_count() -> int:
    """Worker parallelism cap, from MMFUSE_THREADS (default 1)."""
    raw = os.environ.get("MMFUSE_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n)
