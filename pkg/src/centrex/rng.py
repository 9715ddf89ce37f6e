"""Deterministic random streams.

All randomness flows from a user seed through the counter-based Philox
bit generator, keyed by (seed, stream).  The same (seed, stream) pair
yields the same draws on every platform and under any execution order,
which is what makes the verification reports byte-reproducible.
"""

from __future__ import annotations

import numpy as np


def generator(seed, stream=0):
    key = np.array([np.uint64(seed), np.uint64(stream)], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))
