"""Counter-based random number streams.

Every stochastic routine takes a (seed, stream) pair and builds a Philox
generator keyed by it, so runs are reproducible bit-for-bit and parallel
work items can draw from disjoint streams without coordination.
"""

from __future__ import annotations

import numpy as np

__all__ = ["make_rng"]

_MASK64 = (1 << 64) - 1


def make_rng(seed: int, stream: int = 0) -> np.random.Generator:
    """Philox4x64 generator keyed by (seed, stream)."""
    key = np.array([seed & _MASK64, stream & _MASK64], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))
