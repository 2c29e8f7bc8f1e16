"""Numba-compiled conversion kernel; semantics match the Python loop."""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from numba import njit


@lru_cache(maxsize=64)
def psi_tables_np(p: int, q: int) -> tuple[np.ndarray, np.ndarray]:
    n = np.arange(p * q, dtype=np.int64)  # n = u + p*v, reshaped to (u, v)
    grid = (n.reshape(q, p).T).copy()
    return (grid % q).copy(), (grid // q).copy()


@njit(cache=True)
def convert_height_kernel(digits, first, second, heights, out):
    q = first.shape[1]
    ops = 0
    for m in range(len(digits) - 1, -1, -1):
        v = digits[m]
        h = heights[m]
        for i in range(h):
            d = out[i]
            out[i] = first[v, d]
            v = second[v, d]
        ops += h
    return ops
