"""Constant-radix conversion with a precomputed rewrite table.

The base-p digits are fed column by column (most significant first) into a
triangular lattice fill; every cell is one lookup in the p*q table of
``psi(p, q, ., .)``, so the inner loop performs no division at all.  Column
heights are bounded exactly: digits above the smallest h with
``q**h >= p**(k-m)`` are provably zero.

Large inputs are dispatched to a numba-compiled kernel with identical
semantics; set ``engine="python"`` to force the reference loop.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from typing import Sequence

from .core import PreconditionError, psi


class CapacityError(PreconditionError):
    """Requested table exceeds the configured size budget."""


#: env var overriding the default table budget (number of entries)
TABLE_CAP_ENV = "MIXEDRADIX_TABLE_CAP"
DEFAULT_TABLE_CAP = 1 << 24


def _table_cap() -> int:
    return int(os.environ.get(TABLE_CAP_ENV, DEFAULT_TABLE_CAP))


@dataclass(frozen=True)
class PsiTable:
    """Dense p*q table: entry (u, v) stores psi(p, q, u, v)."""

    p: int
    q: int
    # flat layout, index u*q + v, two packed outputs per entry
    first: tuple[int, ...]
    second: tuple[int, ...]

    def lookup(self, u: int, v: int) -> tuple[int, int]:
        i = u * self.q + v
        return self.first[i], self.second[i]


def build_table(p: int, q: int, cap: int | None = None) -> PsiTable:
    """Tabulate psi(p, q) with exactly p*q division-based evaluations."""
    if p < 2 or q < 2:
        raise PreconditionError(f"radices must be >= 2, got ({p}, {q})")
    cap = _table_cap() if cap is None else cap
    if p * q > cap:
        raise CapacityError(f"table of {p * q} entries exceeds budget {cap}")
    first = []
    second = []
    for u in range(p):
        for v in range(q):
            v2, u2 = psi(p, q, u, v)
            first.append(v2)
            second.append(u2)
    return PsiTable(p, q, tuple(first), tuple(second))


@dataclass
class ConversionStats:
    psi_applications: int = 0
    divisions_in_inner_loop: int = 0
    columns: int = 0


_last = threading.local()


def conversion_stats() -> ConversionStats:
    """Stats of the most recent conversion on this thread."""
    stats = getattr(_last, "stats", None)
    if stats is None:
        raise PreconditionError("no conversion has run yet")
    return stats


def column_height(k_total: int, m: int, p: int, q: int) -> int:
    """Smallest h with q**h >= p**(k_total - m); exact integer comparison."""
    if not (0 <= m < k_total):
        raise PreconditionError(f"column index {m} out of range 0..{k_total - 1}")
    target = p ** (k_total - m)
    h, qh = 0, 1
    while qh < target:
        qh *= q
        h += 1
    return h


def _column_heights(k: int, p: int, q: int) -> list[int]:
    # heights[m] for m = 0..k-1, maintained with running products
    heights = [0] * k
    pk, qh, h = 1, 1, 0
    for j in range(1, k + 1):  # j = k - m
        pk *= p
        while qh < pk:
            qh *= q
            h += 1
        heights[k - j] = h
    return heights


def _convert_height_py(digits, table: PsiTable, heights) -> tuple[list[int], int]:
    first, second, q = table.first, table.second, table.q
    out: list[int] = []
    ops = 0
    for m in range(len(digits) - 1, -1, -1):
        v = digits[m]
        h = heights[m]
        if len(out) < h:
            out.extend([0] * (h - len(out)))
        for i in range(h):
            idx = v * q + out[i]
            out[i] = first[idx]
            v = second[idx]
        ops += h
        if v != 0:
            raise AssertionError("carry escaped the exact height bound")
    return out, ops


def _convert_carry_py(digits, table: PsiTable) -> tuple[list[int], int]:
    # while-loop variant: no height precomputation, extend on carry
    first, second, q = table.first, table.second, table.q
    out: list[int] = []
    ops = 0
    for m in range(len(digits) - 1, -1, -1):
        v = digits[m]
        i = 0
        while i < len(out) or v != 0:
            if i == len(out):
                out.append(0)
            idx = v * q + out[i]
            out[i] = first[idx]
            v = second[idx]
            i += 1
            ops += 1
    return out, ops


def _convert_numba(digits, p: int, q: int, heights):
    import numpy as np

    from ._kernels import convert_height_kernel, psi_tables_np

    first, second = psi_tables_np(p, q)
    a = np.asarray(digits, dtype=np.int64)
    hs = np.asarray(heights, dtype=np.int64)
    out = np.zeros(heights[0] if heights else 1, dtype=np.int64)
    ops = convert_height_kernel(a, first, second, hs, out)
    return out.tolist(), int(ops)


_NUMBA_THRESHOLD = 512


def convert_radix(
    digits_p: Sequence[int],
    p: int,
    q: int,
    pad_to: int | None = None,
    mode: str = "height",
    engine: str = "auto",
    table: PsiTable | None = None,
) -> list[int]:
    """Little-endian base-p digits -> little-endian base-q digits.

    Output is stripped to the minimal canonical length (a single 0 for the
    value zero) unless ``pad_to`` asks for zero padding.  When p*q exceeds
    the table budget the conversion falls back to per-cell psi calls (slow
    path, divisions counted honestly in the stats).
    """
    digits = [int(a) for a in digits_p]
    for a in digits:
        if not (0 <= a < p):
            raise PreconditionError(f"digit {a} out of range for radix {p}")
    if mode not in ("height", "carry"):
        raise PreconditionError(f"unknown mode {mode!r}")
    k = len(digits)

    slow_path = False
    if table is None:
        try:
            table = build_table(p, q)
        except CapacityError:
            slow_path = True

    stats = ConversionStats(columns=k)
    if k == 0:
        out: list[int] = []
    elif slow_path:
        out, ops = _convert_slow(digits, p, q, _column_heights(k, p, q))
        stats.psi_applications = ops
        stats.divisions_in_inner_loop = ops
    elif mode == "carry":
        out, ops = _convert_carry_py(digits, table)
        stats.psi_applications = ops
    else:
        heights = _column_heights(k, p, q)
        use_numba = engine == "numba" or (engine == "auto" and k >= _NUMBA_THRESHOLD)
        if engine not in ("auto", "numba", "python"):
            raise PreconditionError(f"unknown engine {engine!r}")
        if use_numba:
            try:
                out, ops = _convert_numba(digits, p, q, heights)
            except ImportError:
                out, ops = _convert_height_py(digits, table, heights)
        else:
            out, ops = _convert_height_py(digits, table, heights)
        stats.psi_applications = ops

    while len(out) > 1 and out[-1] == 0:
        out.pop()
    if not out:
        out = [0]
    if pad_to is not None:
        if pad_to < len(out):
            raise PreconditionError(f"pad_to {pad_to} shorter than result ({len(out)} digits)")
        out.extend([0] * (pad_to - len(out)))
    _last.stats = stats
    return out


def _convert_slow(digits, p, q, heights):
    # no table: one psi (with its division) per cell
    out: list[int] = []
    ops = 0
    for m in range(len(digits) - 1, -1, -1):
        v = digits[m]
        h = heights[m]
        if len(out) < h:
            out.extend([0] * (h - len(out)))
        for i in range(h):
            out[i], v = psi(p, q, v, out[i])
        ops += h
    return out, ops
