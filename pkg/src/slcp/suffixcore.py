"""Suffix array, inverse, BWT and text-order LCP construction.

The suffix array is built by prefix doubling over numpy rank arrays, which is
O(n log n) per the number of doubling rounds.  Arrays hold 1-based values, so
``SA[x]`` is ``sa[x - 1]``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class SuffixArrayData:
    sa: np.ndarray
    isa: np.ndarray
    bwt: bytes
    c_array: list[int]

    @property
    def n(self) -> int:
        return len(self.sa)


def _doubling(sym: np.ndarray) -> np.ndarray:
    n = len(sym)
    if n == 1:
        return np.zeros(1, dtype=np.int64)
    _, rank = np.unique(sym, return_inverse=True)
    rank = rank.astype(np.int64)
    sa = np.argsort(rank, kind="stable")
    h = 1
    while True:
        second = np.zeros(n, dtype=np.int64)
        second[:n - h] = rank[h:] + 1
        key = rank * (n + 2) + second
        sa = np.argsort(key, kind="stable")
        ordered = key[sa]
        new = np.empty(n, dtype=np.int64)
        new[sa] = np.concatenate(([0], np.cumsum(ordered[1:] != ordered[:-1])))
        rank = new
        if rank[sa[-1]] == n - 1:
            return sa
        h *= 2


def c_array_of(symbols: bytes, num_ranks: int) -> list[int]:
    counts = np.bincount(np.frombuffer(symbols, dtype=np.uint8), minlength=num_ranks)
    return [0] + np.cumsum(counts).tolist()


def build_suffix_array(text) -> SuffixArrayData:
    sym = np.frombuffer(text.symbols, dtype=np.uint8)
    sa0 = _doubling(sym)
    n = len(sym)
    isa = np.empty(n, dtype=np.int64)
    isa[sa0] = np.arange(1, n + 1, dtype=np.int64)
    # L[x] = T[SA[x] - 1], and T[n] where SA[x] = 1 (index -1 wraps to it)
    bwt = sym[sa0 - 1].tobytes()
    return SuffixArrayData(sa0 + 1, isa, bwt, c_array_of(text.symbols, text.num_ranks))


def _check_consistent(sa, isa) -> None:
    sa = np.asarray(sa)
    isa = np.asarray(isa)
    if len(sa) != len(isa) or not np.array_equal(isa[sa - 1], np.arange(1, len(sa) + 1)):
        raise ValueError("suffix array and inverse suffix array are inconsistent")


def kasai_plcp(text, sa, isa) -> list[int]:
    """PLCP in text order; each comparison starts at the previous value minus one."""
    _check_consistent(sa, isa)
    t = text.symbols
    n = len(t)
    sa = np.asarray(sa).tolist()
    isa = np.asarray(isa).tolist()
    plcp = [0] * n
    h = 0
    for i in range(n):
        x = isa[i]
        if x == 1:
            h = 0
            continue
        j = sa[x - 2] - 1
        while t[i + h] == t[j + h]:
            h += 1
        plcp[i] = h
        if h:
            h -= 1
    return plcp


@dataclass(frozen=True)
class IrreducibleScan:
    plcp: list[int]
    naive_positions: list[int]
    comparisons: int


def irreducible_scan(text, sa) -> IrreducibleScan:
    """Compute irreducible PLCP values naively and reduce the rest from their predecessor."""
    t = text.symbols
    n = len(t)
    sa = np.asarray(sa)
    isa = np.empty(n, dtype=np.int64)
    isa[sa - 1] = np.arange(1, n + 1)
    sa = sa.tolist()
    isa = isa.tolist()
    plcp = [0] * n
    naive = []
    comparisons = 0
    for i in range(n):
        x = isa[i]
        if x == 1:
            naive.append(i + 1)
            continue
        j = sa[x - 2] - 1
        if i > 0 and j > 0 and t[i - 1] == t[j - 1]:
            plcp[i] = plcp[i - 1] - 1
            continue
        h = 0
        while t[i + h] == t[j + h]:
            h += 1
        comparisons += h + 1
        plcp[i] = h
        naive.append(i + 1)
    return IrreducibleScan(plcp, naive, comparisons)


def irreducible_plcp_from_text(text, sa) -> list[int]:
    return irreducible_scan(text, sa).plcp
