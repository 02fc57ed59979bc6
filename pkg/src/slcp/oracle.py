"""Brute-force reference arrays.

Quadratic in the worst case and meant only as ground truth for tests and the
``verify`` command.  Suffixes are ordered by direct comparison of their symbol
ranks; common prefixes are measured character by character.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key

SA_LIMIT = 10**6
LCP_LIMIT = 1 << 17


class OracleLimitError(ValueError):
    pass


@dataclass(frozen=True)
class RefArrays:
    sa: list[int]
    isa: list[int]
    lcp: list[int]
    plcp: list[int]
    bwt: bytes
    irreducible: list[bool]  # irreducible[i - 1] for text position i

    @property
    def n(self) -> int:
        return len(self.sa)

    @property
    def runs(self) -> int:
        b = self.bwt
        return sum(1 for k in range(len(b)) if k == 0 or b[k] != b[k - 1])


def _compare_suffixes(buf: bytes):
    def cmp(i: int, j: int) -> int:
        w = 32
        k = 0
        while True:
            a, b = buf[i + k:i + k + w], buf[j + k:j + k + w]
            if a != b:
                return -1 if a < b else 1
            k += w
            w *= 2

    return cmp


def _common_prefix(buf: bytes, i: int, j: int) -> int:
    """Length of the common prefix of ``buf[i:]`` and ``buf[j:]`` (0-based)."""
    k = 0
    w = 64
    while True:
        a, b = buf[i + k:i + k + w], buf[j + k:j + k + w]
        if a == b and len(a) == w:
            k += w
            continue
        for t in range(min(len(a), len(b))):
            if a[t] != b[t]:
                return k + t
        return k + min(len(a), len(b))


def _sorted_suffixes(symbols: bytes) -> list[int]:
    order = sorted(range(len(symbols)), key=cmp_to_key(_compare_suffixes(symbols)))
    return [p + 1 for p in order]


def naive_suffix_array(text, max_n: int = SA_LIMIT) -> list[int]:
    n = len(text.symbols)
    if n > max_n:
        raise OracleLimitError(f"text of length {n} exceeds the oracle limit {max_n}")
    return _sorted_suffixes(text.symbols)


def _reference(symbols: bytes, compare_buf: bytes, max_n: int) -> RefArrays:
    n = len(symbols)
    if n > max_n:
        raise OracleLimitError(f"text of length {n} exceeds the oracle limit {max_n}")
    sa = _sorted_suffixes(symbols)
    isa = [0] * n
    for x, p in enumerate(sa, 1):
        isa[p - 1] = x
    lcp = [0] * n
    for x in range(1, n):
        lcp[x] = _common_prefix(compare_buf, sa[x - 1] - 1, sa[x] - 1)
    plcp = [0] * n
    for x, p in enumerate(sa):
        plcp[p - 1] = lcp[x]
    bwt = bytes(symbols[p - 2] if p > 1 else symbols[n - 1] for p in sa)
    irreducible = [True] * n
    for i in range(2, n + 1):
        x = isa[i - 1]
        if x == 1:
            continue
        j = sa[x - 2]
        if j > 1 and symbols[i - 2] == symbols[j - 2]:
            irreducible[i - 1] = False
    return RefArrays(sa, isa, lcp, plcp, bwt, irreducible)


def naive_reference(text, max_n: int = LCP_LIMIT) -> RefArrays:
    """Reference SA, ISA, LCP, PLCP, BWT and irreducibility flags of ``text``."""
    return _reference(text.symbols, text.symbols, max_n)


def oracle_concat_reference(concat, max_n: int = LCP_LIMIT) -> RefArrays:
    """Reference arrays of a marker-separated concatenation.

    Suffixes are sorted by the marker ranks (inner < final), but common
    prefixes treat the final marker as identical to the inner markers.
    """
    inner, final = concat.tie
    table = bytearray(range(256))
    table[final] = inner
    return _reference(concat.symbols, concat.symbols.translate(bytes(table)), max_n)


def naive_lcp_pair(text, i: int, j: int) -> int:
    n = len(text.symbols)
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"positions ({i}, {j}) outside 1..{n}")
    return _common_prefix(text.symbols, i - 1, j - 1)
