"""Psi-based compressed suffix array over a run-length encoded BWT.

The BWT is kept as its runs.  For every symbol ``c`` the start positions of its
runs and the number of ``c`` occurrences before each run form a directory, so
``rank_c`` and ``select_c`` are binary searches over ``c``'s runs:

    LF(x)  = C[L[x]] + rank_{L[x]}(L, x)
    Psi(x) = select_c(L, x - C[c])   where C[c] < x <= C[c + 1]

Psi at the SA position of the last suffix returns the SA position of the first
one, which the formula gives for free because the final symbol is unique.

SA values are sampled at text positions ``1, d+1, 2d+1, ...`` and at ``n``;
ISA values at text positions ``1, d+1, 2d+1, ...``.
"""

from __future__ import annotations

from array import array
from bisect import bisect_left, bisect_right
from dataclasses import dataclass

import numpy as np

from .bitcodec import DeltaStream, PlainBitVector
from .suffixcore import SuffixArrayData, build_suffix_array


def _to_array(a: np.ndarray) -> array:
    out = array("q")
    out.frombytes(np.ascontiguousarray(a, dtype=np.int64).tobytes())
    return out


@dataclass(eq=False)
class Csa:
    n: int
    d: int
    c_array: list[int]
    run_starts: array
    run_symbols: bytes
    run_before: array  # occurrences of the run's symbol before the run
    sym_starts: list[array]
    sym_cum: list[array]
    sa_marks: PlainBitVector
    sa_values: array
    isa_samples: array
    alphabet: bytes = b""
    tie: tuple[int, int] | None = None

    @property
    def num_ranks(self) -> int:
        return len(self.c_array) - 1

    @property
    def runs(self) -> int:
        """Number of equal-letter runs in the BWT."""
        return len(self.run_starts)

    # -- BWT access -----------------------------------------------------------

    def bwt_symbol(self, x: int) -> int:
        return self.run_symbols[bisect_right(self.run_starts, x) - 1]

    def rank(self, c: int, i: int) -> int:
        """Occurrences of rank ``c`` in ``L[1, i]``."""
        if not 0 <= c < self.num_ranks:
            return 0
        starts = self.sym_starts[c]
        r = bisect_right(starts, i) - 1
        if r < 0:
            return 0
        cum = self.sym_cum[c]
        return cum[r] + min(i - starts[r] + 1, cum[r + 1] - cum[r])

    def select(self, c: int, j: int) -> int:
        """Position of the ``j``-th occurrence of ``c`` in ``L``."""
        cum = self.sym_cum[c]
        if not 1 <= j <= cum[-1]:
            raise IndexError(f"select_{c}({j}) out of range")
        r = bisect_right(cum, j - 1) - 1
        return self.sym_starts[c][r] + j - 1 - cum[r]

    # -- navigation -----------------------------------------------------------

    def range_containing(self, x: int) -> tuple[int, int, int]:
        if not 1 <= x <= self.n:
            raise IndexError(f"SA position {x} outside 1..{self.n}")
        c = bisect_left(self.c_array, x) - 1
        return c, self.c_array[c] + 1, self.c_array[c + 1]

    def __post_init__(self):
        # Psi is the hot path of every algorithm here; bind it once as a closure
        C, starts, cums, n = self.c_array, self.sym_starts, self.sym_cum, self.n

        def psi(x: int) -> int:
            if not 0 < x <= n:
                raise IndexError(f"SA position {x} outside 1..{n}")
            c = bisect_left(C, x) - 1
            j = x - C[c] - 1
            cum = cums[c]
            r = bisect_right(cum, j) - 1
            return starts[c][r] + j - cum[r]

        self.psi = psi

    def lf(self, x: int) -> int:
        if not 1 <= x <= self.n:
            raise IndexError(f"SA position {x} outside 1..{self.n}")
        r = bisect_right(self.run_starts, x) - 1
        c = self.run_symbols[r]
        return self.c_array[c] + self.run_before[r] + x - self.run_starts[r] + 1

    # -- suffix array operations ---------------------------------------------

    def count_ranks(self, ranks: bytes) -> int:
        sp, ep = 1, self.n
        C = self.c_array
        for c in reversed(ranks):
            if not 0 <= c < self.num_ranks:
                return 0
            sp = C[c] + self.rank(c, sp - 1) + 1
            ep = C[c] + self.rank(c, ep)
            if sp > ep:
                return 0
        return ep - sp + 1

    def count(self, pattern: bytes) -> int:
        """Occurrences of an external byte pattern in the text."""
        if not pattern:
            return self.n
        ranks = bytearray()
        for b in pattern:
            idx = self.alphabet.find(bytes([b]))
            if idx < 0:
                return 0
            ranks.append(idx + 1)
        return self.count_ranks(bytes(ranks))

    def locate_counted(self, x: int) -> tuple[int, int]:
        """(SA[x], number of Psi steps taken)."""
        if not 1 <= x <= self.n:
            raise IndexError(f"SA position {x} outside 1..{self.n}")
        marks, psi = self.sa_marks, self.psi
        k = 0
        while True:
            idx = marks.index_of(x)
            if idx:
                return self.sa_values[idx - 1] - k, k
            x = psi(x)
            k += 1

    def locate(self, x: int) -> int:
        return self.locate_counted(x)[0]

    def isa_counted(self, i: int) -> tuple[int, int]:
        """(SA^-1[i], number of Psi steps taken)."""
        if not 1 <= i <= self.n:
            raise IndexError(f"text position {i} outside 1..{self.n}")
        s, steps = divmod(i - 1, self.d)
        x = self.isa_samples[s]
        for _ in range(steps):
            x = self.psi(x)
        return x, steps

    def isa(self, i: int) -> int:
        return self.isa_counted(i)[0]

    def display_counted(self, i: int, length: int) -> tuple[bytes, int]:
        """(ranks of T[i, i + length - 1], number of Psi steps taken)."""
        if length < 0 or i < 1 or i + length - 1 > self.n:
            raise IndexError(f"substring ({i}, {length}) outside the text")
        if length == 0:
            return b"", 0
        x, steps = self.isa_counted(i)
        C = self.c_array
        out = bytearray()
        for t in range(length):
            out.append(bisect_left(C, x) - 1)
            if t + 1 < length:
                x = self.psi(x)
                steps += 1
        return bytes(out), steps

    def display(self, i: int, length: int) -> bytes:
        return self.display_counted(i, length)[0]

    def display_bytes(self, i: int, length: int) -> bytes:
        """Like :meth:`display` but mapped back to external bytes (terminator as 0)."""
        table = bytes([0]) + self.alphabet + bytes(255 - len(self.alphabet))
        return self.display(i, length).translate(table)

    # -- accounting -----------------------------------------------------------

    def bwt_stream(self, block: int = 32) -> DeltaStream:
        """Run-length BWT as interleaved (symbol + 1, run length) delta codes."""
        lengths = np.diff(np.append(np.frombuffer(self.run_starts, dtype=np.int64), self.n + 1))

        def values():
            for c, length in zip(self.run_symbols, lengths.tolist()):
                yield c + 1
                yield length

        return DeltaStream.encode(values(), 2 * block)

    def size_report(self) -> dict[str, int]:
        width = max(1, self.n.bit_length())
        bwt = self.bwt_stream().size_in_bits()
        samples = self.sa_marks.size_in_bits() + len(self.sa_values) * width
        inverse = len(self.isa_samples) * width
        return {
            "bwt_bits": bwt,
            "sa_sample_bits": samples,
            "isa_sample_bits": inverse,
            "total_bits": bwt + samples + inverse,
        }


def csa_from_runs(n: int, d: int, c_array: list[int], run_starts: np.ndarray, run_symbols: bytes,
                  sa_marks: PlainBitVector, sa_values: array, isa_samples: array,
                  alphabet: bytes = b"", tie: tuple[int, int] | None = None) -> Csa:
    num_ranks = len(c_array) - 1
    run_starts = np.asarray(run_starts, dtype=np.int64)
    lengths = np.diff(np.append(run_starts, n + 1))
    syms = np.frombuffer(run_symbols, dtype=np.uint8)
    run_before = np.zeros(len(run_starts), dtype=np.int64)
    sym_starts, sym_cum = [], []
    for c in range(num_ranks):
        idx = np.flatnonzero(syms == c)
        cum = np.concatenate(([0], np.cumsum(lengths[idx])))
        run_before[idx] = cum[:-1]
        sym_starts.append(_to_array(run_starts[idx]))
        sym_cum.append(_to_array(cum))
    return Csa(n, d, list(c_array), _to_array(run_starts), bytes(run_symbols), _to_array(run_before),
               sym_starts, sym_cum, sa_marks, sa_values, isa_samples, alphabet, tie)


def build_csa(text, d: int = 32, tie_markers: bool = False, sad: SuffixArrayData | None = None) -> Csa:
    """Build a CSA with SA/ISA sample rate ``d``.

    ``text`` is a :class:`~slcp.textstore.Text` or a
    :class:`~slcp.textstore.SentinelConcat`; with ``tie_markers`` the concat's
    final marker compares equal to the inner markers when measuring LCPs.
    """
    if d < 1:
        raise ValueError("SA sample rate d must be >= 1")
    sad = sad or build_suffix_array(text)
    n = sad.n
    bwt = np.frombuffer(sad.bwt, dtype=np.uint8)
    heads = np.flatnonzero(np.concatenate(([True], bwt[1:] != bwt[:-1])))
    sa = sad.sa
    marked = ((sa - 1) % d == 0) | (sa == n)
    positions = np.flatnonzero(marked) + 1
    sa_marks = PlainBitVector.from_positions(positions.tolist(), n)
    sa_values = _to_array(sa[marked])
    isa_samples = _to_array(sad.isa[::d])
    alphabet = getattr(text, "alphabet", b"")
    if not alphabet and hasattr(text, "base"):
        alphabet = b"\x00" + text.base.alphabet
    tie = text.tie if tie_markers else None
    return csa_from_runs(n, d, sad.c_array, heads + 1, bwt[heads].tobytes(),
                         sa_marks, sa_values, isa_samples, alphabet, tie)
