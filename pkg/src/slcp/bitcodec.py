"""Bit vectors with rank/select and Elias-delta coded integer streams.

Three bit vector kinds share one contract (positions 1-based, ``rank1(pos)``
counts ones in ``[1, pos]``, ``select1(k)`` is the position of the ``k``-th one):

* :class:`PlainBitVector` -- uncompressed 64-bit words with a rank directory.
* :class:`GapBitVector` -- delta-coded gaps between one positions.
* :class:`RleBitVector` -- delta-coded alternating runs of zeros and ones.

Serialized payloads are LSB-first: stream bit ``k`` is bit ``k % 8`` of byte
``k // 8``.  Delta codewords are written most significant bit first inside the
stream, so ``delta_codeword(2) == "0100"``.
"""

from __future__ import annotations

import sys
from array import array
from bisect import bisect_left, bisect_right
from collections.abc import Iterable

DEFAULT_BLOCK = 32
SELECT_SAMPLE = 256
_PAD = 16

_REVERSE8 = bytes(int(f"{b:08b}"[::-1], 2) for b in range(256))


class BitVectorError(IndexError):
    pass


def delta_length(v: int) -> int:
    n = v.bit_length()
    return n - 1 + 2 * (n.bit_length() - 1) + 1


def delta_codeword(v: int) -> str:
    if v < 1:
        raise ValueError(f"delta code is defined for v >= 1, got {v}")
    n = v.bit_length()
    return "0" * (n.bit_length() - 1) + format(n, "b") + format(v, "b")[1:]


def _short_code_table() -> list[int]:
    """For every 16-bit window: ``value << 5 | length`` of its leading codeword, 0 if longer."""
    tab = [0] * (1 << 16)
    v = 1
    while True:
        code = delta_codeword(v)
        if len(code) > 16:
            if v.bit_length() > 16:
                return tab
            v += 1
            continue
        free = 16 - len(code)
        base = int(code, 2) << free
        entry = v << 5 | len(code)
        tab[base:base + (1 << free)] = [entry] * (1 << free)
        v += 1


_SHORT = _short_code_table()


def _pack(bits: str) -> bytes:
    """MSB-first packing of a '0'/'1' string (in-memory layout)."""
    if not bits:
        return b""
    pad = -len(bits) % 8
    return int(bits + "0" * pad, 2).to_bytes((len(bits) + pad) // 8, "big")


def _decode_at(buf: bytes, p: int) -> tuple[int, int]:
    """Decode one codeword starting at stream bit ``p``; returns (value, next bit)."""
    b = p >> 3
    s = 128 - (p & 7)
    w = int.from_bytes(buf[b:b + 16], "big") & ((1 << s) - 1)
    top = w.bit_length()
    zeros = s - top
    shift = top - zeros - 1
    nbits = w >> shift
    rest = nbits - 1
    v = (1 << rest) | ((w >> (shift - rest)) & ((1 << rest) - 1))
    return v, p + 2 * zeros + 1 + rest


def _decode_front(seg: int, width: int) -> tuple[int, int]:
    """Decode the codeword at the top of a ``width``-bit integer; returns (value, bits left)."""
    top = seg.bit_length()
    zeros = width - top
    width = top - zeros - 1
    rest = (seg >> width) - 1
    width -= rest
    return (1 << rest) | ((seg >> width) & ((1 << rest) - 1)), width


def _width(values) -> int:
    return 64 if values and max(values) >= 1 << 32 else 32


class DeltaStream:
    """Delta-coded sequence of integers with a block directory.

    Values are stored shifted by ``offset`` (use ``offset=1`` for streams that may
    contain zeros).  Every ``block``-th value has its bit offset and the prefix sum
    of the stored values before it recorded, so ``access`` decodes at most
    ``block`` codewords.
    """

    kind = "delta"

    def __init__(self, buf: bytes, nbits: int, count: int, block: int, offset: int,
                 dir_bits: array, dir_sums: array):
        self._buf = bytes(buf) + bytes(_PAD)
        self.nbits = nbits
        self.count = count
        self.block = block
        self.offset = offset
        self.dir_bits = dir_bits
        self.dir_sums = dir_sums

    @classmethod
    def encode(cls, values: Iterable[int], block: int = DEFAULT_BLOCK, offset: int = 0) -> DeltaStream:
        if block < 1:
            raise ValueError("block size must be positive")
        parts = []
        dir_bits = array("q")
        dir_sums = array("q")
        nbits = total = count = 0
        for v in values:
            v += offset
            if count % block == 0:
                dir_bits.append(nbits)
                dir_sums.append(total)
            code = delta_codeword(v)
            parts.append(code)
            nbits += len(code)
            total += v
            count += 1
        dir_sums.append(total)
        return cls(_pack("".join(parts)), nbits, count, block, offset, dir_bits, dir_sums)

    def __len__(self) -> int:
        return self.count

    @property
    def total(self) -> int:
        """Sum of the stored (shifted) values."""
        return self.dir_sums[-1]

    def access(self, k: int) -> int:
        if not 1 <= k <= self.count:
            raise BitVectorError(f"index {k} outside 1..{self.count}")
        b, r = divmod(k - 1, self.block)
        seg, width = self.segment(b)
        short = _SHORT
        for _ in range(r + 1):
            t = short[(seg >> (width - 16) if width >= 16 else seg << (16 - width)) & 0xFFFF]
            if t:
                v = t >> 5
                width -= t & 31
            else:
                v, width = _decode_front(seg, width)
            seg &= (1 << width) - 1
        return v - self.offset

    def segment(self, b: int) -> tuple[int, int]:
        """Block ``b``'s codewords as one integer and its bit width."""
        start = self.dir_bits[b]
        end = self.dir_bits[b + 1] if b + 1 < len(self.dir_bits) else self.nbits
        lo, hi = start >> 3, (end + 7) >> 3
        width = end - start
        return int.from_bytes(self._buf[lo:hi], "big") >> (8 * (hi - lo) - (start & 7) - width) \
            & ((1 << width) - 1), width

    def decode_block(self, b: int) -> list[int]:
        """Stored (shifted) values of block ``b``."""
        buf, p = self._buf, self.dir_bits[b]
        out = []
        for _ in range(min(self.block, self.count - b * self.block)):
            v, p = _decode_at(buf, p)
            out.append(v)
        return out

    def __iter__(self):
        buf, p, off = self._buf, 0, self.offset
        for _ in range(self.count):
            v, p = _decode_at(buf, p)
            yield v - off

    def payload(self) -> bytes:
        """LSB-first serialized payload."""
        return self._buf[:(self.nbits + 7) // 8].translate(_REVERSE8)

    def directory_bits(self) -> int:
        return len(self.dir_bits) * (_width(self.dir_bits) + _width(self.dir_sums))

    def size_in_bits(self) -> int:
        return self.nbits + self.directory_bits()


class PlainBitVector:
    """Uncompressed bit vector.

    ``rank1`` reads a per-word cumulative count and one popcount; ``select1``
    narrows a binary search over the word counts with samples taken every
    ``SELECT_SAMPLE`` ones.  Only the words, the superblock counts (every 8 words)
    and the select samples are serialized; the per-word counts are rebuilt on load.
    """

    kind = "plain"

    def __init__(self, words: array, m: int):
        self.words = words
        self.m = m
        cum = array("q", [0]) * (len(words) + 1)
        total = 0
        for w, word in enumerate(words):
            cum[w] = total
            total += word.bit_count()
        cum[len(words)] = total
        self._cum = cum
        self.ones = total
        hints = array("q")
        for t in range(0, total, SELECT_SAMPLE):
            hints.append(bisect_right(cum, t) - 1)
        self.select_hints = hints

    @classmethod
    def from_positions(cls, positions: Iterable[int], m: int) -> PlainBitVector:
        words = array("Q", bytes(8 * ((m + 63) >> 6)))
        last = 0
        for p in positions:
            if not last < p <= m:
                raise ValueError(f"positions must be increasing within 1..{m}")
            words[(p - 1) >> 6] |= 1 << ((p - 1) & 63)
            last = p
        return cls(words, m)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> PlainBitVector:
        bits = list(bits)
        return cls.from_positions((i for i, b in enumerate(bits, 1) if b), len(bits))

    def __len__(self) -> int:
        return self.m

    def __getitem__(self, p: int) -> int:
        if not 1 <= p <= self.m:
            raise BitVectorError(f"position {p} outside 1..{self.m}")
        return (self.words[(p - 1) >> 6] >> ((p - 1) & 63)) & 1

    def index_of(self, p: int) -> int:
        """``rank1(p)`` if bit ``p`` is set, else 0."""
        w, b = (p - 1) >> 6, (p - 1) & 63
        word = self.words[w]
        if not (word >> b) & 1:
            return 0
        return self._cum[w] + (word & ((2 << b) - 1)).bit_count()

    def rank1(self, pos: int) -> int:
        if not 0 <= pos <= self.m:
            raise BitVectorError(f"rank position {pos} outside 0..{self.m}")
        w, b = pos >> 6, pos & 63
        if b == 0:
            return self._cum[w]
        return self._cum[w] + (self.words[w] & ((1 << b) - 1)).bit_count()

    def rank0(self, pos: int) -> int:
        return pos - self.rank1(pos)

    def select1(self, k: int) -> int:
        if not 1 <= k <= self.ones:
            raise BitVectorError(f"select1({k}) with {self.ones} ones")
        t = (k - 1) // SELECT_SAMPLE
        lo = self.select_hints[t]
        hi = self.select_hints[t + 1] + 1 if t + 1 < len(self.select_hints) else len(self.words)
        w = bisect_left(self._cum, k, lo, hi + 1) - 1
        return 64 * w + _select_in_word(self.words[w], k - self._cum[w])

    def select0(self, k: int) -> int:
        zeros = self.m - self.ones
        if not 1 <= k <= zeros:
            raise BitVectorError(f"select0({k}) with {zeros} zeros")
        cum = self._cum
        w = bisect_left(range(len(self.words) + 1), k, key=lambda i: 64 * i - cum[i]) - 1
        return 64 * w + _select_in_word(~self.words[w] & ((1 << 64) - 1), k - (64 * w - cum[w]))

    def payload_bits(self) -> int:
        return self.m

    def directory_bits(self) -> int:
        supers = (len(self.words) + 7) // 8 + 1
        return supers * 64 + len(self.select_hints) * 64

    def size_in_bits(self) -> int:
        return self.m + self.directory_bits()

    def payload(self) -> bytes:
        words = self.words
        if sys.byteorder != "little":
            words = array("Q", words)
            words.byteswap()
        return words.tobytes()[:(self.m + 7) // 8]


def _select_in_word(word: int, j: int) -> int:
    """1-based position of the ``j``-th set bit of ``word`` (LSB first)."""
    for _ in range(j - 1):
        word &= word - 1
    return (word & -word).bit_length()


class GapBitVector:
    """Bit vector stored as delta-coded gaps between consecutive ones."""

    kind = "gap"

    def __init__(self, gaps: DeltaStream, m: int):
        self.gaps = gaps
        self.m = m
        self.ones = len(gaps)
        # dir_sums[b] is the position of the last one before block b (0 for b = 0)
        self._starts = gaps.dir_sums[:-1] if self.ones else array("q", [0])

    @classmethod
    def from_positions(cls, positions: Iterable[int], m: int, block: int = DEFAULT_BLOCK) -> GapBitVector:
        def gaps():
            last = 0
            for p in positions:
                if not last < p <= m:
                    raise ValueError(f"positions must be increasing within 1..{m}")
                yield p - last
                last = p

        return cls(DeltaStream.encode(gaps(), block), m)

    @classmethod
    def from_bits(cls, bits: Iterable[int], block: int = DEFAULT_BLOCK) -> GapBitVector:
        bits = list(bits)
        return cls.from_positions((i for i, b in enumerate(bits, 1) if b), len(bits), block)

    def __len__(self) -> int:
        return self.m

    def _locate(self, pos: int) -> tuple[int, int]:
        """(ones in [1, pos], position of the last of them)."""
        if not self.ones:
            return 0, 0
        b = bisect_right(self._starts, pos) - 1
        gaps = self.gaps
        count, p = b * gaps.block, self._starts[b]
        seg, width = gaps.segment(b)
        short = _SHORT
        for _ in range(min(gaps.block, self.ones - count)):
            t = short[(seg >> (width - 16) if width >= 16 else seg << (16 - width)) & 0xFFFF]
            if t:
                g = t >> 5
                width -= t & 31
            else:
                g, width = _decode_front(seg, width)
            if p + g > pos:
                break
            seg &= (1 << width) - 1
            p += g
            count += 1
        return count, p

    def __getitem__(self, p: int) -> int:
        if not 1 <= p <= self.m:
            raise BitVectorError(f"position {p} outside 1..{self.m}")
        return int(self._locate(p)[1] == p and p > 0 and self.ones > 0)

    def index_of(self, p: int) -> int:
        count, last = self._locate(p)
        return count if last == p and count else 0

    def rank1(self, pos: int) -> int:
        if not 0 <= pos <= self.m:
            raise BitVectorError(f"rank position {pos} outside 0..{self.m}")
        return self._locate(pos)[0] if self.ones else 0

    def rank0(self, pos: int) -> int:
        return pos - self.rank1(pos)

    def select1(self, k: int) -> int:
        if not 1 <= k <= self.ones:
            raise BitVectorError(f"select1({k}) with {self.ones} ones")
        b, r = divmod(k - 1, self.gaps.block)
        buf, bit, p = self.gaps._buf, self.gaps.dir_bits[b], self._starts[b]
        for _ in range(r + 1):
            g, bit = _decode_at(buf, bit)
            p += g
        return p

    def select0(self, k: int) -> int:
        zeros = self.m - self.ones
        if not 1 <= k <= zeros:
            raise BitVectorError(f"select0({k}) with {zeros} zeros")
        if not self.ones:
            return k
        block = self.gaps.block
        starts = self._starts
        # zeros before the last one preceding block b: starts[b] - b*block
        b = bisect_left(range(len(starts)), k, key=lambda i: starts[i] - i * block) - 1
        b = max(b, 0)
        buf, bit = self.gaps._buf, self.gaps.dir_bits[b]
        count, p = b * block, starts[b]
        for _ in range(min(block, self.ones - count)):
            g, bit = _decode_at(buf, bit)
            if (p + g) - (count + 1) >= k:
                break
            p += g
            count += 1
        return k + count

    def payload_bits(self) -> int:
        return self.gaps.nbits

    def directory_bits(self) -> int:
        return self.gaps.directory_bits()

    def size_in_bits(self) -> int:
        return self.gaps.size_in_bits()


class RleBitVector:
    """Bit vector stored as delta-coded (zero run + 1, one run) pairs.

    Trailing zeros after the last one are implied by ``m``.  The directory keeps,
    for every ``block`` pairs, the number of bits and ones covered before them.
    """

    kind = "rle"

    def __init__(self, runs: DeltaStream, m: int, ones: int, dir_ones: array):
        self.runs = runs
        self.m = m
        self.ones = ones
        self.pairs = len(runs) // 2
        self.block = runs.block // 2
        self.dir_ones = dir_ones
        # bits covered before pair b*block: stored total minus the +1 shifts
        self.dir_pos = array("q", (s - i * self.block for i, s in enumerate(runs.dir_sums[:-1])))
        if not self.pairs:
            self.dir_pos = array("q", [0])
            self.dir_ones = array("q", [0])
        self._dir_zeros = array("q", (p - o for p, o in zip(self.dir_pos, self.dir_ones)))

    @classmethod
    def from_positions(cls, positions: Iterable[int], m: int, block: int = DEFAULT_BLOCK) -> RleBitVector:
        dir_ones = array("q")
        totals = [0]

        def runs():
            pairs = ones = prev_end = last = 0
            start = length = 0
            for p in positions:
                if not last < p <= m:
                    raise ValueError(f"positions must be increasing within 1..{m}")
                last = p
                if length and p == start + length:
                    length += 1
                    continue
                if length:
                    if pairs % block == 0:
                        dir_ones.append(ones)
                    yield start - prev_end
                    yield length
                    pairs += 1
                    ones += length
                    prev_end = start + length - 1
                start, length = p, 1
            if length:
                if pairs % block == 0:
                    dir_ones.append(ones)
                yield start - prev_end
                yield length
                ones += length
            totals[0] = ones

        stream = DeltaStream.encode(runs(), 2 * block)
        return cls(stream, m, totals[0], dir_ones)

    @classmethod
    def from_bits(cls, bits: Iterable[int], block: int = DEFAULT_BLOCK) -> RleBitVector:
        bits = list(bits)
        return cls.from_positions((i for i, b in enumerate(bits, 1) if b), len(bits), block)

    def __len__(self) -> int:
        return self.m

    def _pairs_from(self, b: int):
        buf, bit = self.runs._buf, self.runs.dir_bits[b]
        for _ in range(min(self.block, self.pairs - b * self.block)):
            z, bit = _decode_at(buf, bit)
            o, bit = _decode_at(buf, bit)
            yield z - 1, o

    def rank1(self, pos: int) -> int:
        if not 0 <= pos <= self.m:
            raise BitVectorError(f"rank position {pos} outside 0..{self.m}")
        if not self.pairs:
            return 0
        b = bisect_right(self.dir_pos, pos) - 1
        covered, ones = self.dir_pos[b], self.dir_ones[b]
        for z, o in self._pairs_from(b):
            covered += z
            if covered >= pos:
                return ones
            if covered + o >= pos:
                return ones + pos - covered
            covered += o
            ones += o
        return ones

    def rank0(self, pos: int) -> int:
        return pos - self.rank1(pos)

    def __getitem__(self, p: int) -> int:
        if not 1 <= p <= self.m:
            raise BitVectorError(f"position {p} outside 1..{self.m}")
        return self.rank1(p) - self.rank1(p - 1)

    def index_of(self, p: int) -> int:
        r = self.rank1(p)
        return r if r and r != self.rank1(p - 1) else 0

    def select1(self, k: int) -> int:
        if not 1 <= k <= self.ones:
            raise BitVectorError(f"select1({k}) with {self.ones} ones")
        b = bisect_left(self.dir_ones, k) - 1
        covered, ones = self.dir_pos[b], self.dir_ones[b]
        for z, o in self._pairs_from(b):
            covered += z
            if ones + o >= k:
                return covered + k - ones
            covered += o
            ones += o
        raise AssertionError("select1 ran past the directory")

    def select0(self, k: int) -> int:
        zeros = self.m - self.ones
        if not 1 <= k <= zeros:
            raise BitVectorError(f"select0({k}) with {zeros} zeros")
        if not self.pairs:
            return k
        b = max(bisect_left(self._dir_zeros, k) - 1, 0)
        covered, ones = self.dir_pos[b], self.dir_ones[b]
        for z, o in self._pairs_from(b):
            if covered - ones + z >= k:
                return ones + k
            covered += z + o
            ones += o
        return ones + k

    def payload_bits(self) -> int:
        return self.runs.nbits

    def directory_bits(self) -> int:
        return self.runs.directory_bits() + len(self.dir_ones) * _width(self.dir_ones)

    def size_in_bits(self) -> int:
        return self.runs.nbits + self.directory_bits()


VECTOR_KINDS = {"plain": PlainBitVector, "gap": GapBitVector, "rle": RleBitVector}


def build_vector(kind: str, positions: Iterable[int], m: int, block: int = DEFAULT_BLOCK):
    if kind == "plain":
        return PlainBitVector.from_positions(positions, m)
    if kind == "gap":
        return GapBitVector.from_positions(positions, m, block)
    if kind == "rle":
        return RleBitVector.from_positions(positions, m, block)
    raise ValueError(f"unknown bit vector kind {kind!r}")
