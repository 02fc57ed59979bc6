"""Little-endian sectioned binary files for indexes and LCP structures.

Index file::

    "SLCP" u16 version u16 flags u64 n u32 num_ranks u64 d
    u16 len + alphabet bytes
    array C
    [u8 inner u8 final]            if flags & 1 (tied markers)
    delta section: RLE BWT as (symbol + 1, run length) pairs
    vector section: SA sample marks
    array SA samples, array ISA samples
    u32 CRC-32 of everything above

Structure file::

    "SLCS" u16 version u8 repr 32-byte SHA-256 of the index file
    repr-specific sections
    u32 CRC-32

An array is ``u8 width (4 or 8) u64 count`` then the items.  A delta section is
``u64 count u32 block u8 offset u64 nbits``, the LSB-first payload, and the
block directory (two arrays).  A vector section starts with
``u8 kind u64 m u64 ones u32 block``.
"""

from __future__ import annotations

import hashlib
import io
import struct
import sys
import zlib
from array import array
from pathlib import Path

import numpy as np

from .bitcodec import _REVERSE8, DeltaStream, GapBitVector, PlainBitVector, RleBitVector
from .csa import Csa, csa_from_runs
from .plcprepr import SadakanePlcp, SampledPlcpText
from .sampledlcp import SampledLcp

VERSION = 1
INDEX_MAGIC = b"SLCP"
STRUCT_MAGIC = b"SLCS"
FLAG_TIE = 1

VECTOR_TAGS = {"plain": 0, "gap": 1, "rle": 2}
REPR_TAGS = {"plcp-plain": 0, "plcp-rle": 1, "plcp-sampled": 2, "sampled-lcp": 3}


class FormatError(ValueError):
    """Malformed, truncated or corrupted file."""


class ChecksumError(FormatError):
    pass


class IndexMismatchError(FormatError):
    """A structure file was built against a different index."""


class _Writer:
    def __init__(self):
        self.buf = io.BytesIO()

    def pack(self, fmt: str, *values) -> None:
        self.buf.write(struct.pack("<" + fmt, *values))

    def raw(self, data: bytes) -> None:
        self.buf.write(data)

    def array(self, items) -> None:
        if not (isinstance(items, array) and items.typecode == "Q"):
            items = array("q", items)
            if items and min(items) < 0:
                raise ValueError("negative values in an unsigned array section")
        width = 8 if items and max(items) >= 1 << 32 else 4
        self.pack("BQ", width, len(items))
        a = array("Q" if width == 8 else "I", items)
        if sys.byteorder != "little":
            a.byteswap()
        self.raw(a.tobytes())

    def delta(self, s: DeltaStream) -> None:
        self.pack("QIBQ", s.count, s.block, s.offset, s.nbits)
        self.raw(s.payload())
        self.array(s.dir_bits)
        self.array(s.dir_sums)

    def vector(self, v) -> None:
        block = getattr(v, "block", 0)
        if isinstance(v, GapBitVector):
            block = v.gaps.block
        self.pack("BQQI", VECTOR_TAGS[v.kind], v.m, v.ones, block)
        if isinstance(v, PlainBitVector):
            self.array(v.words)
            self.array(v._cum[::8])
            self.array(v.select_hints)
        elif isinstance(v, GapBitVector):
            self.delta(v.gaps)
        else:
            self.delta(v.runs)
            self.array(v.dir_ones)

    def finish(self) -> bytes:
        body = self.buf.getvalue()
        return body + struct.pack("<I", zlib.crc32(body))


class _Reader:
    def __init__(self, data: bytes):
        if len(data) < 4:
            raise FormatError("file too short")
        body, (crc,) = data[:-4], struct.unpack("<I", data[-4:])
        if zlib.crc32(body) != crc:
            raise ChecksumError("checksum mismatch: file is corrupted")
        self.data = body
        self.pos = 0

    def take(self, k: int) -> bytes:
        if self.pos + k > len(self.data):
            raise FormatError("unexpected end of file")
        out = self.data[self.pos:self.pos + k]
        self.pos += k
        return out

    def unpack(self, fmt: str):
        fmt = "<" + fmt
        return struct.unpack(fmt, self.take(struct.calcsize(fmt)))

    def array(self, typecode: str = "q") -> array:
        width, count = self.unpack("BQ")
        if width not in (4, 8):
            raise FormatError(f"bad array width {width}")
        a = array("Q" if width == 8 else "I")
        a.frombytes(self.take(width * count))
        if sys.byteorder != "little":
            a.byteswap()
        return array(typecode, a)

    def delta(self) -> DeltaStream:
        count, block, offset, nbits = self.unpack("QIBQ")
        payload = self.take((nbits + 7) // 8).translate(_REVERSE8)
        dir_bits = self.array()
        dir_sums = self.array()
        return DeltaStream(payload, nbits, count, block, offset, dir_bits, dir_sums)

    def vector(self):
        tag, m, ones, block = self.unpack("BQQI")
        if tag == VECTOR_TAGS["plain"]:
            words = self.array("Q")
            supers = self.array()
            hints = self.array()
            v = PlainBitVector(words, m)
            if v._cum[::8] != supers or v.select_hints != hints:
                raise FormatError("plain vector directory does not match its words")
        elif tag == VECTOR_TAGS["gap"]:
            v = GapBitVector(self.delta(), m)
        elif tag == VECTOR_TAGS["rle"]:
            runs = self.delta()
            v = RleBitVector(runs, m, ones, self.array())
        else:
            raise FormatError(f"unknown vector kind tag {tag}")
        if v.ones != ones:
            raise FormatError("vector one count does not match its payload")
        return v

    def done(self) -> None:
        if self.pos != len(self.data):
            raise FormatError("trailing bytes after the last section")


# -- index files --------------------------------------------------------------

def dump_index(csa: Csa) -> bytes:
    w = _Writer()
    w.raw(INDEX_MAGIC)
    w.pack("HHQIQ", VERSION, FLAG_TIE if csa.tie else 0, csa.n, csa.num_ranks, csa.d)
    w.pack("H", len(csa.alphabet))
    w.raw(csa.alphabet)
    w.array(csa.c_array)
    if csa.tie:
        w.pack("BB", *csa.tie)
    w.delta(csa.bwt_stream())
    w.vector(csa.sa_marks)
    w.array(csa.sa_values)
    w.array(csa.isa_samples)
    return w.finish()


def _check_header(r: _Reader, magic: bytes) -> None:
    if r.take(4) != magic:
        raise FormatError(f"bad magic: expected {magic!r}")
    (version,) = r.unpack("H")
    if version != VERSION:
        raise FormatError(f"unsupported format version {version}")


def load_index(data: bytes) -> Csa:
    r = _Reader(data)
    _check_header(r, INDEX_MAGIC)
    flags, n, num_ranks, d = r.unpack("HQIQ")
    (alen,) = r.unpack("H")
    alphabet = r.take(alen)
    c_array = r.array().tolist()
    if len(c_array) != num_ranks + 1 or c_array[-1] != n:
        raise FormatError("C array does not match the header")
    tie = r.unpack("BB") if flags & FLAG_TIE else None
    pairs = np.fromiter(r.delta(), dtype=np.int64)
    symbols, lengths = pairs[0::2] - 1, pairs[1::2]
    if lengths.sum() != n:
        raise FormatError("BWT runs do not cover the text")
    starts = np.concatenate(([1], 1 + np.cumsum(lengths)[:-1]))
    marks = r.vector()
    sa_values = r.array()
    isa_samples = r.array()
    r.done()
    return csa_from_runs(n, d, c_array, starts, symbols.astype(np.uint8).tobytes(),
                         marks, sa_values, isa_samples, alphabet, tuple(tie) if tie else None)


# -- structure files ----------------------------------------------------------

def index_digest(index_bytes: bytes) -> bytes:
    return hashlib.sha256(index_bytes).digest()


def _pack_fixed(values: list[int], width: int) -> bytes:
    acc = 0
    for k, v in enumerate(values):
        acc |= v << (k * width)
    return acc.to_bytes((len(values) * width + 7) // 8, "little")


def _unpack_fixed(data: bytes, count: int, width: int) -> list[int]:
    acc = int.from_bytes(data, "little")
    mask = (1 << width) - 1
    return [(acc >> (k * width)) & mask for k in range(count)]


def repr_name(structure) -> str:
    if isinstance(structure, SampledLcp):
        return "sampled-lcp"
    if isinstance(structure, SampledPlcpText):
        return "plcp-sampled"
    if isinstance(structure, SadakanePlcp):
        return f"plcp-{structure.kind}"
    raise TypeError(f"cannot serialize {type(structure).__name__}")


def dump_structure(structure, index_bytes: bytes) -> bytes:
    name = repr_name(structure)
    w = _Writer()
    w.raw(STRUCT_MAGIC)
    w.pack("HB", VERSION, REPR_TAGS[name])
    w.raw(index_digest(index_bytes))
    if isinstance(structure, SadakanePlcp):
        w.pack("Q", structure.n)
        w.vector(structure.bits)
    elif isinstance(structure, SampledPlcpText):
        width = structure.width
        w.pack("QQBQ", structure.n, structure.q, width, len(structure.samples))
        w.raw(_pack_fixed(structure.samples, width))
    else:
        w.pack("QQQQ", structure.n, structure.d_prime or 0, structure.minimal_samples,
               structure.extra_samples)
        w.vector(structure.marks)
        w.delta(structure.values)
    return w.finish()


def load_structure(data: bytes, index_bytes: bytes | None = None):
    """Parse a structure file; with ``index_bytes`` the pairing is checked."""
    r = _Reader(data)
    _check_header(r, STRUCT_MAGIC)
    (tag,) = r.unpack("B")
    digest = r.take(32)
    if index_bytes is not None and digest != index_digest(index_bytes):
        raise IndexMismatchError("structure file was built for a different index")
    names = {v: k for k, v in REPR_TAGS.items()}
    if tag not in names:
        raise FormatError(f"unknown structure tag {tag}")
    name = names[tag]
    if name in ("plcp-plain", "plcp-rle"):
        (n,) = r.unpack("Q")
        out = SadakanePlcp(n, name[5:], r.vector())
    elif name == "plcp-sampled":
        n, q, width, count = r.unpack("QQBQ")
        samples = _unpack_fixed(r.take((count * width + 7) // 8), count, width)
        out = SampledPlcpText(n, q, samples)
    else:
        n, dp, minimal, extra = r.unpack("QQQQ")
        marks = r.vector()
        values = r.delta()
        out = SampledLcp(n, dp or None, marks, values, minimal, extra)
    r.done()
    return out


def structure_digest(data: bytes) -> bytes:
    """The index digest a structure file refers to (checksum verified)."""
    r = _Reader(data)
    _check_header(r, STRUCT_MAGIC)
    r.unpack("B")
    return r.take(32)


def save_bytes(path, data: bytes) -> None:
    Path(path).write_bytes(data)


def read_bytes(path) -> bytes:
    return Path(path).read_bytes()
