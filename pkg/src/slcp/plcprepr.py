"""PLCP representations used as baselines for the sampled LCP.

* :class:`SadakanePlcp` stores a one at ``PLCP[i] + 2i`` in a ``2n``-bit vector,
  plain or run-length encoded, so ``PLCP[i] = select1(i) - 2i``.
* :class:`SampledPlcpText` keeps every ``q``-th PLCP value and recovers the
  others by comparing text characters extracted from the CSA, starting and
  stopping at the bounds the two surrounding samples imply.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .bitcodec import DEFAULT_BLOCK, build_vector

CHUNK = 16


class PlcpOrderError(ValueError):
    """A PLCP stream broke ``PLCP[i] >= PLCP[i - 1] - 1``."""


@dataclass(eq=False)
class SadakanePlcp:
    n: int
    kind: str
    bits: object

    def access(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"text position {i} outside 1..{self.n}")
        return self.bits.select1(i) - 2 * i

    def size_in_bits(self) -> int:
        return self.bits.size_in_bits()


def _sadakane_positions(values: Iterable[int], n: int) -> Iterator[int]:
    prev = None
    count = 0
    for i, v in enumerate(values, 1):
        if prev is not None and v < prev - 1:
            raise PlcpOrderError(f"PLCP[{i}] = {v} < PLCP[{i - 1}] - 1 = {prev - 1}")
        if v < 0 or v > n - i:
            raise PlcpOrderError(f"PLCP[{i}] = {v} outside 0..{n - i}")
        prev = v
        count = i
        yield v + 2 * i
    if count != n:
        raise PlcpOrderError(f"PLCP stream has {count} values, expected {n}")


def build_sadakane(values: Iterable[int], n: int, kind: str = "plain",
                   block: int = DEFAULT_BLOCK) -> SadakanePlcp:
    """Encode a text-order PLCP stream; ``kind`` is ``plain`` or ``rle``."""
    if kind not in ("plain", "rle"):
        raise ValueError(f"unknown Sadakane encoding {kind!r}")
    return SadakanePlcp(n, kind, build_vector(kind, _sadakane_positions(values, n), 2 * n, block))


class _Chars:
    """Sequential character reader over the CSA, extracting CHUNK symbols at a time."""

    def __init__(self, csa, start: int):
        self.csa = csa
        self.pos = start
        self.buf = b""
        self.k = 0

    def next(self) -> int:
        if self.k == len(self.buf):
            length = min(CHUNK, self.csa.n - self.pos + 1)
            self.buf = self.csa.display(self.pos, length)
            self.pos += length
            self.k = 0
        c = self.buf[self.k]
        self.k += 1
        return c


@dataclass(frozen=True)
class PlcpAccess:
    value: int
    comparisons: int
    lower: int
    upper: int


@dataclass(eq=False)
class SampledPlcpText:
    n: int
    q: int
    samples: list[int]

    @property
    def width(self) -> int:
        return max(1, self.n.bit_length())

    def size_in_bits(self) -> int:
        return len(self.samples) * self.width

    def access_counted(self, csa, i: int, x: int | None = None) -> PlcpAccess:
        """PLCP[i]; ``x`` may pass in ``SA^-1[i]`` when the caller already has it."""
        n, q = self.n, self.q
        if not 1 <= i <= n:
            raise IndexError(f"text position {i} outside 1..{n}")
        a, b = divmod(i - 1, q)
        if b == 0:
            v = self.samples[a]
            return PlcpAccess(v, 0, v, v)
        lo = max(self.samples[a] - b, 0)
        if a + 1 < len(self.samples):
            hi = self.samples[a + 1] + (q - b)
        else:
            hi = n - i
        if x is None:
            x = csa.isa(i)
        if x == 1:
            return PlcpAccess(0, 0, lo, hi)
        j = csa.locate(x - 1)
        hi = min(hi, n - max(i, j))
        lo = min(lo, hi)
        ci, cj = _Chars(csa, i + lo), _Chars(csa, j + lo)
        k = lo
        comparisons = 0
        while k < hi:
            comparisons += 1
            if ci.next() != cj.next():
                break
            k += 1
        return PlcpAccess(k, comparisons, lo, hi)

    def access(self, csa, i: int) -> int:
        return self.access_counted(csa, i).value


def build_sampled_plcp(values: Iterable[int], n: int, q: int) -> SampledPlcpText:
    if q < 1:
        raise ValueError("PLCP sample rate q must be >= 1")
    samples = [v for i, v in enumerate(values) if i % q == 0]
    return SampledPlcpText(n, q, samples)


def lcp_via_plcp(csa, plcp, x: int) -> int:
    """LCP[x] from a PLCP representation: locate, then look up in text order."""
    i = csa.locate(x)
    if isinstance(plcp, SampledPlcpText):
        return plcp.access_counted(csa, i, x).value
    return plcp.access(i)


def plcp_access(plcp, i: int, csa=None) -> int:
    """PLCP[i] from any representation; the q-sampled one needs ``csa``."""
    if isinstance(plcp, SampledPlcpText):
        if csa is None:
            raise ValueError("the q-sampled PLCP needs a CSA for character access")
        return plcp.access(csa, i)
    return plcp.access(i)


def sampled_plcp_access(plcp: SampledPlcpText, i: int, csa) -> PlcpAccess:
    return plcp.access_counted(csa, i)
