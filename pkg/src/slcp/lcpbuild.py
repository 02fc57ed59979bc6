"""LCP construction directly from a CSA.

The irreducible LCP algorithm walks the text in order while keeping
``x = SA^-1[i]``.  ``PLCP[i + 1]`` can be reduced to ``PLCP[i] - 1`` exactly when
``x - 1`` shares the Psi range of ``x`` and ``Psi(x - 1) == Psi(x) - 1``; other
values are computed by stepping both neighbouring suffixes through Psi until
they leave a common range.  Only a handful of integers are kept besides the CSA.

``PLCP[1]`` is always irreducible and is computed like any other irreducible
value (it is not 0 in general: for ``bab$`` it is 1).
"""

from __future__ import annotations

import math
from array import array
from bisect import bisect_left
from collections.abc import Callable, Iterable, Iterator
from dataclasses import dataclass, field

import numpy as np

from .bitcodec import DEFAULT_BLOCK, DeltaStream, PlainBitVector, build_vector
from .csa import Csa
from .sampledlcp import SampledLcp


@dataclass
class PlcpBuildStats:
    irreducible_count: int = 0
    irreducible_sum: int = 0
    psi_evals: int = 0


def _lcp_counted(csa: Csa, b: int) -> tuple[int, int]:
    C = csa.c_array
    psi = csa.psi
    a = b - 1
    k = evals = 0
    c = bisect_left(C, b) - 1
    while a > C[c]:  # a < b <= C[c + 1], so this tests a in Psi_c
        a = psi(a)
        b = psi(b)
        k += 1
        evals += 2
        c = bisect_left(C, b) - 1
    tie = csa.tie
    if tie is not None and c == tie[1] and bisect_left(C, a) - 1 == tie[0]:
        k += 1
    return k, evals


def lcp_pair_via_psi(csa: Csa, b: int) -> int:
    """LCP[b]: common prefix of the suffixes at SA positions ``b - 1`` and ``b``."""
    if not 2 <= b <= csa.n:
        raise ValueError(f"LCP of SA position {b} is not computed by Psi steps (need 2 <= b <= n)")
    return _lcp_counted(csa, b)[0]


def scan_plcp(csa: Csa, stats: PlcpBuildStats | None = None) -> Iterator[tuple[int, int, int, bool]]:
    """Yield ``(i, SA^-1[i], PLCP[i], irreducible)`` for ``i = 1..n``."""
    stats = stats if stats is not None else PlcpBuildStats()
    C = csa.c_array
    psi = csa.psi
    n = csa.n
    x = csa.isa_samples[0]
    v = 0
    if x > 1:
        v, evals = _lcp_counted(csa, x)
        stats.psi_evals += evals
    stats.irreducible_count += 1
    stats.irreducible_sum += v
    yield 1, x, v, True
    for i in range(2, n + 1):
        c = bisect_left(C, x) - 1
        nx = psi(x)
        stats.psi_evals += 1
        if x - 1 > C[c]:
            stats.psi_evals += 1
            reducible = psi(x - 1) == nx - 1
        else:
            reducible = False
        if reducible:
            v -= 1
        else:
            v = 0
            if nx > 1:
                v, evals = _lcp_counted(csa, nx)
                stats.psi_evals += evals
            stats.irreducible_count += 1
            stats.irreducible_sum += v
        x = nx
        yield i, x, v, not reducible


def plcp_stream(csa: Csa, stats: PlcpBuildStats | None = None) -> Iterator[int]:
    for _, _, v, _ in scan_plcp(csa, stats):
        yield v


def build_plcp_from_csa(csa: Csa, sink: Callable[[int, int], None]) -> PlcpBuildStats:
    """Deliver ``(i, PLCP[i])`` to ``sink`` in text order."""
    stats = PlcpBuildStats()
    for i, _, v, _ in scan_plcp(csa, stats):
        sink(i, v)
    return stats


def _with_next(scan: Iterable[tuple[int, int, int, bool]]):
    """Pair each scanned position with the next position's (value, irreducible)."""
    it = iter(scan)
    prev = next(it)
    for cur in it:
        yield prev, cur[2], cur[3]
        prev = cur
    yield prev, None, None


@dataclass(eq=False)
class MinimalClassification:
    plcp: np.ndarray
    maximal: np.ndarray
    minimal: np.ndarray
    strictly_minimal: np.ndarray
    runs: int

    @property
    def n(self) -> int:
        return len(self.plcp)

    def count_sum(self, flags: np.ndarray) -> tuple[int, int]:
        return int(flags.sum()), int(self.plcp[flags].sum())


def classify_minimal_from_csa(csa: Csa) -> MinimalClassification:
    n = csa.n
    plcp = np.zeros(n, dtype=np.int64)
    maximal = np.zeros(n, dtype=bool)
    for i, _, v, irr in scan_plcp(csa):
        plcp[i - 1] = v
        maximal[i - 1] = irr
    minimal = np.ones(n, dtype=bool)
    minimal[:-1] = maximal[1:]
    strict = minimal.copy()
    strict[:-1] &= plcp[:-1] < plcp[1:] + 1
    return MinimalClassification(plcp, maximal, minimal, strict, csa.runs)


def minimal_sa_positions(csa: Csa) -> Iterator[int]:
    """SA positions of the minimal values, scanning in suffix array order."""
    C = csa.c_array
    psi = csa.psi
    for x in range(1, csa.n + 1):
        c = bisect_left(C, x) - 1
        if x == C[c] + 1 or psi(x - 1) != psi(x) - 1:
            yield x


def d_prime_from_epsilon(n: int, runs: int, epsilon: float) -> int:
    """Extra-sample spacing ``n / R^(1 - epsilon)``."""
    if not 0 < epsilon < 1:
        raise ValueError("epsilon must lie in (0, 1)")
    return max(1, math.ceil(n / runs ** (1 - epsilon)))


@dataclass
class SamplingStats:
    minimal_samples: int = 0
    extra_samples: dict = field(default_factory=dict)
    psi_evals: int = 0
    peak_buffered_samples: int = 0


def _minimal_samples(csa: Csa, stats: SamplingStats) -> tuple[array, array]:
    """First pass: strictly minimal samples as (SA position, value), in text order."""
    xs, vs = array("q"), array("q")
    build = PlcpBuildStats()
    for (i, x, v, _), nxt, _ in _with_next(scan_plcp(csa, build)):
        if nxt is None or v < nxt + 1:
            xs.append(x)
            vs.append(v)
    stats.psi_evals += build.psi_evals
    stats.minimal_samples = len(xs)
    return xs, vs


def _extra_samples(csa: Csa, xs: array, vs: array, spacings: list[int],
                   stats: SamplingStats) -> dict[int, list[tuple[int, int]]]:
    """Second pass in text order: one extra sample per ``d'`` unsampled positions.

    A skipped position satisfies PLCP[i] = PLCP[i + 1] + 1, so an extra sample
    takes the value of the next sample plus its text distance to it.
    """
    order = sorted(range(len(xs)), key=xs.__getitem__)
    marks = PlainBitVector.from_positions((xs[k] for k in order), csa.n)
    sorted_vs = [vs[k] for k in order]
    extras = {dp: [] for dp in spacings}
    pending = {dp: [] for dp in spacings}
    gap = {dp: 0 for dp in spacings}
    psi = csa.psi
    x = csa.isa_samples[0]
    n = csa.n
    for i in range(1, n + 1):
        idx = marks.index_of(x)
        if idx:
            v = sorted_vs[idx - 1]
            for dp in spacings:
                if pending[dp]:
                    extras[dp].extend((px, v + i - pi) for pi, px in pending[dp])
                    pending[dp].clear()
                gap[dp] = 0
        else:
            for dp in spacings:
                gap[dp] += 1
                if gap[dp] == dp:
                    pending[dp].append((i, x))
                    gap[dp] = 0
        if i < n:
            x = psi(x)
            stats.psi_evals += 1
    for dp in spacings:
        stats.extra_samples[dp] = len(extras[dp])
    return extras


def _assemble(n: int, d_prime: int | None, xs: array, vs: array, extra: list[tuple[int, int]],
              vector: str, block: int) -> SampledLcp:
    samples = sorted(zip(xs, vs))
    if extra:
        samples = sorted(samples + extra)
    marks = build_vector(vector, (x for x, _ in samples), n, block)
    values = DeltaStream.encode((v for _, v in samples), block, offset=1)
    return SampledLcp(n, d_prime, marks, values, len(xs), len(extra))


def build_sampled_lcps(csa: Csa, d_primes: Iterable[int | None], vector: str = "gap",
                       block: int = DEFAULT_BLOCK) -> tuple[dict, SamplingStats]:
    """Sampled LCP arrays for several spacings, sharing both passes.

    ``None`` (or infinity) means no extra samples.
    """
    d_primes = [None if dp is None or dp == math.inf else int(dp) for dp in d_primes]
    for dp in d_primes:
        if dp is not None and dp < 1:
            raise ValueError("d_prime must be >= 1")
    stats = SamplingStats()
    xs, vs = _minimal_samples(csa, stats)
    spacings = sorted({dp for dp in d_primes if dp is not None})
    extras = _extra_samples(csa, xs, vs, spacings, stats) if spacings else {}
    stats.peak_buffered_samples = len(xs) + sum(len(e) for e in extras.values())
    out = {}
    for dp in d_primes:
        out[dp] = _assemble(csa.n, dp, xs, vs, extras.get(dp, []), vector, block)
    return out, stats


def build_sampled_lcp_from_csa(csa: Csa, d_prime: int | None = None, vector: str = "gap",
                               block: int = DEFAULT_BLOCK) -> SampledLcp:
    built, _ = build_sampled_lcps(csa, [d_prime], vector, block)
    return next(iter(built.values()))
