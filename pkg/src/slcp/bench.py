"""Query benchmarks for LCP structures and bare locate.

Queries are uniform random SA positions drawn from a seeded generator.  Each
configuration runs a warm-up, a timed pass, and a separate instrumented pass
that counts Psi evaluations, so the counter does not inflate the latencies.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass

import numpy as np

from .plcprepr import SadakanePlcp, SampledPlcpText
from .sampledlcp import SampledLcp

WARMUP = 1000


@dataclass(frozen=True)
class BenchResult:
    structure: str
    d: int
    q: int | None
    d_prime: int | None
    vector: str | None
    bits_per_symbol: float
    mean_latency_us: float
    p99_latency_us: float
    mean_psi_steps: float
    max_psi_steps: int
    queries: int
    seed: int
    seconds: float

    def as_dict(self) -> dict:
        return asdict(self)


def query_positions(n: int, queries: int, seed: int) -> list[int]:
    rng = random.Random(seed)
    return [rng.randint(1, n) for _ in range(queries)]


class _PsiCounter:
    """Shadows ``csa.psi`` on the instance while counting calls."""

    def __init__(self, csa):
        self.csa = csa
        self.calls = 0

    def __enter__(self):
        inner = self.inner = self.csa.psi

        def counted(x):
            self.calls += 1
            return inner(x)

        self.csa.psi = counted
        return self

    def __exit__(self, *exc):
        self.csa.psi = self.inner


def _query_fn(csa, structure):
    if structure is None:
        return csa.locate
    if isinstance(structure, SampledLcp):
        return lambda x: structure.access(csa, x)
    if isinstance(structure, SampledPlcpText):
        return lambda x: structure.access_counted(csa, csa.locate(x), x).value
    if isinstance(structure, SadakanePlcp):
        return lambda x: structure.access(csa.locate(x))
    raise TypeError(f"cannot benchmark {type(structure).__name__}")


def describe(csa, structure) -> dict:
    """Identifier, parameters and size (bits per symbol) of a structure."""
    n = csa.n
    if structure is None:
        size = csa.size_report()
        return dict(structure="locate", q=None, d_prime=None, vector=None,
                    bits_per_symbol=(size["sa_sample_bits"] + size["isa_sample_bits"]) / n)
    if isinstance(structure, SampledLcp):
        return dict(structure="sampled-lcp", q=None, d_prime=structure.d_prime,
                    vector=structure.marks.kind,
                    bits_per_symbol=structure.size_report().bits_per_symbol)
    if isinstance(structure, SampledPlcpText):
        return dict(structure="plcp-sampled", q=structure.q, d_prime=None, vector=None,
                    bits_per_symbol=structure.size_in_bits() / n)
    return dict(structure=f"plcp-{structure.kind}", q=None, d_prime=None, vector=structure.kind,
                bits_per_symbol=structure.size_in_bits() / n)


def run_bench(csa, structure=None, queries: int = 10**5, seed: int = 0,
              positions: list[int] | None = None) -> BenchResult:
    """Time ``queries`` LCP lookups (or locates when ``structure`` is None)."""
    start = time.perf_counter()
    if positions is None:
        positions = query_positions(csa.n, queries, seed)
    fn = _query_fn(csa, structure)
    for x in positions[:WARMUP]:
        fn(x)
    lat = np.empty(len(positions), dtype=np.int64)
    clock = time.perf_counter_ns
    for k, x in enumerate(positions):
        t0 = clock()
        fn(x)
        lat[k] = clock() - t0
    steps = np.empty(len(positions), dtype=np.int64)
    with _PsiCounter(csa) as counter:
        for k, x in enumerate(positions):
            before = counter.calls
            fn(x)
            steps[k] = counter.calls - before
    info = describe(csa, structure)
    return BenchResult(
        d=csa.d,
        mean_latency_us=float(lat.mean()) / 1e3 if len(lat) else 0.0,
        p99_latency_us=float(np.percentile(lat, 99)) / 1e3 if len(lat) else 0.0,
        mean_psi_steps=float(steps.mean()) if len(steps) else 0.0,
        max_psi_steps=int(steps.max()) if len(steps) else 0,
        queries=len(positions),
        seed=seed,
        seconds=time.perf_counter() - start,
        **info,
    )
