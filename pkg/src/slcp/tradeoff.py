"""Size/time trade-off tables for the sampled LCP array and for locate."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .bench import query_positions, run_bench
from .csa import build_csa
from .lcpbuild import build_sampled_lcps
from .suffixcore import build_suffix_array

D_VALUES = (8, 16, 32, 64, 128)
D_PRIMES = (8, 32, 128, 512, None)


@dataclass
class TradeoffTables:
    n: int
    runs: int
    by_d_prime: list[dict] = field(default_factory=list)
    by_d: list[dict] = field(default_factory=list)
    build_seconds: dict = field(default_factory=dict)


def _monotone(rows: list[dict], key: str) -> bool:
    sizes = [r[key] for r in rows]
    return all(a >= b for a, b in zip(sizes, sizes[1:]))


def is_monotone(tables: TradeoffTables) -> tuple[bool, bool]:
    """Sizes never grow as d' (resp. d) grows."""
    return _monotone(tables.by_d_prime, "bits_per_symbol"), _monotone(tables.by_d, "bits_per_symbol")


def tradeoff_tables(text, d_values=D_VALUES, d_primes=D_PRIMES, queries: int = 2000,
                    seed: int = 0, base_d: int = 32, vector: str = "gap",
                    log=None) -> TradeoffTables:
    """Build once, then bench sampled-LCP queries per d' and locate per d.

    The unbounded d' is sized but not queried: its walks are only bounded by
    the longest unsampled stretch of the text.
    """
    say = log or (lambda msg: None)
    clock = time.perf_counter
    t0 = clock()
    sad = build_suffix_array(text)
    build = {"suffix_array": clock() - t0}
    t0 = clock()
    csa = build_csa(text, d=base_d, sad=sad)
    build["csa"] = clock() - t0
    say(f"n={csa.n} R={csa.runs} SA {build['suffix_array']:.1f}s")
    t0 = clock()
    built, sstats = build_sampled_lcps(csa, d_primes, vector)
    build["sampled_lcp"] = clock() - t0
    say(f"sampled LCP arrays in {build['sampled_lcp']:.1f}s ({sstats.psi_evals} Psi evaluations)")
    out = TradeoffTables(csa.n, csa.runs, build_seconds=build)
    positions = query_positions(csa.n, queries, seed)
    order = sorted(built, key=lambda dp: float("inf") if dp is None else dp)
    for dp in order:
        slcp = built[dp]
        report = slcp.size_report()
        row = {"d_prime": dp if dp is not None else "inf", "vector": vector,
               "minimal_samples": slcp.minimal_samples, "extra_samples": slcp.extra_samples,
               "bits_per_symbol": report.bits_per_symbol}
        if dp is not None:
            res = run_bench(csa, slcp, seed=seed, positions=positions)
            row.update(mean_psi_steps=res.mean_psi_steps, max_psi_steps=res.max_psi_steps,
                       mean_latency_us=res.mean_latency_us, p99_latency_us=res.p99_latency_us,
                       queries=res.queries, seconds=res.seconds)
        out.by_d_prime.append(row)
        say(f"d'={row['d_prime']}: {row['bits_per_symbol']:.4f} bits/symbol")
    for d in d_values:
        c = csa if d == base_d else build_csa(text, d=d, sad=sad)
        res = run_bench(c, None, seed=seed, positions=positions)
        out.by_d.append({"d": d, "bits_per_symbol": res.bits_per_symbol,
                         "mean_psi_steps": res.mean_psi_steps, "max_psi_steps": res.max_psi_steps,
                         "mean_latency_us": res.mean_latency_us, "p99_latency_us": res.p99_latency_us,
                         "queries": res.queries, "seconds": res.seconds})
        say(f"d={d}: {res.bits_per_symbol:.4f} bits/symbol, {res.mean_psi_steps:.2f} steps")
    return out
