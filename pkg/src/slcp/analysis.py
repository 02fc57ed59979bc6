"""LCP statistics and entropy-based estimates for data-set tables.

All logarithms are base 2.  The terminator is left out of every entropy and
collision-probability computation.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass

import numpy as np

from .csa import Csa, build_csa
from .lcpbuild import classify_minimal_from_csa
from .textstore import SentinelConcat, TextError


class IdentityViolation(AssertionError):
    """A counting identity between minimal and irreducible values failed."""


class EstimateError(ValueError):
    pass


@dataclass(frozen=True)
class CountSum:
    count: int
    sum: int

    def per_n(self, n: int) -> float:
        return self.sum / n


@dataclass(frozen=True)
class LcpStats:
    n: int
    runs: int
    irreducible: CountSum
    minimal: CountSum
    strictly_minimal: CountSum

    def check(self) -> None:
        n, r = self.n, self.runs
        if self.irreducible.count != r:
            raise IdentityViolation(f"{self.irreducible.count} irreducible values but R = {r}")
        if self.minimal.count != r:
            raise IdentityViolation(f"{self.minimal.count} minimal values but R = {r}")
        if self.minimal.sum != self.irreducible.sum - (n - r):
            raise IdentityViolation(
                f"minimal sum {self.minimal.sum} != {self.irreducible.sum} - ({n} - {r})")
        if self.strictly_minimal.count > self.minimal.count:
            raise IdentityViolation("more strictly minimal than minimal values")


def compute_stats(source, d: int = 32) -> LcpStats:
    """Exact counts and sums for a text, a marker concatenation or a prebuilt CSA.

    A concatenation is measured with its final marker tied to the inner ones.
    """
    if isinstance(source, Csa):
        csa = source
    else:
        csa = build_csa(source, d=d, tie_markers=isinstance(source, SentinelConcat))
    cls = classify_minimal_from_csa(csa)
    stats = LcpStats(
        cls.n, cls.runs,
        CountSum(*cls.count_sum(cls.maximal)),
        CountSum(*cls.count_sum(cls.minimal)),
        CountSum(*cls.count_sum(cls.strictly_minimal)),
    )
    stats.check()
    return stats


def _context_counts(text, k: int) -> tuple[np.ndarray, np.ndarray]:
    """Per (context, symbol) pair: context id and occurrence count."""
    body = np.frombuffer(text.content(), dtype=np.uint8).astype(np.int64)
    m = len(body)
    if m <= k:
        raise TextError(f"text of length {m} has no order-{k} contexts")
    base = int(body.max()) + 1 if m else 1
    windows = np.lib.stride_tricks.sliding_window_view(body, k + 1)
    if base ** (k + 1) < 1 << 62:
        weights = base ** np.arange(k, -1, -1, dtype=np.int64)
        keys = windows @ weights
        pairs, counts = np.unique(keys, return_counts=True)
        contexts = pairs // base
    else:
        rows, counts = np.unique(windows, axis=0, return_counts=True)
        _, contexts = np.unique(rows[:, :-1], axis=0, return_inverse=True)
        contexts = contexts.ravel()
    return contexts, counts


def _per_context(text, k: int):
    contexts, counts = _context_counts(text, k)
    _, ctx_index = np.unique(contexts, return_inverse=True)
    ctx_index = ctx_index.ravel()
    totals = np.bincount(ctx_index, weights=counts)
    p = counts / totals[ctx_index]
    return ctx_index, counts, totals, p


def empirical_entropy(text, k: int = 0) -> float:
    """Order-k empirical entropy H_k in bits per symbol."""
    if k < 0:
        raise ValueError("context order must be >= 0")
    _, counts, totals, p = _per_context(text, k)
    h = -float(np.sum(counts * np.log2(p))) / float(totals.sum())
    return h if h > 0 else 0.0


def effective_alphabet(text, k: int = 0) -> float:
    """Reciprocal of the collision probability of two symbols sharing an order-k context."""
    if k < 0:
        raise ValueError("context order must be >= 0")
    ctx_index, counts, totals, p = _per_context(text, k)
    collision = float(np.sum(counts * p)) / float(totals.sum())
    return 1.0 / collision


def estimate_irreducible_sum(n: int, sigma_prime: float, h: float) -> float:
    """n (1 - 1/sigma') log n / H - n / sigma'."""
    if h <= 0:
        raise EstimateError("entropy is zero; the estimate is undefined")
    if sigma_prime < 1:
        raise EstimateError("effective alphabet size must be >= 1")
    return n * (1 - 1 / sigma_prime) * math.log2(n) / h - n / sigma_prime


@dataclass(frozen=True)
class EntropyEstimate:
    k: int
    h_k: float
    sigma_prime: float
    s_prime: float
    degenerate: bool = False


def entropy_estimate(text, k: int = 5) -> EntropyEstimate:
    """H_k, sigma' and S'; degenerate inputs report S' = 0 with the flag set."""
    h = empirical_entropy(text, k)
    sp = effective_alphabet(text, k)
    if h <= 1e-12:
        return EntropyEstimate(k, h, sp, 0.0, True)
    s = estimate_irreducible_sum(text.n, sp, h)
    if s <= 0:
        return EntropyEstimate(k, h, sp, 0.0, True)
    return EntropyEstimate(k, h, sp, s)


@dataclass(frozen=True)
class Prop1Result:
    base_sum: int
    copy_length: int
    r: int
    measured_sum: int
    predicted_sum: int
    oracle_sum: int | None = None

    @property
    def match(self) -> bool:
        return self.measured_sum == self.predicted_sum and self.oracle_sum in (None, self.measured_sum)


def prop1_experiment(base, r: int, oracle: bool | None = None) -> Prop1Result:
    """Irreducible sum of ``r`` marker-separated copies against ``s + (r - 1) N``.

    ``oracle`` adds a brute-force cross-check; by default it runs whenever the
    concatenation fits the oracle limit.
    """
    from .oracle import LCP_LIMIT, oracle_concat_reference
    from .textstore import generate_concat

    concat = generate_concat(base, r)
    s = compute_stats(base).irreducible.sum
    measured = compute_stats(concat).irreducible.sum
    predicted = s + (r - 1) * concat.copy_length
    if oracle is None:
        oracle = concat.n <= LCP_LIMIT
    oracle_sum = None
    if oracle:
        ref = oracle_concat_reference(concat)
        oracle_sum = sum(v for v, irr in zip(ref.plcp, ref.irreducible) if irr)
    return Prop1Result(s, concat.copy_length, r, measured, predicted, oracle_sum)


STATS_COLUMNS = [
    "name", "n", "R", "k", "H_k", "sigma_prime", "S_prime", "S_prime_per_n", "degenerate",
    "minimal_count", "minimal_sum", "minimal_per_n",
    "strict_count", "strict_sum", "strict_per_n",
    "irreducible_count", "irreducible_sum",
]


def stats_row(name: str, stats: LcpStats, est: EntropyEstimate) -> dict:
    n = stats.n
    return {
        "name": name,
        "n": n,
        "R": stats.runs,
        "k": est.k,
        "H_k": round(est.h_k, 6),
        "sigma_prime": round(est.sigma_prime, 6),
        "S_prime": round(est.s_prime, 1),
        "S_prime_per_n": round(est.s_prime / n, 6),
        "degenerate": est.degenerate,
        "minimal_count": stats.minimal.count,
        "minimal_sum": stats.minimal.sum,
        "minimal_per_n": round(stats.minimal.per_n(n), 6),
        "strict_count": stats.strictly_minimal.count,
        "strict_sum": stats.strictly_minimal.sum,
        "strict_per_n": round(stats.strictly_minimal.per_n(n), 6),
        "irreducible_count": stats.irreducible.count,
        "irreducible_sum": stats.irreducible.sum,
    }


def format_rows(rows: list[dict], fmt: str = "csv", columns: list[str] | None = None) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    if fmt != "csv":
        raise ValueError(f"unknown output format {fmt!r}")
    columns = columns or (list(rows[0]) if rows else [])
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return out.getvalue()


def stats_as_dict(stats: LcpStats) -> dict:
    return asdict(stats)
