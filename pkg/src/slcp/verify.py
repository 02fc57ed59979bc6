"""Oracle-equivalence checks for every structure built from one text."""

from __future__ import annotations

import math
import random
from dataclasses import asdict, dataclass

from . import fileformat as ff
from .csa import build_csa
from .lcpbuild import (PlcpBuildStats, build_sampled_lcps, classify_minimal_from_csa,
                       lcp_pair_via_psi, minimal_sa_positions, plcp_stream)
from .oracle import LCP_LIMIT, naive_reference
from .plcprepr import build_sadakane, build_sampled_plcp, lcp_via_plcp
from .suffixcore import build_suffix_array, irreducible_scan, kasai_plcp

# above this length the q-sampled PLCP is checked on a random subset of positions
EXHAUSTIVE_CHAR_ACCESS = 20000
PATTERNS = 200


@dataclass(frozen=True)
class CheckResult:
    check: str
    ok: bool
    detail: str = ""

    def as_dict(self) -> dict:
        return asdict(self)


class _Collector:
    def __init__(self):
        self.results: list[CheckResult] = []

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.results.append(CheckResult(name, bool(ok), "" if ok else detail))

    def first_mismatch(self, name: str, got, want) -> None:
        got, want = list(got), list(want)
        if got == want:
            self.add(name, True)
            return
        if len(got) != len(want):
            self.add(name, False, f"length {len(got)} != {len(want)}")
            return
        k = next(k for k in range(len(got)) if got[k] != want[k])
        self.add(name, False, f"first difference at {k + 1}: {got[k]} != {want[k]}")


def _naive_count(symbols: bytes, pattern: bytes) -> int:
    count, start = 0, symbols.find(pattern)
    while start >= 0:
        count += 1
        start = symbols.find(pattern, start + 1)
    return count


def run_checks(text, max_n: int | None = None, index=None, d: int = 4, seed: int = 0) -> list[CheckResult]:
    col = _Collector()
    ref = naive_reference(text, max_n or LCP_LIMIT)
    n = ref.n
    rng = random.Random(seed)

    # classical pipeline
    sad = build_suffix_array(text)
    col.first_mismatch("suffixcore.sa", sad.sa.tolist(), ref.sa)
    col.first_mismatch("suffixcore.isa", sad.isa.tolist(), ref.isa)
    col.add("suffixcore.bwt", sad.bwt == ref.bwt, "BWT differs")
    col.first_mismatch("suffixcore.kasai", kasai_plcp(text, sad.sa, sad.isa), ref.plcp)
    col.first_mismatch("suffixcore.irreducible", irreducible_scan(text, sad.sa).plcp, ref.plcp)

    # CSA contracts
    csa = build_csa(text, d=d, sad=sad)
    col.add("csa.runs", csa.runs == ref.runs, f"R {csa.runs} != {ref.runs}")
    psi = [csa.psi(x) for x in range(1, n + 1)]
    col.add("csa.psi", all(ref.sa[p - 1] == ref.sa[x - 1] % n + 1 for x, p in enumerate(psi, 1)),
            "SA[Psi(x)] != SA[x] + 1")
    col.add("csa.lf", all(csa.lf(p) == x for x, p in enumerate(psi, 1)), "LF(Psi(x)) != x")
    located = [csa.locate_counted(x) for x in range(1, n + 1)]
    col.first_mismatch("csa.locate", (v for v, _ in located), ref.sa)
    worst = max(k for _, k in located)
    col.add("csa.locate_steps", worst <= d, f"locate took {worst} > d = {d} steps")
    col.first_mismatch("csa.isa", (csa.isa(i) for i in range(1, n + 1)), ref.isa)
    display_ok = True
    for _ in range(PATTERNS):
        i = rng.randint(1, n)
        length = rng.randint(0, min(40, n - i + 1))
        got, steps = csa.display_counted(i, length)
        display_ok &= got == text.symbols[i - 1:i - 1 + length] and steps <= d + length
    col.add("csa.display", display_ok, "display mismatch or too many steps")
    count_ok = True
    body = text.symbols[:-1]
    for _ in range(PATTERNS):
        i = rng.randint(1, max(1, n - 1))
        pattern = body[i - 1:i - 1 + rng.randint(1, 8)] or b"\x01"
        count_ok &= csa.count_ranks(pattern) == _naive_count(text.symbols, pattern)
    col.add("csa.count", count_ok, "count differs from naive occurrence count")

    if index is not None:
        col.add("index.n", index.n == n, f"index n {index.n} != {n}")
        if index.n == n:
            col.first_mismatch("index.locate", (index.locate(x) for x in range(1, n + 1)), ref.sa)

    # irreducible LCP algorithm
    stats = PlcpBuildStats()
    plcp = list(plcp_stream(csa, stats))
    col.first_mismatch("lcpbuild.plcp", plcp, ref.plcp)
    col.add("lcpbuild.irreducible_count", stats.irreducible_count == ref.runs,
            f"{stats.irreducible_count} irreducible values, R = {ref.runs}")
    col.add("lcpbuild.psi_evals", stats.psi_evals <= 3 * (stats.irreducible_sum + n),
            f"{stats.psi_evals} Psi evaluations")
    if sum(ref.lcp) <= 10**6:
        col.first_mismatch("lcpbuild.lcp_pair", (lcp_pair_via_psi(csa, b) for b in range(2, n + 1)),
                           ref.lcp[1:])
    bound = 2 * n * math.log2(n) if n > 1 else 0
    col.add("bound.irreducible_sum", stats.irreducible_sum <= bound,
            f"sum {stats.irreducible_sum} > 2 n log n = {bound:.0f}")

    cls = classify_minimal_from_csa(csa)
    col.first_mismatch("minimal.maximal_flags", cls.maximal.tolist(), ref.irreducible)
    want_min = [i == n or ref.irreducible[i] for i in range(1, n + 1)]
    col.first_mismatch("minimal.flags", cls.minimal.tolist(), want_min)
    count, msum = cls.count_sum(cls.minimal)
    _, isum = cls.count_sum(cls.maximal)
    col.add("minimal.count_is_R", count == ref.runs, f"{count} minimal values, R = {ref.runs}")
    col.add("minimal.sum_identity", msum == isum - (n - ref.runs), f"{msum} != {isum} - ({n} - {ref.runs})")
    nonstrict = cls.minimal & ~cls.strictly_minimal
    col.add("minimal.nonstrict_equality",
            all(plcp[i] == plcp[i + 1] + 1 for i in nonstrict.nonzero()[0]),
            "non-strict minimal value is not PLCP[i + 1] + 1")
    col.first_mismatch("minimal.sa_order",
                       list(minimal_sa_positions(csa)),
                       sorted(ref.isa[i] for i in range(n) if want_min[i]))

    # PLCP representations
    for kind in ("plain", "rle"):
        rep = build_sadakane(iter(plcp), n, kind)
        col.first_mismatch(f"plcprepr.sadakane_{kind}", (rep.access(i) for i in range(1, n + 1)), ref.plcp)
        col.first_mismatch(f"plcprepr.sadakane_{kind}_lcp", (lcp_via_plcp(csa, rep, x) for x in range(1, n + 1)),
                           ref.lcp)
    positions = range(1, n + 1) if n <= EXHAUSTIVE_CHAR_ACCESS else sorted(rng.sample(range(1, n + 1), 5000))
    for q in (1, 4, 16):
        rep = build_sampled_plcp(iter(plcp), n, q)
        ok = True
        for i in positions:
            acc = rep.access_counted(csa, i)
            a, b = divmod(i - 1, q)
            within = a + 1 >= len(rep.samples) or acc.comparisons <= q + rep.samples[a + 1] - rep.samples[a]
            ok &= acc.value == ref.plcp[i - 1] and within
        col.add(f"plcprepr.sampled_q{q}", ok, "value or comparison bound mismatch")

    # sampled LCP
    built, _ = build_sampled_lcps(csa, [1, 4, 32, None])
    for dp, slcp in built.items():
        name = f"sampledlcp.d{dp or 'inf'}"
        walks = [slcp.walk(csa, x) for x in range(1, n + 1)]
        col.first_mismatch(name, (v for v, _ in walks), ref.lcp)
        longest = max(k for _, k in walks)
        col.add(name + "_walk", dp is None or longest < dp, f"walk of {longest} >= {dp}")
        col.add(name + "_max_walk", slcp.max_walk_length(csa) == longest, "max_walk_length disagrees")
        col.add(name + "_samples", slcp.marks.rank1(n) == slcp.samples and slcp.minimal_samples <= ref.runs,
                "sample counts inconsistent")

    # serialization
    blob = ff.dump_index(csa)
    col.add("serialize.index", ff.dump_index(ff.load_index(blob)) == blob, "index re-serialization differs")
    structures = [build_sadakane(iter(plcp), n, "plain"), build_sampled_plcp(iter(plcp), n, 4), built[4]]
    same = all(ff.dump_structure(ff.load_structure(ff.dump_structure(s, blob), blob), blob)
               == ff.dump_structure(s, blob) for s in structures)
    col.add("serialize.structures", same, "structure re-serialization differs")
    return col.results
