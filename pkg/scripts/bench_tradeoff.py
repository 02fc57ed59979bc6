"""Size/time trade-off tables on a synthetic repetitive corpus.

    python scripts/bench_tradeoff.py --base-len 1000000 --copies 10 --out results/
"""

import argparse
import json
import sys
from pathlib import Path

from slcp.analysis import format_rows
from slcp.textstore import generate_repeats
from slcp.tradeoff import is_monotone, tradeoff_tables


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sigma", type=int, default=4)
    ap.add_argument("--base-len", type=int, default=10**6)
    ap.add_argument("--copies", type=int, default=10)
    ap.add_argument("--mutation", type=float, default=0.001)
    ap.add_argument("--queries", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--vector", choices=("plain", "gap", "rle"), default="gap")
    ap.add_argument("--out", type=Path, default=Path("results"))
    args = ap.parse_args()

    text = generate_repeats(args.sigma, args.base_len, args.copies, args.mutation, args.seed)
    tables = tradeoff_tables(text, queries=args.queries, seed=args.seed, vector=args.vector,
                             log=lambda m: print(m, file=sys.stderr, flush=True))
    args.out.mkdir(parents=True, exist_ok=True)
    (args.out / "size_vs_d_prime.csv").write_text(format_rows(tables.by_d_prime))
    (args.out / "size_vs_d.csv").write_text(format_rows(tables.by_d))
    mono = is_monotone(tables)
    summary = {"n": tables.n, "R": tables.runs, "build_seconds": tables.build_seconds,
               "monotone_d_prime": mono[0], "monotone_d": mono[1]}
    (args.out / "summary.json").write_text(json.dumps(summary, indent=2) + "\n")
    print(format_rows(tables.by_d_prime))
    print(format_rows(tables.by_d))
    print(json.dumps(summary, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
