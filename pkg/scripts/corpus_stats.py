"""LCP statistics and entropy estimates for a set of synthetic desk corpora.

    python scripts/corpus_stats.py --order 5 --format csv > corpus_stats.csv
"""

import argparse
import sys

from slcp.analysis import STATS_COLUMNS, compute_stats, entropy_estimate, format_rows, stats_row
from slcp.textstore import generate_concat, generate_de_bruijn, generate_random, generate_repeats


def corpora(scale: int):
    yield "random-s4", generate_random(4, scale, 1)
    yield "random-s26", generate_random(26, scale, 2)
    yield "debruijn-2-14", generate_de_bruijn(2, 14)
    yield "repeats-s4-r8", generate_repeats(4, scale // 8, 8, 0.001, 3)
    yield "concat-s4-r8", generate_concat(generate_random(4, scale // 8, 4), 8)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=int, default=5)
    ap.add_argument("--scale", type=int, default=10**5, help="approximate text length")
    ap.add_argument("--format", choices=("csv", "json"), default="csv")
    args = ap.parse_args()
    rows = [stats_row(name, compute_stats(text), entropy_estimate(text, args.order))
            for name, text in corpora(args.scale)]
    sys.stdout.write(format_rows(rows, args.format, STATS_COLUMNS if args.format == "csv" else None))
    return 0


if __name__ == "__main__":
    sys.exit(main())
