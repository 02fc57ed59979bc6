"""Irreducible sums of r marker-separated copies against s + (r - 1) N."""

import argparse
import sys

from slcp.analysis import format_rows, prop1_experiment
from slcp.textstore import generate_random, load_text


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--base-len", type=int, default=2000)
    ap.add_argument("--sigma", type=int, default=4)
    ap.add_argument("--copies", type=int, nargs="+", default=[2, 3, 4, 8, 16])
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    bases = [("banana", load_text(b"banana")),
             (f"random-s{args.sigma}", generate_random(args.sigma, args.base_len, args.seed))]
    rows = []
    for name, base in bases:
        for r in args.copies:
            res = prop1_experiment(base, r)
            rows.append({"base": name, "N": res.copy_length, "r": r, "s": res.base_sum,
                         "measured": res.measured_sum, "predicted": res.predicted_sum,
                         "oracle": res.oracle_sum, "match": res.match})
    sys.stdout.write(format_rows(rows))
    return 0 if all(row["match"] for row in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
