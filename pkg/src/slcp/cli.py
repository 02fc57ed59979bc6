"""Command-line harness: build, lcp-build, bench, stats, verify, gen.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import fileformat as ff
from .analysis import compute_stats, entropy_estimate, format_rows, stats_row, STATS_COLUMNS
from .bench import run_bench
from .csa import build_csa
from .lcpbuild import PlcpBuildStats, build_sampled_lcps, plcp_stream
from .plcprepr import build_sadakane, build_sampled_plcp
from .textstore import (TextError, generate_de_bruijn, generate_random, generate_repeats,
                        read_text)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3
REPRS = ("plcp-plain", "plcp-rle", "plcp-sampled", "sampled-lcp")


class UsageError(Exception):
    pass


def _emit(rows: list[dict], fmt: str, out=None) -> None:
    (out or sys.stdout).write(format_rows(rows, fmt))


def _load_index(path) -> tuple[bytes, object]:
    data = ff.read_bytes(path)
    return data, ff.load_index(data)


def _parse_param(value: str | None, repr_name: str) -> int | None:
    if value is None:
        return 32 if repr_name == "plcp-sampled" else None
    if value.lower() in ("inf", "none", "infinity"):
        if repr_name != "sampled-lcp":
            raise UsageError(f"{repr_name} needs a finite parameter")
        return None
    try:
        p = int(value)
    except ValueError:
        raise UsageError(f"parameter must be an integer or 'inf', got {value!r}") from None
    if p < 1:
        raise UsageError("parameter must be >= 1")
    return p


# -- commands -----------------------------------------------------------------

def cmd_build(args) -> int:
    if args.sa_sample_rate < 1:
        raise UsageError("--sa-sample-rate must be >= 1")
    text = read_text(args.input)
    start = time.perf_counter()
    csa = build_csa(text, d=args.sa_sample_rate)
    elapsed = time.perf_counter() - start
    ff.save_bytes(args.output, ff.dump_index(csa))
    _emit([{"n": csa.n, "sigma": text.sigma, "R": csa.runs, "d": csa.d,
            "build_seconds": round(elapsed, 4)}], args.format)
    return EXIT_OK


def build_structure(csa, repr_name: str, param: int | None, vector: str = "gap"):
    """Build one LCP structure straight from the CSA; returns (structure, info)."""
    stats = PlcpBuildStats()
    start = time.perf_counter()
    info: dict = {}
    if repr_name in ("plcp-plain", "plcp-rle"):
        structure = build_sadakane(plcp_stream(csa, stats), csa.n, repr_name[5:])
        psi_evals = stats.psi_evals
    elif repr_name == "plcp-sampled":
        structure = build_sampled_plcp(plcp_stream(csa, stats), csa.n, param)
        psi_evals = stats.psi_evals
    elif repr_name == "sampled-lcp":
        built, sstats = build_sampled_lcps(csa, [param], vector)
        structure = built[param]
        psi_evals = sstats.psi_evals
        info = {"minimal_samples": structure.minimal_samples,
                "extra_samples": structure.extra_samples}
    else:
        raise UsageError(f"unknown representation {repr_name!r}")
    elapsed = time.perf_counter() - start
    return structure, {"repr": repr_name, "param": param, "build_seconds": round(elapsed, 4),
                       "psi_evals": psi_evals, **info}


def cmd_lcp_build(args) -> int:
    param = _parse_param(args.param, args.repr)
    index_bytes, csa = _load_index(args.input)
    structure, info = build_structure(csa, args.repr, param, args.vector)
    data = ff.dump_structure(structure, index_bytes)
    ff.save_bytes(args.output, data)
    if hasattr(structure, "size_report"):
        bits = structure.size_report().total_bits
        payload = structure.marks.size_in_bits() + structure.values.size_in_bits()
    elif hasattr(structure, "bits"):
        bits = structure.size_in_bits()
        payload = structure.bits.payload_bits()
    else:
        bits = payload = structure.size_in_bits()
    _emit([{**info, "size_bits": bits, "payload_bits": payload,
            "bits_per_symbol": round(bits / csa.n, 6), "file_bytes": len(data)}], args.format)
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.queries < 1:
        raise UsageError("--queries must be >= 1")
    index_bytes, csa = _load_index(args.input)
    rows = [run_bench(csa, None, args.queries, args.seed).as_dict()]
    for path in args.structure or []:
        data = ff.read_bytes(path)
        structure = ff.load_structure(data, index_bytes)
        rows.append(run_bench(csa, structure, args.queries, args.seed).as_dict())
    _emit(rows, args.format)
    return EXIT_OK


def cmd_stats(args) -> int:
    if args.order < 0:
        raise UsageError("--order must be >= 0")
    text = read_text(args.input)
    stats = compute_stats(text)
    est = entropy_estimate(text, args.order)
    row = stats_row(Path(args.input).name, stats, est)
    if args.format == "json":
        _emit([row], "json")
    else:
        sys.stdout.write(format_rows([row], "csv", STATS_COLUMNS))
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import run_checks

    text = read_text(args.input)
    index = None
    if args.index:
        try:
            index = ff.load_index(ff.read_bytes(args.index))
        except ff.FormatError as exc:
            _emit([{"check": "index-file", "ok": False, "detail": str(exc)}], args.format)
            return EXIT_FAIL
    results = run_checks(text, max_n=args.max_n, index=index, d=args.sa_sample_rate)
    _emit([r.as_dict() for r in results], args.format)
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "random":
        text = generate_random(args.sigma, args.n, args.seed)
        data = text.to_bytes()
    elif kind == "debruijn":
        data = generate_de_bruijn(args.sigma, args.k).to_bytes()
    elif kind == "repeats":
        data = generate_repeats(args.sigma, args.n, args.copies, args.mutation, args.seed).to_bytes()
    else:  # concat: copies of a random base separated by a byte below its alphabet
        if args.copies < 2:
            raise UsageError("concat needs --copies >= 2")
        base = generate_random(args.sigma, args.n, args.seed).to_bytes()
        if min(base) <= ord("$"):
            raise UsageError("alphabet too large for the '$' separator")
        data = b"$".join([base] * args.copies)
    ff.save_bytes(args.output, data)
    return EXIT_OK


# -- parser -------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="slcp", description="Sampled LCP arrays over a Psi-based compressed suffix array.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(sp):
        sp.add_argument("--format", choices=("csv", "json"), default="csv")

    b = sub.add_parser("build", help="build and serialize a CSA index")
    b.add_argument("--input", required=True)
    b.add_argument("--output", required=True)
    b.add_argument("--sa-sample-rate", type=int, default=32)
    fmt(b)
    b.set_defaults(func=cmd_build)

    lb = sub.add_parser("lcp-build", help="build an LCP structure from an index")
    lb.add_argument("--input", required=True, help="index file")
    lb.add_argument("--output", required=True)
    lb.add_argument("--repr", required=True, choices=REPRS)
    lb.add_argument("--param", help="q for plcp-sampled, d' (or inf) for sampled-lcp")
    lb.add_argument("--vector", choices=("plain", "gap", "rle"), default="gap",
                    help="mark vector of sampled-lcp")
    fmt(lb)
    lb.set_defaults(func=cmd_lcp_build)

    be = sub.add_parser("bench", help="time random LCP queries")
    be.add_argument("--input", required=True, help="index file")
    be.add_argument("--structure", action="append", help="structure file (repeatable)")
    be.add_argument("--queries", type=int, default=10**5)
    be.add_argument("--seed", type=int, default=0)
    fmt(be)
    be.set_defaults(func=cmd_bench)

    st = sub.add_parser("stats", help="LCP statistics and entropy estimate of a text")
    st.add_argument("--input", required=True)
    st.add_argument("--order", type=int, default=5)
    fmt(st)
    st.set_defaults(func=cmd_stats)

    v = sub.add_parser("verify", help="check every structure against the brute-force oracle")
    v.add_argument("--input", required=True, help="text file")
    v.add_argument("--index", help="index file to check against the text")
    v.add_argument("--max-n", type=int, default=None)
    v.add_argument("--sa-sample-rate", type=int, default=4)
    fmt(v)
    v.set_defaults(func=cmd_verify)

    g = sub.add_parser("gen", help="write a synthetic text")
    g.add_argument("kind", choices=("random", "debruijn", "repeats", "concat"))
    g.add_argument("--output", required=True)
    g.add_argument("--sigma", type=int, default=4)
    g.add_argument("--n", type=int, default=10**4, help="length (base length for repeats/concat)")
    g.add_argument("--k", type=int, default=10, help="de Bruijn order")
    g.add_argument("--copies", type=int, default=8)
    g.add_argument("--mutation", type=float, default=0.001)
    g.add_argument("--seed", type=int, default=0)
    g.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"slcp: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ff.FormatError) as exc:
        if isinstance(exc, ff.FormatError):
            print(f"slcp: verification failure: {exc}", file=sys.stderr)
            return EXIT_FAIL
        print(f"slcp: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (TextError, ValueError) as exc:
        print(f"slcp: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
