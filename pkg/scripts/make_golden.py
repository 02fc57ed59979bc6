"""Regenerate the pinned banana files in tests/golden (only after a deliberate format change)."""

import sys
from pathlib import Path

from slcp import fileformat as ff
from slcp.cli import build_structure
from slcp.csa import build_csa
from slcp.textstore import load_text

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"
STRUCTURES = [("plcp-plain", None), ("plcp-rle", None), ("plcp-sampled", 2), ("sampled-lcp", None)]


def main() -> int:
    GOLDEN.mkdir(parents=True, exist_ok=True)
    csa = build_csa(load_text(b"banana"), d=2)
    index = ff.dump_index(csa)
    (GOLDEN / "banana.idx").write_bytes(index)
    for name, param in STRUCTURES:
        structure, _ = build_structure(csa, name, param)
        (GOLDEN / f"banana.{name}.lcp").write_bytes(ff.dump_structure(structure, index))
    return 0


if __name__ == "__main__":
    sys.exit(main())
