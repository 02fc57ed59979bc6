"""Sampled LCP arrays and PLCP representations over a Psi-based compressed suffix array."""

from .csa import Csa, build_csa
from .lcpbuild import (build_plcp_from_csa, build_sampled_lcp_from_csa, build_sampled_lcps,
                       classify_minimal_from_csa, lcp_pair_via_psi)
from .sampledlcp import SampledLcp
from .textstore import (SentinelConcat, Text, generate_concat, generate_de_bruijn, generate_random,
                        generate_repeats, load_text, read_text)

__all__ = [
    "Csa", "SampledLcp", "SentinelConcat", "Text",
    "build_csa", "build_plcp_from_csa", "build_sampled_lcp_from_csa", "build_sampled_lcps",
    "classify_minimal_from_csa", "generate_concat", "generate_de_bruijn", "generate_random",
    "generate_repeats", "lcp_pair_via_psi", "load_text", "read_text",
]
