import numpy as np
import pytest

from slcp.oracle import naive_reference
from slcp.suffixcore import (build_suffix_array, irreducible_plcp_from_text, irreducible_scan,
                             kasai_plcp)
from slcp.textstore import generate_de_bruijn, generate_random, load_text


def test_banana(banana):
    sad = build_suffix_array(banana)
    assert sad.sa.tolist() == [7, 6, 4, 2, 1, 5, 3]
    assert sad.bwt == bytes([1, 3, 3, 2, 0, 1, 1])
    assert sad.c_array == [0, 1, 4, 5, 7]
    assert kasai_plcp(banana, sad.sa, sad.isa) == [0, 3, 2, 1, 0, 0, 0]
    scan = irreducible_scan(banana, sad.sa)
    assert scan.plcp == [0, 3, 2, 1, 0, 0, 0]
    assert scan.naive_positions == [1, 2, 5, 6, 7]


def test_unary(unary4):
    sad = build_suffix_array(unary4)
    assert sad.sa.tolist() == [5, 4, 3, 2, 1]
    assert kasai_plcp(unary4, sad.sa, sad.isa) == [3, 2, 1, 0, 0]
    assert irreducible_scan(unary4, sad.sa).naive_positions == [1, 5]


def test_terminator_only():
    t = load_text(b"a")
    sad = build_suffix_array(t)
    assert sad.sa.tolist() == [2, 1]


@pytest.mark.parametrize("text", [
    generate_random(4, 10**4, 1),
    generate_random(2, 3000, 5),
    generate_random(26, 3000, 6),
    generate_de_bruijn(2, 6),
    generate_de_bruijn(3, 5),
])
def test_matches_oracle(text):
    ref = naive_reference(text)
    sad = build_suffix_array(text)
    assert sad.sa.tolist() == ref.sa
    assert sad.isa.tolist() == ref.isa
    assert sad.bwt == ref.bwt
    plcp = kasai_plcp(text, sad.sa, sad.isa)
    assert plcp == ref.plcp
    scan = irreducible_scan(text, sad.sa)
    assert scan.plcp == plcp == irreducible_plcp_from_text(text, sad.sa)
    assert scan.naive_positions == [i for i, f in enumerate(ref.irreducible, 1) if f]
    irr_sum = sum(v for v, f in zip(ref.plcp, ref.irreducible) if f)
    assert scan.comparisons <= irr_sum + text.n


def test_inconsistent_isa(banana):
    sad = build_suffix_array(banana)
    with pytest.raises(ValueError):
        kasai_plcp(banana, sad.sa, np.roll(sad.isa, 1))


def test_scaling_smoke():
    import time

    def timed(n):
        t = generate_random(4, n, 3)
        start = time.perf_counter()
        build_suffix_array(t)
        return time.perf_counter() - start

    small, large = timed(2 * 10**4), timed(2 * 10**5)
    # ten times the input: well below quadratic growth
    assert large < 40 * small + 0.5
