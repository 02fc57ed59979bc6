import math

import pytest
from hypothesis import given, settings, strategies as st

from slcp.csa import build_csa
from slcp.lcpbuild import (PlcpBuildStats, build_plcp_from_csa, build_sampled_lcp_from_csa,
                           build_sampled_lcps, classify_minimal_from_csa, d_prime_from_epsilon,
                           lcp_pair_via_psi, minimal_sa_positions, plcp_stream)
from slcp.oracle import naive_reference, oracle_concat_reference
from slcp.textstore import generate_concat, generate_de_bruijn, generate_random, load_text


def test_banana_stream(banana):
    csa = build_csa(banana, d=2)
    got = []
    stats = build_plcp_from_csa(csa, lambda i, v: got.append((i, v)))
    assert got == list(enumerate([0, 3, 2, 1, 0, 0, 0], 1))
    assert (stats.irreducible_count, stats.irreducible_sum) == (5, 3)


def test_lcp_pair(banana):
    csa = build_csa(banana, d=2)
    assert lcp_pair_via_psi(csa, 4) == 3
    assert lcp_pair_via_psi(csa, 2) == 0
    assert lcp_pair_via_psi(csa, 7) == 2
    for bad in (1, 8):
        with pytest.raises(ValueError):
            lcp_pair_via_psi(csa, bad)


def test_psi_budget_de_bruijn():
    t = generate_de_bruijn(2, 7)
    csa = build_csa(t, d=8)
    stats = PlcpBuildStats()
    assert list(plcp_stream(csa, stats)) == naive_reference(t).plcp
    assert stats.psi_evals <= 3 * (stats.irreducible_sum + t.n)


def test_classification_banana(banana):
    cls = classify_minimal_from_csa(build_csa(banana, d=2))
    assert [i for i, f in enumerate(cls.minimal, 1) if f] == [1, 4, 5, 6, 7]
    assert [i for i, f in enumerate(cls.strictly_minimal, 1) if f] == [1, 5, 6, 7]
    assert cls.count_sum(cls.minimal) == (5, 1)
    assert cls.count_sum(cls.strictly_minimal) == (4, 0)


def test_sampled_banana_unbounded(banana):
    csa = build_csa(banana, d=2)
    slcp = build_sampled_lcp_from_csa(csa, None)
    assert [x for x in range(1, 8) if slcp.marks.index_of(x)] == [1, 2, 5, 6]
    assert list(slcp.values) == [0, 0, 0, 0]
    assert slcp.minimal_samples == 4 and slcp.extra_samples == 0
    assert [slcp.access(csa, x) for x in range(1, 8)] == [0, 0, 1, 3, 0, 0, 2]


def test_concat_sampled():
    base = generate_random(4, 2000, 3)
    concat = generate_concat(base, 8)
    csa = build_csa(concat, d=16, tie_markers=True)
    ref = oracle_concat_reference(concat)
    built, stats = build_sampled_lcps(csa, [64, None])
    bounded = [built[64].walk(csa, x) for x in range(1, concat.n + 1)]
    assert [v for v, _ in bounded] == ref.lcp
    assert max(k for _, k in bounded) < 64
    # unbounded walks cross whole copies; a sample keeps this quick
    for x in range(1, concat.n + 1, 97):
        assert built[None].access(csa, x) == ref.lcp[x - 1]
    assert stats.extra_samples[64] > 0
    assert built[None].minimal_samples <= csa.runs


def test_invalid_d_prime(banana):
    csa = build_csa(banana, d=2)
    with pytest.raises(ValueError):
        build_sampled_lcps(csa, [0])


def test_epsilon():
    assert d_prime_from_epsilon(10**6, 10**4, 0.5) == 10**4
    assert d_prime_from_epsilon(100, 100, 0.01) >= 1
    with pytest.raises(ValueError):
        d_prime_from_epsilon(100, 10, 1.0)


def test_infinite_alias(banana):
    csa = build_csa(banana, d=2)
    built, _ = build_sampled_lcps(csa, [math.inf])
    assert None in built


texts = st.binary(min_size=1, max_size=150).filter(lambda b: 0 not in b)


@settings(max_examples=60, deadline=None)
@given(texts, st.integers(1, 6), st.sampled_from([1, 2, 3, 7, None]))
def test_property_against_oracle(data, d, dp):
    t = load_text(data)
    ref = naive_reference(t)
    csa = build_csa(t, d=d)
    stats = PlcpBuildStats()
    assert list(plcp_stream(csa, stats)) == ref.plcp
    assert stats.irreducible_count == ref.runs
    cls = classify_minimal_from_csa(csa)
    count, msum = cls.count_sum(cls.minimal)
    assert count == ref.runs
    assert msum == stats.irreducible_sum - (t.n - ref.runs)
    assert sorted(minimal_sa_positions(csa)) == sorted(
        ref.isa[i - 1] for i in range(1, t.n + 1) if cls.minimal[i - 1])
    slcp = build_sampled_lcp_from_csa(csa, dp)
    walks = [slcp.walk(csa, x) for x in range(1, t.n + 1)]
    assert [v for v, _ in walks] == ref.lcp
    if dp is not None:
        assert all(k < dp for _, k in walks)
