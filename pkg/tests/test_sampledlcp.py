import pytest

from slcp.csa import build_csa
from slcp.lcpbuild import build_sampled_lcp_from_csa, build_sampled_lcps, plcp_stream
from slcp.oracle import naive_reference
from slcp.plcprepr import build_sadakane
from slcp.sampledlcp import HEADER_BITS, access, max_walk_length, size_report
from slcp.textstore import generate_random, load_text


@pytest.fixture(scope="module")
def banana_csa(banana):
    return build_csa(banana, d=2)


def brute_max_walk(slcp, csa):
    return max(slcp.walk(csa, x)[1] for x in range(1, csa.n + 1))


def test_banana_walks(banana_csa):
    slcp = build_sampled_lcp_from_csa(banana_csa, None)
    assert slcp.walk(banana_csa, 3) == (1, 1)
    assert slcp.walk(banana_csa, 5) == (0, 0)
    assert access(slcp, banana_csa, 4) == 3
    assert max_walk_length(slcp, banana_csa) == brute_max_walk(slcp, banana_csa) == 3
    with pytest.raises(IndexError):
        slcp.access(banana_csa, 0)


def test_banana_size(banana_csa):
    slcp = build_sampled_lcp_from_csa(banana_csa, None)
    rep = size_report(slcp)
    assert (slcp.minimal_samples, slcp.extra_samples) == (4, 0)
    assert rep.total_bits == rep.marks_bits + rep.values_bits + HEADER_BITS
    assert rep.bits_per_symbol == rep.total_bits / 7
    assert rep.as_dict()["total_bits"] == rep.total_bits


@pytest.mark.parametrize("vector", ["plain", "gap", "rle"])
def test_every_position_sampled(vector):
    t = generate_random(3, 500, 4)
    ref = naive_reference(t)
    csa = build_csa(t, d=4)
    slcp = build_sampled_lcp_from_csa(csa, 1, vector)
    assert slcp.samples == t.n == slcp.marks.rank1(t.n)
    assert [slcp.walk(csa, x) for x in range(1, t.n + 1)] == [(v, 0) for v in ref.lcp]


@pytest.mark.parametrize("data", [b"aaaa", b"banana", b"mississippi", b"abracadabra" * 5])
def test_max_walk_matches_brute_force(data):
    t = load_text(data)
    csa = build_csa(t, d=3)
    built, _ = build_sampled_lcps(csa, [2, 4, None])
    for dp, slcp in built.items():
        k = slcp.max_walk_length(csa)
        assert k == brute_max_walk(slcp, csa)
        if dp is not None:
            assert k < dp


def test_marked_values_are_lcp():
    t = generate_random(4, 3000, 8)
    ref = naive_reference(t)
    csa = build_csa(t, d=8)
    slcp = build_sampled_lcp_from_csa(csa, 16)
    for k in range(1, slcp.samples + 1):
        x = slcp.marks.select1(k)
        assert slcp.values.access(k) == ref.lcp[x - 1]


def test_concat_below_two_bits():
    base = generate_random(4, 2000, 3).to_bytes()
    t = load_text(b"$".join([base] * 8))
    csa = build_csa(t, d=32)
    slcp = build_sampled_lcp_from_csa(csa, None)
    sadakane = build_sadakane(plcp_stream(csa), t.n, "plain")
    assert slcp.size_report().bits_per_symbol < 2
    assert slcp.size_report().total_bits < sadakane.size_in_bits()
