import pytest

from slcp.csa import build_csa
from slcp.lcpbuild import plcp_stream
from slcp.oracle import naive_reference
from slcp.plcprepr import (PlcpOrderError, build_sadakane, build_sampled_plcp, lcp_via_plcp,
                           plcp_access, sampled_plcp_access)
from slcp.textstore import generate_random, load_text


def ones(rep):
    return [rep.bits.select1(k) for k in range(1, rep.bits.ones + 1)]


@pytest.mark.parametrize("kind", ["plain", "rle"])
def test_sadakane_examples(kind, banana, unary4):
    rep = build_sadakane([0, 3, 2, 1, 0, 0, 0], 7, kind)
    assert ones(rep) == [2, 7, 8, 9, 10, 12, 14]
    assert [rep.access(i) for i in range(1, 8)] == [0, 3, 2, 1, 0, 0, 0]
    assert ones(build_sadakane([3, 2, 1, 0, 0], 5, kind)) == [5, 6, 7, 8, 10]
    assert ones(build_sadakane([0], 1, kind)) == [2]
    with pytest.raises(IndexError):
        rep.access(8)


def test_sadakane_rejects_bad_streams():
    with pytest.raises(PlcpOrderError):
        build_sadakane([0, 3, 1, 1, 0, 0, 0], 7)  # drops by more than one
    with pytest.raises(PlcpOrderError):
        build_sadakane([0, 6, 5, 4, 3, 2, 1], 7)  # exceeds n - i
    with pytest.raises(PlcpOrderError):
        build_sadakane([0, 3], 7)
    with pytest.raises(ValueError):
        build_sadakane([0], 1, "gap")


def test_sampled_banana(banana):
    csa = build_csa(banana, d=2)
    rep = build_sampled_plcp(plcp_stream(csa), 7, 2)
    assert rep.samples == [0, 2, 0, 0]
    acc = sampled_plcp_access(rep, 4, csa)
    assert acc.value == 1 and acc.comparisons == 0
    assert [plcp_access(rep, i, csa) for i in range(1, 8)] == [0, 3, 2, 1, 0, 0, 0]
    whole = build_sampled_plcp(plcp_stream(csa), 7, 7)
    assert whole.samples == [0]
    assert [whole.access(csa, i) for i in range(1, 8)] == [0, 3, 2, 1, 0, 0, 0]
    with pytest.raises(ValueError):
        build_sampled_plcp([0], 1, 0)
    with pytest.raises(ValueError):
        plcp_access(rep, 1)


@pytest.mark.parametrize("q", [1, 4, 16])
def test_sampled_random(q):
    t = generate_random(4, 10**4, 11)
    ref = naive_reference(t)
    csa = build_csa(t, d=16)
    rep = build_sampled_plcp(iter(ref.plcp), t.n, q)
    for i in range(1, t.n + 1):
        acc = rep.access_counted(csa, i)
        assert acc.value == ref.plcp[i - 1]
        assert acc.lower <= acc.value <= acc.upper
        a = (i - 1) // q
        if a + 1 < len(rep.samples):
            assert acc.comparisons <= q + rep.samples[a + 1] - rep.samples[a]
    assert rep.size_in_bits() == len(rep.samples) * t.n.bit_length()


def test_lcp_via_plcp():
    t = generate_random(3, 2000, 2)
    ref = naive_reference(t)
    csa = build_csa(t, d=8)
    reps = [build_sadakane(iter(ref.plcp), t.n, "plain"), build_sadakane(iter(ref.plcp), t.n, "rle"),
            build_sampled_plcp(iter(ref.plcp), t.n, 8)]
    for rep in reps:
        assert [lcp_via_plcp(csa, rep, x) for x in range(1, t.n + 1)] == ref.lcp


@pytest.mark.parametrize("r", [4, 8])
def test_rle_smaller_on_repeats(r):
    base = generate_random(4, 2000, 5).to_bytes()
    t = load_text(b"$".join([base] * r))
    plcp = list(plcp_stream(build_csa(t, d=32)))
    plain = build_sadakane(iter(plcp), t.n, "plain")
    rle = build_sadakane(iter(plcp), t.n, "rle")
    assert rle.size_in_bits() <= plain.size_in_bits()
