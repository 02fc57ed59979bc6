import random

import pytest
from hypothesis import given, settings, strategies as st

from slcp.csa import build_csa
from slcp.oracle import naive_reference
from slcp.textstore import generate_de_bruijn, generate_random, load_text


def test_banana(banana):
    c = build_csa(banana, d=2)
    assert c.runs == 5
    assert (c.psi(4), c.psi(6), c.psi(3)) == (7, 2, 6)
    assert c.lf(1) == 2
    assert c.range_containing(3) == (1, 2, 4)
    assert c.range_containing(1) == (0, 1, 1)
    assert c.range_containing(7) == (3, 6, 7)
    assert c.count(b"ana") == 2
    assert c.count(b"x") == 0
    assert c.count(b"") == 7
    assert c.locate(4) == 2
    assert c.display_bytes(2, 3) == b"ana"
    assert c.display(1, 7) == banana.symbols
    with pytest.raises(ValueError):
        build_csa(banana, d=0)


def test_full_sampling(banana):
    c = build_csa(banana, d=1)
    assert [c.locate_counted(x) for x in range(1, 8)] == [(s, 0) for s in [7, 6, 4, 2, 1, 5, 3]]


def test_unary_runs(unary4):
    for d in (1, 2, 5):
        assert build_csa(unary4, d=d).runs == 2


@pytest.mark.parametrize("text,d", [
    (generate_random(4, 10**4, 1), 8),
    (generate_random(2, 2000, 2), 3),
    (generate_random(26, 2000, 3), 16),
    (generate_de_bruijn(2, 9), 5),
    (load_text(b"a" * 500), 7),
])
def test_against_oracle(text, d):
    ref = naive_reference(text)
    c = build_csa(text, d=d)
    n = text.n
    assert c.runs == ref.runs
    C = c.c_array
    psi = [c.psi(x) for x in range(1, n + 1)]
    for x in range(1, n + 1):
        s = ref.sa[x - 1]
        if s < n:
            assert ref.sa[psi[x - 1] - 1] == s + 1
        else:
            assert psi[x - 1] == ref.isa[0]  # cyclic convention
        assert c.lf(psi[x - 1]) == x
        if s > 1:
            assert ref.sa[c.lf(x) - 1] == s - 1
    for ch in range(c.num_ranks):
        seg = psi[C[ch]:C[ch + 1]]
        assert all(a < b for a, b in zip(seg, seg[1:]))
    for x in range(1, n + 1):
        v, k = c.locate_counted(x)
        assert v == ref.sa[x - 1] and k <= d
    rng = random.Random(d)
    for _ in range(300):
        i = rng.randint(1, n)
        length = rng.randint(0, min(16, n - i + 1))
        got, steps = c.display_counted(i, length)
        assert got == text.symbols[i - 1:i - 1 + length]
        assert steps <= d + length


def _naive_count(hay: bytes, pat: bytes) -> int:
    return sum(1 for k in range(len(hay) - len(pat) + 1) if hay[k:k + len(pat)] == pat)


def test_count_random_patterns():
    t = generate_random(3, 3000, 9)
    c = build_csa(t, d=8)
    body = t.to_bytes()
    rng = random.Random(1)
    for _ in range(1000):
        length = rng.randint(1, 20)
        if rng.random() < 0.5:
            i = rng.randint(0, len(body) - length)
            pat = body[i:i + length]
        else:
            pat = bytes(rng.choice(b"abcd") for _ in range(length))
        assert c.count(pat) == _naive_count(body, pat)


@settings(max_examples=40, deadline=None)
@given(st.binary(min_size=1, max_size=120).filter(lambda b: 0 not in b), st.integers(1, 9))
def test_property_locate_isa(data, d):
    t = load_text(data)
    ref = naive_reference(t)
    c = build_csa(t, d=d)
    assert [c.locate(x) for x in range(1, t.n + 1)] == ref.sa
    assert [c.isa(i) for i in range(1, t.n + 1)] == ref.isa


def test_out_of_range(banana):
    c = build_csa(banana, d=2)
    for op in (c.psi, c.lf, c.locate, c.range_containing):
        with pytest.raises(IndexError):
            op(8)
    with pytest.raises(IndexError):
        c.display(6, 3)
