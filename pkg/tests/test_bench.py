import pytest

from slcp.bench import _PsiCounter, describe, query_positions, run_bench
from slcp.csa import build_csa
from slcp.lcpbuild import build_sampled_lcp_from_csa
from slcp.textstore import generate_random, generate_repeats, load_text
from slcp.tradeoff import is_monotone, tradeoff_tables
from slcp.verify import run_checks


def test_query_positions_deterministic():
    assert query_positions(100, 50, 3) == query_positions(100, 50, 3)
    assert all(1 <= x <= 100 for x in query_positions(100, 500, 1))


def test_psi_counter_restores():
    csa = build_csa(load_text(b"banana"), d=2)
    original = csa.psi
    with _PsiCounter(csa) as counter:
        csa.psi(3)
        csa.locate(4)
    assert counter.calls >= 1 and csa.psi is original


def test_run_bench_steps():
    text = generate_random(4, 3000, 1)
    csa = build_csa(text, d=8)
    res = run_bench(csa, None, queries=500, seed=2)
    assert res.structure == "locate" and res.queries == 500
    assert res.max_psi_steps < 8 and res.mean_psi_steps <= 8
    slcp = build_sampled_lcp_from_csa(csa, 4)
    res = run_bench(csa, slcp, queries=500, seed=2)
    assert res.max_psi_steps < 4
    assert describe(csa, slcp)["d_prime"] == 4
    with pytest.raises(TypeError):
        run_bench(csa, object(), queries=10)


def test_tradeoff_small():
    text = generate_repeats(4, 3000, 4, 0.01, 2)
    tables = tradeoff_tables(text, d_values=(4, 16), d_primes=(4, 16, None), queries=300)
    assert is_monotone(tables) == (True, True)
    assert [r["d_prime"] for r in tables.by_d_prime] == [4, 16, "inf"]
    for row in tables.by_d_prime[:-1]:
        assert row["max_psi_steps"] < row["d_prime"]
    for row in tables.by_d:
        assert row["max_psi_steps"] < row["d"]


@pytest.mark.parametrize("data", [b"banana", b"a" * 300, b"mississippi" * 20])
def test_verify_passes(data):
    failed = [r for r in run_checks(load_text(data), d=3) if not r.ok]
    assert not failed
