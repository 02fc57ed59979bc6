import csv
import io
import json
import math

import pytest

from slcp.analysis import (STATS_COLUMNS, EstimateError, IdentityViolation, CountSum, LcpStats,
                           compute_stats, effective_alphabet, empirical_entropy, entropy_estimate,
                           estimate_irreducible_sum, format_rows, prop1_experiment, stats_as_dict,
                           stats_row)
from slcp.csa import build_csa
from slcp.textstore import TextError, generate_concat, generate_random, load_text


def test_stats_examples(banana, unary4):
    s = compute_stats(banana)
    assert (s.runs, s.irreducible, s.minimal, s.strictly_minimal) == (
        5, CountSum(5, 3), CountSum(5, 1), CountSum(4, 0))
    assert compute_stats(build_csa(banana, d=4)) == s
    u = compute_stats(unary4)
    assert u.runs == 2 and u.minimal.count == 2
    assert compute_stats(generate_concat(banana, 3)).irreducible.sum == 17


def test_identity_violation():
    with pytest.raises(IdentityViolation):
        LcpStats(7, 5, CountSum(5, 3), CountSum(5, 2), CountSum(4, 0)).check()
    with pytest.raises(IdentityViolation):
        LcpStats(7, 5, CountSum(4, 3), CountSum(5, 1), CountSum(4, 0)).check()


def test_entropy_examples(unary4):
    assert empirical_entropy(unary4, 0) == 0.0
    assert empirical_entropy(load_text(b"abababab"), 0) == pytest.approx(1.0)
    assert empirical_entropy(load_text(b"abababab"), 1) == 0.0
    t = generate_random(4, 10**5, 1)
    assert abs(empirical_entropy(t, 0) - 2.0) < 0.02
    assert effective_alphabet(t, 0) == pytest.approx(4, rel=0.02)
    assert effective_alphabet(load_text(b"a" * 50), 3) == 1.0
    assert effective_alphabet(load_text(b"ab" * 20), 1) == 1.0
    with pytest.raises(TextError):
        empirical_entropy(load_text(b"abc"), 3)


def test_entropy_bounds():
    t = generate_random(6, 5000, 2)
    for k in range(4):
        h = empirical_entropy(t, k)
        assert 0 <= h <= math.log2(6) + 1e-9
        assert effective_alphabet(t, k) >= 1
    assert empirical_entropy(t, 1) <= empirical_entropy(t, 0)


def test_estimate():
    assert estimate_irreducible_sum(10**6, 2, 1) == pytest.approx(9.466e6, rel=1e-3)
    assert estimate_irreducible_sum(100, 1, 1) == -100
    with pytest.raises(EstimateError):
        estimate_irreducible_sum(100, 2, 0)
    est = entropy_estimate(load_text(b"a" * 100), 2)
    assert est.degenerate and est.s_prime == 0


def test_prop1(banana):
    r2, r3 = prop1_experiment(banana, 2), prop1_experiment(banana, 3)
    assert (r2.measured_sum, r2.predicted_sum, r2.oracle_sum) == (10, 10, 10)
    assert (r3.measured_sum, r3.predicted_sum, r3.oracle_sum) == (17, 17, 17)
    assert r2.match and r3.match
    assert prop1_experiment(generate_random(4, 500, 1), 5).match
    with pytest.raises(TextError):
        prop1_experiment(banana, 1)


def test_stats_row_and_formats(banana):
    row = stats_row("banana", compute_stats(banana), entropy_estimate(banana, 1))
    assert list(row) == STATS_COLUMNS
    parsed = list(csv.DictReader(io.StringIO(format_rows([row], "csv", STATS_COLUMNS))))
    assert parsed[0]["R"] == "5" and parsed[0]["minimal_sum"] == "1"
    assert json.loads(format_rows([row], "json"))[0]["irreducible_sum"] == 3
    assert stats_as_dict(compute_stats(banana))["minimal"] == {"count": 5, "sum": 1}
    with pytest.raises(ValueError):
        format_rows([row], "xml")
