from math import comb

import pytest
from hypothesis import given, strategies as st

from oracles import log_mp
from qudit_ns.rates import balanced_rate_series, code_rate, log_big, round_sig
from qudit_ns.schur_weyl import multiplicity

TOL = 1e-9


def test_log_big_examples():
    assert log_big(1, 2) == 0.0
    assert abs(log_big(2**100, 2) - 100.0) <= TOL
    x = log_big(2002, 2)
    assert abs(x - 10.967226258835993) <= TOL and int(x) == 10
    with pytest.raises(ValueError):
        log_big(0)


@given(st.integers(1, 10**400), st.sampled_from([2, 3, 5, 10]))
def test_log_big_against_mpmath(x, base):
    assert abs(log_big(x, base) - log_mp(x, base)) <= TOL


@pytest.mark.parametrize("base", [2, 3, 4, 7])
def test_log_big_exact_powers(base):
    for e in [0, 1, 5, 64, 65, 300, 2000]:
        assert abs(log_big(base**e, base) - e) <= TOL


def test_code_rate_examples():
    assert code_rate((1, 0)) == 0.0
    assert abs(code_rate((6, 4)) - 0.6491853096329675) <= TOL
    assert code_rate((50, 50)) >= 0.90
    assert abs(code_rate((50, 50)) - log_mp(comb(100, 50) - comb(100, 49), 2) / 100) <= TOL


def test_series_examples():
    s = balanced_rate_series(2, 50)
    assert s.entries[0].k == 1 and s.entries[0].rate == 0.0
    assert s.entries[49].rate >= 0.90
    assert balanced_rate_series(3, 30).entries[-1].rate >= 0.85
    e = balanced_rate_series(3, 30).entries[-1]
    assert e.n == 90 and e.f_bits == multiplicity((30, 30, 30)).bit_length()


def test_catalan_identity():
    for k in range(1, 201):
        f = multiplicity((k, k))
        assert f == comb(2 * k, k) - comb(2 * k, k - 1)
        assert f * (k + 1) == comb(2 * k, k)


@pytest.mark.parametrize("d", [2, 3])
def test_rates_bounded_and_improving(d):
    s = balanced_rate_series(d, 60)
    assert all(0.0 <= e.rate <= 1.0 for e in s.entries)
    gaps = [1 - e.rate for e in s.entries[4:]]
    assert all(b < a for a, b in zip(gaps, gaps[1:]))


def test_round_sig():
    assert round_sig(0.6491853096329675) == 0.649185309633
