from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import partitions_by_product, syt_by_permutations
from qudit_ns.optimizer import (
    QUTRIT_CONDITIONS,
    Method,
    Optimum,
    check_local_optimality,
    maximize,
    maximize_brute,
    maximize_local,
    maximize_qubit_closed,
    maximize_qutrit_closed,
    maximum_chain,
    move_ratio,
    next_maximum,
)
from qudit_ns.partitions import Partition, enumerate_partitions, move_box
from qudit_ns.schur_weyl import BudgetExceeded, multiplicity


def argmax(opt):
    return [p.parts for p in opt.argmax]


def test_brute_examples():
    opt = maximize_brute(3, 4)
    assert opt.max_multiplicity == 3 and argmax(opt) == [(3, 1, 0), (2, 1, 1)] and opt.tie
    assert argmax(maximize_brute(3, 7)) == [(4, 2, 1)]
    opt = maximize_brute(2, 10)
    assert opt.max_multiplicity == 90 and (6, 4) in argmax(opt)


@pytest.mark.parametrize("n", range(1, 8))
def test_brute_against_tableau_enumeration(n):
    values = {p: syt_by_permutations(p) for p in partitions_by_product(n, 3)}
    best = max(values.values())
    opt = maximize_brute(3, n)
    assert opt.max_multiplicity == best
    assert argmax(opt) == sorted((p for p, v in values.items() if v == best), reverse=True)


@pytest.mark.parametrize("d, n", [(2, 300), (3, 90), (3, 121), (4, 40), (5, 30)])
def test_screening_is_exact(d, n):
    assert maximize_brute(d, n).same_result(maximize_brute(d, n, screen=False))


def test_brute_budget():
    with pytest.raises(BudgetExceeded, match="budget 5"):
        maximize_brute(3, 20, budget=5)


def test_qubit_closed_examples():
    opt = maximize_qubit_closed(7)
    assert opt.max_multiplicity == 14 and argmax(opt) == [(5, 2), (4, 3)] and opt.tie
    opt = maximize_qubit_closed(15)
    assert opt.max_multiplicity == 2002 and opt.argmax[-1].parts == (9, 6)
    with pytest.raises(ValueError):
        maximize_qubit_closed(1)


@pytest.mark.parametrize(
    "n, expected",
    [
        (4, [(3, 1, 0), (2, 1, 1)]),
        (5, [(3, 1, 1)]),
        (6, [(3, 2, 1)]),
        (7, [(4, 2, 1)]),
        (8, [(4, 3, 1)]),
        (49, [(21, 16, 12)]),
        (50, [(21, 16, 13)]),
    ],
)
def test_qutrit_closed_examples(n, expected):
    assert argmax(maximize_qutrit_closed(n)) == expected


def test_qutrit_closed_values():
    assert maximize_qutrit_closed(4).max_multiplicity == 3
    assert maximize_qutrit_closed(6).max_multiplicity == 16


@pytest.mark.parametrize("n", list(range(3, 121)) + [499, 500, 1000, 1001, 1002])
def test_qutrit_closed_matches_brute(n):
    assert maximize_qutrit_closed(n).same_result(maximize_brute(3, n))


def test_local_optimality_examples():
    assert check_local_optimality((4, 2, 1)).optimal
    rep = check_local_optimality((3, 3, 1))
    assert not rep and any(m.target.parts == (4, 2, 1) and m.sign < 0 for m in rep.moves)
    for n in range(3, 12):
        assert not check_local_optimality((n, 0))


def test_condition_labels():
    rep = check_local_optimality((5, 3, 1))
    labels = {m.condition: (m.to_row, m.from_row) for m in rep.moves}
    assert set(labels) == {1, 2, 3, 4, 5, 6}
    assert labels == QUTRIT_CONDITIONS
    # (4,2,1) -> (4,1,2) is not a partition, so condition (2) does not apply
    assert {m.condition for m in check_local_optimality((4, 2, 1)).moves} == {1, 3, 4, 5, 6}


@settings(max_examples=200)
@given(st.integers(1, 40), st.integers(2, 5), st.data())
def test_move_ratio_matches_direct(n, d, data):
    p = data.draw(st.sampled_from(enumerate_partitions(n, d)))
    for i in range(d):
        for j in range(d):
            q = move_box(p.parts, i, j) if i != j else None
            if q is not None:
                assert move_ratio(p, i, j) == Fraction(multiplicity(q), multiplicity(p))


def test_local_examples():
    opt = maximize_local(2, 10)
    assert argmax(opt) == [(6, 4)] and opt.max_multiplicity == 90 and opt.method is Method.LOCAL
    assert argmax(maximize_local(3, 49)) == [(21, 16, 12)]
    loc = maximize_local(4, 8)
    assert loc.same_result(maximize_brute(4, 8)) and loc.heuristic


@pytest.mark.parametrize("d", [2, 3, 4])
def test_local_result_is_locally_optimal(d):
    for n in range(1, 40):
        for p in maximize_local(d, n).argmax:
            assert check_local_optimality(p).optimal


def test_next_maximum_examples():
    n4 = maximize_brute(3, 4)
    assert argmax(next_maximum(n4, verify=True)) == [(3, 1, 1)]
    n7 = Optimum(3, 7, multiplicity((4, 2, 1)), (Partition((4, 2, 1)),), Method.CLOSED_D3)
    assert argmax(next_maximum(n7)) == [(4, 3, 1)]
    with pytest.raises(ValueError):
        next_maximum(maximize_brute(2, 5))


def test_chain_short():
    for opt in maximum_chain(3, 60):
        assert opt.same_result(maximize_brute(3, opt.n))


def test_maximize_dispatch():
    assert maximize(2, 10).method is Method.CLOSED_D2
    assert maximize(3, 10).method is Method.CLOSED_D3
    assert maximize(4, 10).method is Method.BRUTE
    assert maximize(4, 10, budget=3).method is Method.LOCAL
    assert maximize(3, 20, method="incremental").same_result(maximize_brute(3, 20))
    with pytest.raises(ValueError):
        maximize(4, 10, method="closed")
    with pytest.raises(ValueError):
        maximize(3, 10, method="magic")


def test_qubit_tie_partner_when_square():
    # ties exactly when n + 2 is a perfect square
    for n in range(2, 400):
        opt = maximize_qubit_closed(n)
        root = int((n + 2) ** 0.5 + 0.5)
        assert opt.tie == (root * root == n + 2)
