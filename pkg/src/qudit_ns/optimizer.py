"""Partitions maximizing the noiseless-subsystem dimension f(p) for fixed (d, n)."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy.special import gammaln

from .partitions import (
    Partition,
    PartitionLike,
    as_parts,
    balanced_partition,
    count_partitions,
    move_box,
    partition_array,
    successors,
)
from .radicals import qubit_rstar, qutrit_thresholds
from .schur_weyl import BudgetExceeded, frobenius, qubit_multiplicity

DEFAULT_BUDGET = 10**7

# log-space window used to shortlist candidates before exact comparison;
# float error in log f stays below 1e-9 for n in the millions
_SCREEN_WINDOW = 1e-6
_EXACT_BELOW = 64


class Method(str, enum.Enum):
    BRUTE = "brute"
    CLOSED_D2 = "closed_d2"
    CLOSED_D3 = "closed_d3"
    LOCAL = "local"
    INCREMENTAL = "incremental"


class ClosedFormMismatch(RuntimeError):
    """The closed-form case analysis disagreed with direct evaluation of f."""


@dataclass(frozen=True)
class Optimum:
    d: int
    n: int
    max_multiplicity: int
    argmax: tuple[Partition, ...]
    method: Method
    heuristic: bool = False

    def __post_init__(self):
        if not self.argmax:
            raise ValueError("argmax must be non-empty")
        object.__setattr__(self, "argmax", tuple(sorted(self.argmax, reverse=True)))

    @property
    def tie(self) -> bool:
        return len(self.argmax) >= 2

    @property
    def partition(self) -> Partition:
        """The first maximizer in descending lexicographic order."""
        return self.argmax[0]

    def same_result(self, other: "Optimum") -> bool:
        return (
            self.d == other.d
            and self.n == other.n
            and self.max_multiplicity == other.max_multiplicity
            and self.argmax == other.argmax
        )


def _pick(cands, d: int, n: int, method: Method, heuristic: bool = False) -> Optimum:
    scored = [(frobenius(t), t) for t in set(cands)]
    best = max(v for v, _ in scored)
    argmax = tuple(Partition(t) for v, t in scored if v == best)
    return Optimum(d, n, best, argmax, method, heuristic)


# -- brute force ------------------------------------------------------------


def log_multiplicity_array(rows: np.ndarray, n: int) -> np.ndarray:
    """Natural log of f for every row of a partition array (float64)."""
    d = rows.shape[1]
    shifted = rows + np.arange(d - 1, -1, -1, dtype=np.int64)
    out = np.full(len(rows), gammaln(n + 1))
    for i in range(d):
        for j in range(i + 1, d):
            out += np.log(shifted[:, i] - shifted[:, j])
    out -= gammaln(shifted + 1).sum(axis=1)
    return out


def maximize_brute(d: int, n: int, budget: int = DEFAULT_BUDGET, screen: bool = True) -> Optimum:
    """Exact maximum of f over every partition of ``n`` into at most ``d`` parts.

    With ``screen`` on, log f is computed in floating point for all
    partitions and only those within a tiny window of the float maximum are
    evaluated exactly. The returned value and argmax are exact either way.
    """
    if d < 1 or n < 1:
        raise ValueError(f"need d >= 1 and n >= 1, got d={d}, n={n}")
    count = count_partitions(n, d)
    if count > budget:
        raise BudgetExceeded(f"{count} partitions of n={n} into d={d} parts exceed budget {budget}")
    rows = partition_array(n, d)
    if screen and count > _EXACT_BELOW:
        logs = log_multiplicity_array(rows, n)
        rows = rows[logs >= logs.max() - _SCREEN_WINDOW]
    return _pick((tuple(int(x) for x in r) for r in rows), d, n, Method.BRUTE)


# -- closed forms -----------------------------------------------------------


def maximize_qubit_closed(n: int) -> Optimum:
    """Qubit optimum from r* = floor(((n+2) - sqrt(n+2)) / 2).

    The neighbour (n-r*+1, r*-1) is reported too when it ties, which
    happens when n+2 is a perfect square.
    """
    if n < 2:
        raise ValueError(f"qubit closed form needs n >= 2, got {n}")
    r = qubit_rstar(n)
    best = qubit_multiplicity(n, r)
    argmax = [Partition((n - r, r))]
    if r >= 1 and qubit_multiplicity(n, r - 1) == best:
        argmax.append(Partition((n - r + 1, r - 1)))
    if frobenius((n - r, r)) != best:
        raise ClosedFormMismatch(f"binomial and Frobenius values disagree at n={n}")
    return Optimum(2, n, best, tuple(argmax), Method.CLOSED_D2)


def _qutrit_candidates(n: int) -> tuple[list[tuple[int, int, int]], list[tuple[int, int, int]]]:
    """(predicted maximizers, rejected alternatives) for d = 3."""
    k, rem = divmod(n, 3)
    t = qutrit_thresholds(k)
    if rem == 0:
        r = t.ceil_r0
        return [(k + r, k, k - r)], []
    if rem == 1:
        r = t.ceil_r3
        primary = (k + r + 1, k, k - r)
        partner = (k + r + 2, k, k - r - 1)
        if t.r3_integral:
            return [primary, partner], []
        return [primary], [partner]
    c1, c3 = t.ceil_r1, t.ceil_r3
    upper = (k + 1 + c3, k + 1, k - c3)
    lower = (k + 2 + c1, k, k - c1)
    if t.r2_integral or t.r4_integral:
        return [upper, lower], []
    if t.r2.cmp(c1) <= 0 and t.r4.cmp(c1) >= 0:
        return [lower], [upper]
    return [upper], [lower]


def maximize_qutrit_closed(n: int) -> Optimum:
    """Qutrit optimum from the residue of n mod 3 and the thresholds r0..r4.

    Ties are predicted from the exact integrality of r3 (n = 3k+1) or of
    r2, r4 (n = 3k+2), then confirmed by evaluating f on every candidate.
    """
    if n < 3:
        raise ValueError(f"qutrit closed form needs n >= 3, got {n}")
    chosen, rejected = _qutrit_candidates(n)
    for t in chosen + rejected:
        if sum(t) != n or not (t[0] >= t[1] >= t[2] >= 0):
            raise ClosedFormMismatch(f"candidate {t} is not a partition of {n}")
    values = [frobenius(t) for t in chosen]
    best = values[0]
    if any(v != best for v in values):
        raise ClosedFormMismatch(f"predicted tie at n={n} does not hold: {chosen} -> {values}")
    for t in rejected:
        if frobenius(t) >= best:
            raise ClosedFormMismatch(f"rejected candidate {t} is not worse at n={n}")
    return Optimum(3, n, best, tuple(Partition(t) for t in chosen), Method.CLOSED_D3)


# -- local conditions -------------------------------------------------------


# d = 3 box moves (to_row, from_row) keyed by the condition number they test
QUTRIT_CONDITIONS = {
    1: (0, 1),
    2: (2, 1),
    3: (1, 0),
    4: (1, 2),
    5: (0, 2),
    6: (2, 0),
}


@dataclass(frozen=True)
class MoveCheck:
    to_row: int
    from_row: int
    target: Partition
    sign: int  # sign of f(p) - f(target)
    condition: int | None = None


@dataclass(frozen=True)
class LocalOptimality:
    partition: Partition
    moves: tuple[MoveCheck, ...] = field(default_factory=tuple)

    @property
    def optimal(self) -> bool:
        return all(m.sign >= 0 for m in self.moves)

    def __bool__(self):
        return self.optimal


def check_local_optimality(p: PartitionLike) -> LocalOptimality:
    """Compare f(p) against every partition one box-move away.

    ``p`` passes when no move increases f. For d = 3 each move is tagged
    with the number (1)-(6) of the inequality it tests.
    """
    parts = as_parts(p)
    d = len(parts)
    conditions = {v: c for c, v in QUTRIT_CONDITIONS.items()} if d == 3 else {}
    base = frobenius(parts)
    moves = []
    for i in range(d):
        for j in range(d):
            if i == j:
                continue
            q = move_box(parts, i, j)
            if q is None:
                continue
            diff = base - frobenius(q)
            moves.append(MoveCheck(i, j, Partition(q), (diff > 0) - (diff < 0), conditions.get((i, j))))
    return LocalOptimality(Partition(parts), tuple(moves))


def move_ratio(p: PartitionLike, to_row: int, from_row: int) -> Fraction:
    """f(q) / f(p) for q = p with one box moved, from the product formula alone.

    Uses only the shifted parts l_m = p_m + d - m: the move bumps l at
    ``to_row`` by one and lowers l at ``from_row`` by one, so the ratio is a
    short product of small fractions and never touches factorials.
    """
    parts = as_parts(p)
    d = len(parts)
    old = [x + d - 1 - m for m, x in enumerate(parts)]
    new = list(old)
    new[to_row] += 1
    new[from_row] -= 1
    ratio = Fraction(old[from_row], new[to_row])
    for a in range(d):
        for b in range(a + 1, d):
            if a in (to_row, from_row) or b in (to_row, from_row):
                ratio *= Fraction(new[a] - new[b], old[a] - old[b])
    return ratio


# -- local search -----------------------------------------------------------


def maximize_local(d: int, n: int) -> Optimum:
    """Steepest ascent on f over box moves, starting from the balanced partition.

    Ties between equally good moves go to the lexicographically largest
    partition. The reported argmax is the plateau of equal-valued
    partitions connected to the final point. For d >= 4 the result is only a
    local optimum and is flagged ``heuristic``.
    """
    if d < 2 or n < 1:
        raise ValueError(f"need d >= 2 and n >= 1, got d={d}, n={n}")
    current = balanced_partition(n, d).parts
    value = frobenius(current)
    while True:
        best_val, best = value, None
        for q in _moves(current):
            v = frobenius(q)
            if v > best_val or (v == best_val and best is not None and q > best):
                best_val, best = v, q
        if best is None or best_val == value:
            break
        current, value = best, best_val
    plateau = {current}
    frontier = [current]
    while frontier:
        for q in _moves(frontier.pop()):
            if q not in plateau and frobenius(q) == value:
                plateau.add(q)
                frontier.append(q)
    return Optimum(d, n, value, tuple(Partition(t) for t in plateau), Method.LOCAL, heuristic=d >= 4)


def _moves(parts: tuple[int, ...]):
    d = len(parts)
    for i in range(d):
        for j in range(d):
            if i != j:
                q = move_box(parts, i, j)
                if q is not None:
                    yield q


# -- maximum begets maximum -------------------------------------------------


def next_maximum(prev: Optimum, verify: bool = False) -> Optimum:
    """Qutrit optimum for n+1 built from the optimum for n.

    A unique maximizer is grown by one box in every admissible row and the
    best results kept. For a tied pair the componentwise maximum of the two
    gives the next optimum directly; ``verify`` additionally checks that
    value against every one-box extension of both members.
    """
    if prev.d != 3:
        raise ValueError(f"next_maximum is only valid for d = 3, got d = {prev.d}")
    grown = {s.parts for p in prev.argmax for s in successors(p)}
    if prev.tie:
        if len(prev.argmax) != 2:
            raise ValueError("tie rule expects exactly two maximizers")
        a, b = prev.argmax
        q = tuple(max(x, y) for x, y in zip(a, b))
        best = frobenius(q)
        if verify and max(frobenius(s) for s in grown) != best:
            raise ClosedFormMismatch(f"componentwise maximum {q} is not optimal at n={prev.n + 1}")
        argmax = tuple(Partition(s) for s in grown if frobenius(s) == best)
        return Optimum(3, prev.n + 1, best, argmax, Method.INCREMENTAL)
    opt = _pick(grown, 3, prev.n + 1, Method.INCREMENTAL)
    return opt


def maximum_chain(n_start: int, n_end: int, verify: bool = False):
    """Yield qutrit optima for n_start..n_end, seeded by brute force at n_start."""
    opt = maximize_brute(3, n_start)
    opt = Optimum(3, n_start, opt.max_multiplicity, opt.argmax, Method.INCREMENTAL)
    yield opt
    for _ in range(n_start, n_end):
        opt = next_maximum(opt, verify=verify)
        yield opt


def maximize(d: int, n: int, method: str = "auto", budget: int = DEFAULT_BUDGET) -> Optimum:
    """Dispatch to a specific optimizer, or pick the most exact one for ``auto``."""
    method = method.lower()
    if method == "auto":
        if d == 2 and n >= 2:
            return maximize_qubit_closed(n)
        if d == 3 and n >= 3:
            return maximize_qutrit_closed(n)
        if count_partitions(n, d) <= budget:
            return maximize_brute(d, n, budget)
        return maximize_local(d, n)
    if method == "brute":
        return maximize_brute(d, n, budget)
    if method == "closed":
        if d == 2:
            return maximize_qubit_closed(n)
        if d == 3:
            return maximize_qutrit_closed(n)
        raise ValueError(f"no closed form for d={d}; closed forms exist for d = 2 and d = 3")
    if method == "local":
        return maximize_local(d, n)
    if method == "incremental":
        if d != 3:
            raise ValueError("incremental method is only valid for d = 3")
        *_, last = maximum_chain(3, n) if n >= 3 else (maximize_brute(3, n),)
        return last
    raise ValueError(f"unknown method {method!r}")
