"""Slow, obviously-correct reference computations used only by the tests."""

from functools import lru_cache
from itertools import permutations, product

import mpmath


@lru_cache(maxsize=None)
def count_partitions_rec(n, d, cap=None):
    """Partitions of n into at most d parts, each at most cap."""
    if cap is None:
        cap = n
    if n == 0:
        return 1
    if d == 0:
        return 0
    return sum(count_partitions_rec(n - first, d - 1, first) for first in range(1, min(n, cap) + 1))


def partitions_by_product(n, d):
    """All weakly decreasing d-tuples summing to n, found by scanning the whole box."""
    out = [t for t in product(range(n + 1), repeat=d) if sum(t) == n and all(a >= b for a, b in zip(t, t[1:]))]
    return sorted(out, reverse=True)


def moves_by_delta(parts):
    """Apply every (+1, -1) vector and keep the weakly decreasing nonnegative results."""
    d = len(parts)
    out = set()
    for i, j in permutations(range(d), 2):
        q = list(parts)
        q[i] += 1
        q[j] -= 1
        if min(q) >= 0 and all(a >= b for a, b in zip(q, q[1:])):
            out.add(tuple(q))
    return sorted(out, reverse=True)


def _cells(parts):
    return [(i, j) for i, row in enumerate(parts) for j in range(row)]


def syt_by_permutations(parts):
    """Count standard tableaux by trying every placement of 1..n."""
    cells = _cells(parts)
    count = 0
    for perm in permutations(range(1, len(cells) + 1)):
        fill = dict(zip(cells, perm))
        if all(
            (j == 0 or fill[(i, j - 1)] < v) and (i == 0 or fill[(i - 1, j)] < v)
            for (i, j), v in fill.items()
        ):
            count += 1
    return count


def ssyt_by_product(parts, d):
    """Count semistandard tableaux by trying every filling with labels 1..d."""
    cells = _cells(parts)
    count = 0
    for labels in product(range(1, d + 1), repeat=len(cells)):
        fill = dict(zip(cells, labels))
        if all(
            (j == 0 or fill[(i, j - 1)] <= v) and (i == 0 or fill[(i - 1, j)] < v)
            for (i, j), v in fill.items()
        ):
            count += 1
    return count


def log_mp(x, base):
    with mpmath.workdps(60):
        return float(mpmath.log(mpmath.mpf(x)) / mpmath.log(base))
