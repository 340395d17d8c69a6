"""Integer partitions of n into at most d parts, stored as Young diagrams of width d."""

from __future__ import annotations

import operator
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Sequence, Union

import numpy as np


class PartitionError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of ``d`` nonnegative integers.

    Trailing zeros are kept so that ``d`` is always ``len(parts)``.
    Ordering is plain tuple ordering, so sorting with ``reverse=True``
    gives descending lexicographic order.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        _validate(self.parts)

    @property
    def d(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


PartitionLike = Union[Partition, Sequence[int]]


def _validate(parts: tuple[int, ...]) -> None:
    if len(parts) == 0:
        raise PartitionError("a partition needs at least one part (d >= 1)")
    for x in parts:
        if not isinstance(x, (int, np.integer)) or isinstance(x, bool):
            raise PartitionError(f"parts must be integers, got {x!r}")
        if x < 0:
            raise PartitionError(f"negative part in {parts}")
    for a, b in zip(parts, parts[1:]):
        if b > a:
            raise PartitionError(f"{parts} is not weakly decreasing")


def _integers(seq) -> tuple[int, ...]:
    try:
        return tuple(operator.index(x) for x in seq)
    except TypeError:
        raise PartitionError(f"parts must be integers, got {list(seq)!r}") from None


def make_partition(parts: Sequence[int], d: int) -> Partition:
    """Validate ``parts`` and pad it with zeros to length ``d``."""
    if d < 1:
        raise PartitionError(f"d must be positive, got {d}")
    parts = _integers(parts)
    while len(parts) > d and parts[-1] == 0:
        parts = parts[:-1]
    if len(parts) > d:
        raise PartitionError(f"{parts} has more than d={d} nonzero parts")
    return Partition(parts + (0,) * (d - len(parts)))


def as_parts(p: PartitionLike) -> tuple[int, ...]:
    if isinstance(p, Partition):
        return p.parts
    parts = _integers(p)
    _validate(parts)
    return parts


def _descending(n: int, d: int, cap: int) -> Iterator[tuple[int, ...]]:
    if d == 1:
        if n <= cap:
            yield (n,)
        return
    # the first part must hold at least ceil(n/d) boxes
    for first in range(min(n, cap), -(-n // d) - 1, -1):
        for rest in _descending(n - first, d - 1, first):
            yield (first,) + rest


def iter_partition_tuples(n: int, d: int) -> Iterator[tuple[int, ...]]:
    """Raw tuples in descending lexicographic order (no validation overhead)."""
    if n < 0 or d < 1:
        raise PartitionError(f"need n >= 0 and d >= 1, got n={n}, d={d}")
    return _descending(n, d, n)


def enumerate_partitions(n: int, d: int) -> list[Partition]:
    """All partitions of ``n`` into at most ``d`` parts, descending lexicographic."""
    return [Partition(t) for t in iter_partition_tuples(n, d)]


@lru_cache(maxsize=None)
def count_partitions(n: int, d: int) -> int:
    """Number of partitions of ``n`` into at most ``d`` parts."""
    if n < 0 or d < 1:
        raise PartitionError(f"need n >= 0 and d >= 1, got n={n}, d={d}")
    # table[m] = partitions of m into parts of size <= j, built up for j = 1..d
    # (conjugation: at most d parts <-> parts of size at most d)
    table = [1] + [0] * n
    for j in range(1, d + 1):
        for m in range(j, n + 1):
            table[m] += table[m - j]
    return table[n]


def partition_array(n: int, d: int) -> np.ndarray:
    """Partitions of ``n`` into at most ``d`` parts as an ``(count, d)`` int64 array.

    Row order matches :func:`enumerate_partitions`.
    """
    if n < 0 or d < 1:
        raise PartitionError(f"need n >= 0 and d >= 1, got n={n}, d={d}")
    return _array(n, d, n)


def _array(n: int, d: int, cap: int) -> np.ndarray:
    if d == 1:
        if n <= cap:
            return np.array([[n]], dtype=np.int64)
        return np.empty((0, 1), dtype=np.int64)
    if d == 2:
        firsts = np.arange(min(n, cap), -(-n // 2) - 1, -1, dtype=np.int64)
        return np.column_stack([firsts, n - firsts])
    blocks = []
    for first in range(min(n, cap), -(-n // d) - 1, -1):
        rest = _array(n - first, d - 1, first)
        if len(rest):
            blocks.append(np.column_stack([np.full(len(rest), first, dtype=np.int64), rest]))
    if not blocks:
        return np.empty((0, d), dtype=np.int64)
    return np.vstack(blocks)


def _unit_moves(d: int) -> list[tuple[int, int]]:
    return list(permutations(range(d), 2))


def neighbor_moves(p: PartitionLike) -> list[Partition]:
    """Partitions reached by moving one box from one row to another.

    Only moves that keep the diagram weakly decreasing and nonnegative are
    returned, sorted in descending lexicographic order.
    """
    parts = as_parts(p)
    out = set()
    for i, j in _unit_moves(len(parts)):
        q = move_box(parts, i, j)
        if q is not None:
            out.add(q)
    return [Partition(q) for q in sorted(out, reverse=True)]


def move_box(parts: tuple[int, ...], to_row: int, from_row: int) -> tuple[int, ...] | None:
    """``parts`` with one box moved from ``from_row`` to ``to_row``, or None if invalid."""
    q = list(parts)
    q[to_row] += 1
    q[from_row] -= 1
    if q[from_row] < 0:
        return None
    if any(b > a for a, b in zip(q, q[1:])):
        return None
    return tuple(q)


def successors(p: PartitionLike) -> list[Partition]:
    """Partitions of n+1 obtained by adding one box to a single row."""
    parts = as_parts(p)
    out = []
    for i in range(len(parts)):
        if i == 0 or parts[i - 1] > parts[i]:
            q = list(parts)
            q[i] += 1
            out.append(tuple(q))
    return [Partition(q) for q in sorted(out, reverse=True)]


def predecessors(p: PartitionLike) -> list[Partition]:
    """Partitions of n-1 obtained by removing one box from a single row."""
    parts = as_parts(p)
    out = []
    for i in range(len(parts)):
        nxt = parts[i + 1] if i + 1 < len(parts) else 0
        if parts[i] > nxt:
            q = list(parts)
            q[i] -= 1
            out.append(tuple(q))
    return [Partition(q) for q in sorted(out, reverse=True)]


def balanced_partition(n: int, d: int) -> Partition:
    """The most balanced partition: parts differ by at most one."""
    q, r = divmod(n, d)
    return Partition((q + 1,) * r + (q,) * (d - r))
