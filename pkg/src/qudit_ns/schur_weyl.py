"""Multiplicities and irrep dimensions in the decomposition of U^{(x)n}, U in SU(d).

The algebra generated by ``{U^{(x)n}}`` splits into blocks
``I_f (x) M_g``, one per partition ``p`` of ``n`` into at most ``d`` parts.
``f(p)`` (the block multiplicity) is the dimension of the noiseless
subsystem carried by the block; ``g(p)`` is the SU(d) irrep dimension.
Both are computed with exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, prod

from .partitions import Partition, PartitionLike, as_parts, count_partitions, iter_partition_tuples

BRUTE_FORCE_CAP = 12


class BudgetExceeded(ValueError):
    """Raised when a request would enumerate more partitions than allowed."""


@lru_cache(maxsize=None)
def _fact(m: int) -> int:
    return factorial(m)


@lru_cache(maxsize=None)
def _superfactorial(d: int) -> int:
    # prod_{i<j<=d} (j - i) = 1! 2! ... (d-1)!
    return prod(_fact(m) for m in range(1, d))


def _shifted(parts: tuple[int, ...]) -> list[int]:
    d = len(parts)
    return [p + d - 1 - i for i, p in enumerate(parts)]


def _vandermonde(shifted: list[int]) -> int:
    d = len(shifted)
    return prod(shifted[i] - shifted[j] for i in range(d) for j in range(i + 1, d))


def frobenius(parts: tuple[int, ...]) -> int:
    """f for a raw, already validated tuple."""
    shifted = _shifted(parts)
    num = _fact(sum(parts)) * _vandermonde(shifted)
    den = prod(_fact(x) for x in shifted)
    f, rem = divmod(num, den)
    assert rem == 0, f"non-integral multiplicity for {parts}"
    return f


def weyl_dimension(parts: tuple[int, ...]) -> int:
    """g for a raw, already validated tuple."""
    g, rem = divmod(_vandermonde(_shifted(parts)), _superfactorial(len(parts)))
    assert rem == 0, f"non-integral dimension for {parts}"
    return g


def multiplicity(p: PartitionLike) -> int:
    """Multiplicity f(p) of the irrep labelled by ``p`` (Frobenius formula).

    Equal to the number of standard Young tableaux of shape ``p``, and
    independent of how many trailing zeros ``p`` carries.

    >>> multiplicity((6, 3))
    48
    >>> multiplicity((2, 1, 1))
    3
    """
    return frobenius(as_parts(p))


def irrep_dimension(p: PartitionLike) -> int:
    """Dimension g(p) of the SU(d) irrep labelled by ``p``, with d = len(p).

    >>> irrep_dimension((2, 1, 0))
    8
    """
    return weyl_dimension(as_parts(p))


def qubit_multiplicity(n: int, j: int) -> int:
    """f(n-j, j) = C(n, j) - C(n, j-1)."""
    return comb(n, j) - (comb(n, j - 1) if j >= 1 else 0)


# -- independent oracles ----------------------------------------------------


def conjugate(parts: tuple[int, ...]) -> tuple[int, ...]:
    rows = [x for x in parts if x > 0]
    if not rows:
        return ()
    return tuple(sum(1 for r in rows if r > c) for c in range(rows[0]))


def syt_count_hook(p: PartitionLike) -> int:
    """Standard Young tableaux of shape ``p``: n! over the product of hook lengths."""
    parts = tuple(x for x in as_parts(p) if x > 0)
    cols = conjugate(parts)
    hooks = 1
    for i, row in enumerate(parts):
        for j in range(row):
            hooks *= (row - j - 1) + (cols[j] - i - 1) + 1
    count, rem = divmod(factorial(sum(parts)), hooks)
    assert rem == 0
    return count


def ssyt_count_brute(p: PartitionLike, d: int, cap: int = BRUTE_FORCE_CAP) -> int:
    """Count semistandard fillings of ``p`` with entries in 1..d by exhaustive search.

    Rows weakly increase left to right, columns strictly increase downward.
    Refuses diagrams with more than ``cap`` boxes.
    """
    parts = tuple(x for x in as_parts(p) if x > 0)
    n = sum(parts)
    if n > cap:
        raise BudgetExceeded(f"diagram has {n} boxes, brute-force cap is {cap}")
    if len(parts) > d:
        return 0
    cells = [(i, j) for i, row in enumerate(parts) for j in range(row)]
    grid = [[0] * row for row in parts]

    def fill(k: int) -> int:
        if k == len(cells):
            return 1
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = grid[i][j - 1]
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        total = 0
        for v in range(lo, d + 1):
            grid[i][j] = v
            total += fill(k + 1)
        return total

    return fill(0)


# -- decomposition table ----------------------------------------------------


@dataclass(frozen=True)
class IrrepBlock:
    partition: Partition
    multiplicity: int
    dimension: int


@dataclass(frozen=True)
class DecompositionTable:
    d: int
    n: int
    blocks: tuple[IrrepBlock, ...]

    @property
    def total(self) -> int:
        return sum(b.multiplicity * b.dimension for b in self.blocks)

    @property
    def consistent(self) -> bool:
        return self.total == self.d**self.n


def decomposition(d: int, n: int, budget: int = 10**7) -> DecompositionTable:
    """Blocks ``I_f (x) M_g`` of the algebra generated by U^{(x)n}, U in SU(d)."""
    if d < 2 or n < 1:
        raise ValueError(f"decomposition needs d >= 2 and n >= 1, got d={d}, n={n}")
    count = count_partitions(n, d)
    if count > budget:
        raise BudgetExceeded(f"{count} partitions of n={n} into d={d} parts exceed budget {budget}")
    blocks = tuple(
        IrrepBlock(Partition(t), frobenius(t), weyl_dimension(t)) for t in iter_partition_tuples(n, d)
    )
    table = DecompositionTable(d, n, blocks)
    assert table.consistent, f"dimension sum {table.total} != {d}^{n}"
    return table
