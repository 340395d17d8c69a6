"""Error-correction rates log_d f / n for big-integer multiplicities."""

from __future__ import annotations

from dataclasses import dataclass
from math import log2

from .partitions import PartitionLike, as_parts
from .schur_weyl import frobenius

_MANTISSA_BITS = 64
SIGNIFICANT_DIGITS = 12


def log_big(x: int, base: float = 2.0) -> float:
    """log_base(x) for an arbitrarily large positive integer.

    Uses the bit length and the leading 64 bits only, so the absolute error
    is about 1e-16 in log2 regardless of how big ``x`` is.
    """
    if x < 1:
        raise ValueError(f"log_big needs x >= 1, got {x}")
    if base <= 1:
        raise ValueError(f"base must exceed 1, got {base}")
    shift = max(0, x.bit_length() - _MANTISSA_BITS)
    bits = shift + log2(x >> shift)
    return bits if base == 2 else bits / log2(base)


def code_rate(p: PartitionLike) -> float:
    """Protected qudits per physical qudit, log_d f(p) / n."""
    parts = as_parts(p)
    n = sum(parts)
    if n < 1:
        raise ValueError("rate is undefined for n = 0")
    return log_big(frobenius(parts), len(parts)) / n


def round_sig(x: float, digits: int = SIGNIFICANT_DIGITS) -> float:
    return float(f"{x:.{digits}g}")


@dataclass(frozen=True)
class RateEntry:
    k: int
    n: int
    rate: float
    f_bits: int


@dataclass(frozen=True)
class RateSeries:
    d: int
    entries: tuple[RateEntry, ...]


def balanced_rate_series(d: int, k_max: int) -> RateSeries:
    """Rates of the balanced partitions (k, ..., k) for k = 1..k_max."""
    if d < 2 or k_max < 1:
        raise ValueError(f"need d >= 2 and k_max >= 1, got d={d}, k_max={k_max}")
    entries = []
    for k in range(1, k_max + 1):
        f = frobenius((k,) * d)
        entries.append(RateEntry(k, d * k, log_big(f, d) / (d * k), f.bit_length()))
    return RateSeries(d, tuple(entries))
