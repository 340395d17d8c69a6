"""Exact comparisons between integers and (nested) quadratic surds.

Every ceiling here is decided by integer arithmetic only: a candidate
integer is compared with the surd by isolating the square root and
squaring, with the sign of each side checked before squaring.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt, sqrt


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def sign_lin_sqrt(c: int, s: int) -> int:
    """Sign of ``c + sqrt(s)`` for integers c and s >= 0."""
    if c >= 0:
        return 0 if (c == 0 and s == 0) else 1
    return _sign(s - c * c)


class _Surd:
    def cmp(self, m: int) -> int:
        """Sign of ``self - m``."""
        raise NotImplementedError

    def _estimate(self) -> int:
        raise NotImplementedError

    def ceil(self) -> int:
        m = self._estimate()
        while self.cmp(m) > 0:
            m += 1
        while self.cmp(m - 1) <= 0:
            m -= 1
        return m

    def floor(self) -> int:
        m = self.ceil()
        return m if self.cmp(m) == 0 else m - 1

    def is_integer(self) -> bool:
        return self.cmp(self.ceil()) == 0

    def __le__(self, m: int) -> bool:
        return self.cmp(m) <= 0

    def __ge__(self, m: int) -> bool:
        return self.cmp(m) >= 0


@dataclass(frozen=True)
class Radical(_Surd):
    """``(a + sign*sqrt(s)) / b`` with ``b > 0``, ``s >= 0`` and ``sign`` in {+1, -1}."""

    a: int
    s: int
    b: int
    sign: int = 1

    def __post_init__(self):
        if self.b <= 0 or self.s < 0 or self.sign not in (1, -1):
            raise ValueError(f"bad radical {self}")

    def cmp(self, m: int) -> int:
        c = self.a - m * self.b
        if self.sign > 0:
            return sign_lin_sqrt(c, self.s)
        return -sign_lin_sqrt(-c, self.s)

    def _estimate(self) -> int:
        return (self.a + self.sign * isqrt(self.s)) // self.b

    def __float__(self) -> float:
        return (self.a + self.sign * sqrt(self.s)) / self.b


@dataclass(frozen=True)
class NestedRadical(_Surd):
    """``(a + sqrt(c + sqrt(s))) / b`` with ``b > 0`` and ``c + sqrt(s) >= 0``."""

    a: int
    c: int
    s: int
    b: int

    def __post_init__(self):
        if self.b <= 0 or self.s < 0 or sign_lin_sqrt(self.c, self.s) < 0:
            raise ValueError(f"bad nested radical {self}")

    def cmp(self, m: int) -> int:
        # sign(sqrt(c + sqrt(s)) - y) with y = m*b - a
        y = m * self.b - self.a
        if y < 0:
            return 1
        # both sides nonnegative: compare c + sqrt(s) with y^2
        return sign_lin_sqrt(self.c - y * y, self.s)

    def _estimate(self) -> int:
        return (self.a + isqrt(self.c + isqrt(self.s))) // self.b

    def __float__(self) -> float:
        return (self.a + sqrt(self.c + sqrt(self.s))) / self.b


def r0_radical(k: int) -> NestedRadical:
    return NestedRadical(-3, 3 + 3 * k, 12 + 20 * k + 9 * k * k, 2)


@dataclass(frozen=True)
class QutritThresholds:
    """The five surds that locate the qutrit optimum for a given ``k``.

    ``r0_hat`` is ``r0`` evaluated at ``k + 1``.
    """

    k: int
    r0: NestedRadical
    r1: Radical
    r2: Radical
    r3: Radical
    r4: Radical
    r0_hat: NestedRadical
    ceil_r0: int
    ceil_r1: int
    ceil_r3: int
    ceil_r0_hat: int
    r0_integral: bool
    r2_integral: bool
    r3_integral: bool
    r4_integral: bool

    @property
    def ordering_holds(self) -> bool:
        """Ceiling consequences of r1 < r3 < r0 < r0_hat < r1 + 1."""
        c3 = self.ceil_r3
        return (
            self.ceil_r1 <= c3 <= self.ceil_r1 + 1
            and self.ceil_r0 in (c3, c3 + 1)
            and self.ceil_r0_hat in (c3, c3 + 1)
            and self.ceil_r0 <= self.ceil_r0_hat
        )


def qutrit_thresholds(k: int) -> QutritThresholds:
    """Exact ceilings and integrality flags of r0..r4 and r0_hat for ``k >= 0``.

    >>> t = qutrit_thresholds(1)
    >>> t.r3_integral, t.ceil_r3
    (True, 0)
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    r0 = r0_radical(k)
    r0_hat = r0_radical(k + 1)
    r1 = Radical(-10, 60 + 24 * k, 4)
    r2 = Radical(-9, 49 + 24 * k, 4)
    r3 = Radical(-8, 40 + 24 * k, 4)
    r4 = Radical(-7, 49 + 24 * k, 4)
    return QutritThresholds(
        k=k,
        r0=r0,
        r1=r1,
        r2=r2,
        r3=r3,
        r4=r4,
        r0_hat=r0_hat,
        ceil_r0=r0.ceil(),
        ceil_r1=r1.ceil(),
        ceil_r3=r3.ceil(),
        ceil_r0_hat=r0_hat.ceil(),
        r0_integral=r0.is_integer(),
        r2_integral=r2.is_integer(),
        r3_integral=r3.is_integer(),
        r4_integral=r4.is_integer(),
    )


def qubit_rstar(n: int) -> int:
    """floor(((n + 2) - sqrt(n + 2)) / 2), exactly."""
    return Radical(n + 2, n + 2, 2, sign=-1).floor()
