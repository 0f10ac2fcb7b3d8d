"""Exact integer helpers for square roots and the diameter lower bound.

Nothing here touches floating point: the extension coefficient depends on
whether ``m * ceil(sqrt(3N))`` and ``ceil(m * sqrt(3N))`` agree, which is a
sub-ulp question once ``N`` gets large.
"""

from __future__ import annotations

import math
from collections.abc import Iterable


def isqrt(n: int) -> int:
    """Return ``floor(sqrt(n))`` for a non-negative integer."""
    if n < 0:
        raise ValueError(f"isqrt of negative number {n}")
    return math.isqrt(n)


def ceil_sqrt(n: int) -> int:
    """Return ``ceil(sqrt(n))`` for a non-negative integer."""
    r = isqrt(n)
    return r if r * r == n else r + 1


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def lower_bound_diameter(N: int) -> int:
    """Sharp lower bound ``ceil(sqrt(3N)) - 2`` on the diameter of any
    2-Cayley digraph (or L-shape) of order ``N``."""
    if N < 1:
        raise ValueError(f"order must be positive, got {N}")
    return ceil_sqrt(3 * N) - 2


def gcd_many(values: Iterable[int]) -> int:
    values = list(values)
    if not values:
        raise ValueError("gcd of an empty list")
    return math.gcd(*values)


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of ``n`` by trial division."""
    if n < 1:
        raise ValueError(f"divisors of non-positive {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def square_divisors(n: int) -> list[int]:
    """All ``m >= 1`` with ``m**2 | n``, ascending."""
    return [m for m in range(1, isqrt(n) + 1) if n % (m * m) == 0]


def is_square_free(n: int) -> bool:
    return square_divisors(n) == [1]
