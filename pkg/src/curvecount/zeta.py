"""Exact Bernoulli numbers and the zeta values at negative odd integers."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """B_n with the convention B_1 = +1/2 (Akiyama-Tanigawa)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    row = [Fraction(1, m + 1) for m in range(n + 1)]
    for j in range(n, 0, -1):
        for m in range(j):
            row[m] = (m + 1) * (row[m] - row[m + 1])
    return row[0]


def zeta_negative_odd(k: int) -> Fraction:
    """zeta(1 - 2k) = -B_{2k} / (2k) for k >= 1."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return -bernoulli(2 * k) / (2 * k)


def bernoulli_zeta(g: int) -> Fraction:
    """The proportionality constant p(g) = (-1)^{g(g+1)/2} 2^{-g} prod_{k<=g} zeta(1-2k)."""
    if g < 1:
        raise ValueError("g must be >= 1")
    value = Fraction((-1) ** (g * (g + 1) // 2), 2 ** g)
    for k in range(1, g + 1):
        value *= zeta_negative_odd(k)
    return value
