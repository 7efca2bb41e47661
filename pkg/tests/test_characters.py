import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from curvecount.characters import (WeilData, sl2_power_trace, sp4_character,
                                   sp4_character_from_coefficients, sp4_character_numeric)


def test_weil_data_round_trip_elliptic():
    # y^2 = x^3 + x over F_3 has 4 points, trace 0
    w = WeilData.from_point_counts(3, [4])
    assert w.charpoly() == [1, 0, 3]
    assert w.point_count(2) == 9 + 1 + 6
    assert w.satisfies_functional_equation()


@given(st.integers(-4, 4), st.integers(-10, 10))
def test_weil_genus2_counts_consistent(a1, a2):
    q = 5
    w = WeilData.from_coefficients(q, [a1, a2])
    n1, n2 = w.point_count(1), w.point_count(2)
    w2 = WeilData.from_point_counts(q, [n1, n2])
    assert w2.charpoly() == w.charpoly()


@pytest.mark.parametrize("k", range(0, 9))
def test_sl2_power_trace_matches_roots(k):
    # Sym^k trace of diag(alpha, beta) with alpha + beta = t, alpha beta = q
    q, t = 7, 3
    alpha = complex(t, math.sqrt(4 * q - t * t)) / 2
    beta = alpha.conjugate()
    expect = sum(alpha ** i * beta ** (k - i) for i in range(k + 1)).real
    assert sl2_power_trace(k, t, q) == round(expect)


def _weyl_sp4(a, b, a1, a2, q):
    """Weyl character formula evaluated on numerically found Frobenius roots."""
    roots = np.roots([1, -a1, a2, -q * a1, q * q]) / math.sqrt(q)
    # pair each root with its inverse, keep one of each pair
    xs = []
    for r in roots:
        if not any(abs(r * x - 1) < 1e-6 for x in xs) and len(xs) < 2:
            xs.append(r)

    def alt(l1, l2):
        m = [[x ** l - x ** -l for x in xs] for l in (l1, l2)]
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]

    return (alt(a + 2, b + 1) / alt(2, 1) * math.sqrt(q) ** (a + b)).real


@pytest.mark.parametrize("a,b", [(0, 0), (1, 1), (2, 0), (3, 1), (4, 2), (5, 5), (6, 2)])
def test_sp4_character_matches_weyl_formula(a, b):
    q = 4
    for a1, a2 in [(1, 3), (-2, 5), (3, 9), (0, -4), (5, 14)]:
        expect = _weyl_sp4(a, b, a1, a2, q)
        assert sp4_character_from_coefficients(a, b, a1, a2, q) == round(expect)
        assert sp4_character_numeric(a, b, a1, a2, q) == round(expect)


def test_sp4_character_dimension():
    # Frobenius specialised to the identity gives the dimension of V_{a,b}
    def dim(a, b):
        return (a - b + 1) * (b + 1) * (a + 2) * (a + b + 3) // 6
    w = WeilData.from_coefficients(1, [4, 6])
    for a, b in [(0, 0), (1, 1), (2, 0), (2, 2), (4, 2), (6, 4)]:
        assert sp4_character(a, b, w) == dim(a, b)
