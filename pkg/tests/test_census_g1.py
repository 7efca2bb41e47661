from collections import Counter
from fractions import Fraction as Fr

import pytest

from curvecount.acceptance import F3_FREQUENCY, F3_TABLE, SIGMA_TABLE
from curvecount.census_g1 import (count_points, enumerate_elliptic, frequency_table, geometric_aut_orders,
                                  j_invariant, sigma_k, total_mass)
from curvecount.fields import GF


def _legendre(a, p):
    a %= p
    return 0 if a == 0 else (1 if pow(a, (p - 1) // 2, p) == 1 else -1)


def _short_weierstrass_traces(p):
    """Brute force: trace of Frobenius of every smooth y^2 = x^3 + ax + b over F_p."""
    out = Counter()
    for a in range(p):
        for b in range(p):
            if (4 * a ** 3 + 27 * b * b) % p == 0:
                continue
            out[-sum(_legendre(x ** 3 + a * x + b, p) for x in range(p))] += 1
    return out


@pytest.mark.parametrize("q", (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27))
def test_total_mass_is_q(q):
    assert total_mass(enumerate_elliptic(q)) == q


@pytest.mark.parametrize("p", (5, 7, 11, 13))
def test_trace_masses_match_weierstrass_count(p):
    # each class appears (p-1)/#Aut times among short Weierstrass models
    mass = Counter()
    for r in enumerate_elliptic(p):
        mass[r.trace] += r.mass
    bf = _short_weierstrass_traces(p)
    assert {t: m * (p - 1) for t, m in mass.items()} == {t: Fr(n) for t, n in bf.items()}


def test_f3_table():
    got = Counter((r.n1, r.mass, r.j_invariant) for r in enumerate_elliptic(3))
    assert got == Counter((n, m, j % 3) for _, n, m, j in F3_TABLE)
    assert frequency_table(enumerate_elliptic(3)) == F3_FREQUENCY


def test_count_points_brute_force():
    F = GF(7)
    for a in range(7):
        model = (0, 0, 0, a, 3)
        if (4 * a ** 3 + 27 * 9) % 7 == 0:
            continue
        expect = 1 + sum(1 + _legendre(x ** 3 + a * x + 3, 7) for x in range(7))
        assert count_points(F, model) == expect


def test_j_invariant_short_form():
    F = GF(11)
    # j = 1728 * 4a^3 / (4a^3 + 27 b^2)
    a, b = 2, 5
    num, den = 1728 * 4 * a ** 3, 4 * a ** 3 + 27 * b * b
    assert j_invariant(F, (0, 0, 0, a, b)) == num * pow(den, -1, 11) % 11


@pytest.mark.parametrize("p", (2, 3, 5, 7))
def test_sigma_table(p):
    for n, want in zip(range(0, 17, 2), SIGMA_TABLE[p]):
        assert sigma_k(p, n) == want


@pytest.mark.parametrize("p,special", [(2, {0: 24}), (3, {0: 12}), (5, {0: 6, 1728 % 5: 4}), (7, {0: 6, 1728 % 7: 4})])
def test_automorphisms_over_p_squared_are_geometric(p, special):
    q = p * p
    aut = geometric_aut_orders(q)
    assert len(aut) == q
    for j, n in aut.items():
        assert n == special.get(j, 2)
