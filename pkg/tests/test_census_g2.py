from fractions import Fraction as Fr
from itertools import product

import pytest

from curvecount import calibration
from curvecount.census_g2 import (CalibrationError, Calibration, classes_by_bruteforce, enumerate_g2,
                                  enumerate_g2_char2, gl2_order, sigma_ab, trace_degree2)
from curvecount.modforms import hecke_trace


def _chi(a, p):
    a %= p
    return 0 if a == 0 else (1 if pow(a, (p - 1) // 2, p) == 1 else -1)


def _squarefree_sextic_count(p):
    """Binary sextics over F_p with nonzero discriminant, by gcd with the derivative."""
    def strip(f):
        while f and f[-1] % p == 0:
            f = f[:-1]
        return f

    def rem(a, b):
        a = list(a)
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b):
            c = a[-1] * inv % p
            for i in range(len(b)):
                a[len(a) - len(b) + i] = (a[len(a) - len(b) + i] - c * b[i]) % p
            a = strip(a[:-1])
        return a

    n = 0
    for f in product(range(p), repeat=7):
        f = strip(list(f))
        if len(f) < 6:  # degree 5 or 6 in x; lower degree is singular at infinity
            continue
        df = strip([(i * c) % p for i, c in enumerate(f)][1:])
        a, b = f, df
        while b:
            a, b = b, rem(a, b)
        n += len(a) == 1
    return n


def test_gl2_order():
    assert [gl2_order(q) for q in (2, 3, 4, 5)] == [6, 48, 180, 480]


def test_squarefree_sextic_total_gives_q_cubed():
    p = 3
    n = _squarefree_sextic_count(p)
    assert n == (p - 1) * p ** 4 * (p * p - 1)
    assert Fr(n, gl2_order(p)) == p ** 3


@pytest.mark.parametrize("q", (3, 5))
def test_total_mass(q):
    assert enumerate_g2(q).total == q ** 3


def test_masses_match_automorphism_brute_force():
    assert classes_by_bruteforce(3) == enumerate_g2(3).as_dict()


@pytest.mark.parametrize("q", (2, 4))
def test_char2_total_mass(q):
    assert enumerate_g2_char2(q).total == q ** 3


def test_odd_weight_sum_vanishes():
    assert sigma_ab(3, 3, 0).value == 0


@pytest.mark.parametrize("p", (2, 3, 5))
@pytest.mark.parametrize("k", (10, 12))
def test_saito_kurokawa_lifts(p, k):
    # S_{0,10} and S_{0,12} are spanned by lifts of the elliptic eigenforms of weight 2k-2
    assert trace_degree2(p, 0, k) == hecke_trace(2 * k - 2, p) + p ** (k - 1) + p ** (k - 2)


@pytest.mark.parametrize("p", (2, 3, 5))
@pytest.mark.parametrize("j,k", [(2, 6), (0, 4), (0, 6), (0, 8), (2, 8), (4, 8)])
def test_zero_spaces(p, j, k):
    assert trace_degree2(p, j, k) == 0


@pytest.mark.parametrize("j,k,values", [(6, 8, (0, -27000, 2843100)), (4, 10, (-1680, 55080, -7338900))])
def test_one_dimensional_vector_valued(j, k, values):
    assert tuple(trace_degree2(p, j, k) for p in (2, 3, 5)) == values


@pytest.mark.parametrize("anchor", [a for a in calibration.ANCHORS if a[0][0] in (3, 5)])
def test_anchors(anchor):
    (p, j, k), want = anchor
    assert trace_degree2(p, j, k) == want


def test_unknown_selector_rejected():
    with pytest.raises(CalibrationError):
        trace_degree2(3, 8, 8, Calibration(-1, "sideways", -2, -1))
