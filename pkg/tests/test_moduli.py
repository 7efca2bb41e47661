from fractions import Fraction as Fr
from math import prod

import pytest

from curvecount.acceptance import M1_11_POLY, M1N_POLYS, MBAR1N_POLYS, evaluate
from curvecount.fields import CapacityError
from curvecount.modforms import tau
from curvecount.moduli import (CycleType, PolynomialFitError, genus1_stable_graphs, m0n_count,
                               m0n_equivariant, m1n_direct, m1n_getzler, mbar1n, poly_fit_and_check)


def _legendre(a, p):
    a %= p
    return 0 if a == 0 else (1 if pow(a, (p - 1) // 2, p) == 1 else -1)


def _m1n_weierstrass(p, n):
    """Marked points P_2..P_n distinct and away from O on each y^2 = x^3 + ax + b."""
    total = Fr(0)
    for a in range(p):
        for b in range(p):
            if (4 * a ** 3 + 27 * b * b) % p == 0:
                continue
            N = 1 + sum(1 + _legendre(x ** 3 + a * x + b, p) for x in range(p))
            total += Fr(prod(N - i for i in range(1, n)), p - 1)
    return total


@pytest.mark.parametrize("p", (5, 7))
@pytest.mark.parametrize("n", range(1, 6))
def test_m1n_against_weierstrass_brute_force(p, n):
    assert m1n_direct(p, n) == _m1n_weierstrass(p, n)


@pytest.mark.parametrize("q", (2, 3, 4, 5, 7, 8, 9))
@pytest.mark.parametrize("n", range(1, 8))
def test_m1n_routes_agree_with_polynomials(q, n):
    want = evaluate(M1N_POLYS[n], q)
    assert m1n_direct(q, n) == want
    assert m1n_getzler(q, n) == want


@pytest.mark.parametrize("p", (2, 3, 5, 7, 11, 13))
def test_m1_11_carries_tau(p):
    assert m1n_getzler(p, 11) == evaluate(M1_11_POLY, p) - tau(p)


def test_m1_11_is_zero_for_small_p():
    assert [m1n_direct(p, 11) for p in (2, 3, 5)] == [0, 0, 0]


def test_m1_11_not_polynomial():
    samples = [(q, m1n_getzler(q, 11)) for q in (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23)]
    with pytest.raises(PolynomialFitError) as exc:
        poly_fit_and_check(samples, 11)
    assert exc.value.reason in ("non-integral", "extra-sample")


def test_m1_10_fits_integral_polynomial():
    qs = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19)
    poly = poly_fit_and_check([(q, m1n_getzler(q, 10)) for q in qs], 10)
    assert poly.coeffs == (181440, -245664, 89124, 42126, -62140, 34944, -11655, 2274, -210, 0, 1)


def test_m0n():
    assert [m0n_count(5, n) for n in (3, 4, 5)] == [1, 3, 6]
    # (12)(3)(4) on M_{0,4}: a conjugate pair (q^2 - q choices) plus two distinct rational points
    assert m0n_equivariant(5, 4, CycleType.of([2, 1, 1])) == (6 * 5) * (25 - 5) // 120


def test_stable_graph_counts():
    assert [len(genus1_stable_graphs(n)) for n in (1, 2)] == [2, 5]


@pytest.mark.parametrize("n", range(1, 5))
def test_mbar1n_polynomials(n):
    for q in (2, 3, 5):
        assert mbar1n(q, n) == evaluate(MBAR1N_POLYS[n], q)


def test_fitpoly_palindromic_and_errors():
    poly = poly_fit_and_check([(2, 9), (3, 16), (5, 36)], 2, complete=True)
    assert str(poly) == "q^2+2q+1"
    with pytest.raises(PolynomialFitError) as exc:
        poly_fit_and_check([(2, 4), (3, 9), (5, 25)], 2, complete=True)
    assert exc.value.reason == "not-palindromic"
    with pytest.raises(PolynomialFitError):
        poly_fit_and_check([(2, 1)], 2)


def test_capacity():
    with pytest.raises(CapacityError):
        m1n_direct(3, 40)
