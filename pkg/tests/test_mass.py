from fractions import Fraction as Fr

import pytest

from curvecount.mass import (IntegralityError, deuring, deuring_report, ekedahl_ss_mass, moret_bailly,
                             proportionality_constant, sp4_group_order, sp4_group_order_bruteforce,
                             vf_coefficient)


@pytest.mark.parametrize("p,h", [(2, 1), (3, 1), (5, 1), (7, 1), (11, 2), (13, 1), (37, 3), (101, 9)])
def test_deuring_class_number(p, h):
    assert deuring(p) == (h, Fr(p - 1, 24))


@pytest.mark.parametrize("p", (2, 3, 5, 7, 11, 13))
def test_deuring_against_census(p):
    count, mass = deuring_report(p)
    assert count.match and mass.match


def test_sp4_orders():
    assert sp4_group_order(2) == sp4_group_order_bruteforce(2) == 720
    assert sp4_group_order(3) == sp4_group_order_bruteforce(3) == 51840
    assert sp4_group_order(1) == 1


def test_ekedahl_masses():
    assert ekedahl_ss_mass(1, 5) == Fr(4, 24)
    assert ekedahl_ss_mass(2, 3) == Fr(1, 288)
    assert ekedahl_ss_mass(3, 2) == Fr(1, 82944)
    # genus-2 mass times #Sp4(Z/n) is the superspecial point count on A_2[n]
    assert ekedahl_ss_mass(2, 5) * sp4_group_order(3) == moret_bailly(5, 3).superspecial
    with pytest.raises(ValueError):
        ekedahl_ss_mass(7, 2)


def test_proportionality():
    assert proportionality_constant(2) == Fr(1, 5760)


def test_vf_coefficient():
    assert vf_coefficient(2, 0, 3) == 2 * 8
    assert vf_coefficient(3, 3, 7) == 1


@pytest.mark.parametrize("p", (2, 3, 5, 7, 11))
@pytest.mark.parametrize("n", (3, 4, 5))
def test_moret_bailly(p, n):
    if n % p == 0:
        pytest.skip("p divides n")
    mb = moret_bailly(p, n)
    assert mb.integral()
    assert mb.incidence_holds()
    assert (mb.in_m2 == 0) == (p in (2, 3))


def test_level_two_is_not_integral():
    mb = moret_bailly(3, 2)
    assert mb.superspecial == Fr(5, 2)
    assert not mb.integral()


def test_bad_input():
    with pytest.raises(ValueError):
        moret_bailly(3, 6)
    with pytest.raises(ValueError):
        deuring(9)
    assert issubclass(IntegralityError, ArithmeticError)
