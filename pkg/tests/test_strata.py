from fractions import Fraction as Fr

import pytest

from curvecount.census_g1 import enumerate_elliptic
from curvecount.hyperelliptic import HyperellipticModel
from curvecount.strata import (StrataRecord, a_number, bound_check, build_ss_char2, build_ss_oddp,
                               genus_digits_ok, large_genus_examples, newton_polygon, p_rank, quotient_curve,
                               strata_census_g2_char2, three_way_check, twist_invariant, elliptic_three_way)
from curvecount.characters import WeilData

HALF = Fr(1, 2)


def test_x5_plus_1_over_f3():
    m = HyperellipticModel(3, 2, (1, 0, 0, 0, 0, 1))
    assert (p_rank(m), a_number(m)) == (0, 1)
    assert newton_polygon(m.weil, 3).slopes == (HALF,) * 4
    assert three_way_check(m) is None


def test_artin_schreier_genus2_char2():
    m = HyperellipticModel(2, 2, (0, 0, 0, 0, 0, 1), (1,))
    assert (p_rank(m), a_number(m)) == (0, 1)
    assert three_way_check(m) is None


def test_ordinary_curve():
    m = HyperellipticModel(2, 2, (0, 0, 0, 0, 0, 1), (0, 1, 1))
    assert p_rank(m) == 2
    assert three_way_check(m) is None
    assert twist_invariant(m)


def test_newton_polygon_shapes():
    # ordinary elliptic over F_5 with trace 1, supersingular with trace 0
    assert newton_polygon(WeilData(1, 5, (1,)), 5).slopes == (0, 1)
    assert newton_polygon(WeilData(1, 5, (0,)), 5).slopes == (HALF, HALF)
    assert newton_polygon(WeilData(1, 25, (10,)), 5).slopes == (HALF, HALF)


@pytest.mark.parametrize("q", (2, 3, 4, 5, 7, 9))
def test_elliptic_three_way(q):
    assert all(elliptic_three_way(r) for r in enumerate_elliptic(q))


def test_record_validation_and_bounds():
    with pytest.raises(ValueError):
        StrataRecord("x", 2, 3, 2, 1)
    assert bound_check(StrataRecord("x", 2, 5, 0, 2)) == []
    assert set(bound_check(StrataRecord("x", 4, 2, 0, 4))) >= {"ekedahl", "stohr-voloch"}
    assert "stohr-voloch-strict" in bound_check(StrataRecord("x", 3, 2, 0, 2, hyperelliptic=False))


def test_char2_strata_q2():
    c = strata_census_g2_char2(2)
    assert c.closed == {"f<=2": 8, "f<=1": 4, "f=0": 2, "a=2": 0}
    assert not c.failures


@pytest.mark.parametrize("h,g", [(1, 1), (2, 2), (3, 4)])
def test_build_char2(h, g):
    c = build_ss_char2(h)
    assert (c.genus, c.status) == (g, "verified")
    assert c.slopes == (HALF,) * (2 * g)


@pytest.mark.parametrize("p,h,g", [(3, 1, 3), (5, 0, 2), (7, 0, 3)])
def test_build_odd(p, h, g):
    c = build_ss_oddp(p, h)
    assert (c.genus, c.status) == (g, "verified")


@pytest.mark.parametrize("args,g", [((3, 1, 2, 0), 1), ((5, 1, 3, 1), 4), ((2, 2, 3, 1), 3)])
def test_quotient_curves(args, g):
    c = quotient_curve(*args)
    assert (c.genus, c.status) == (g, "verified")


def test_quotient_curve_divisibility():
    with pytest.raises(ValueError):
        quotient_curve(3, 1, 5, 1)


def test_large_examples_are_claims():
    ex = large_genus_examples()
    assert [c.genus for c in ex] == [2021, 999]
    assert all(c.status == "claimed" for c in ex)
    assert genus_digits_ok(3, 999)
    assert not genus_digits_ok(5, 7)
