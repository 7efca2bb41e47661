from fractions import Fraction as Fr

import pytest

from curvecount.series import LaurentSeries, WindowError, laurent_residue
from curvecount.zeta import bernoulli, bernoulli_zeta, zeta_negative_odd


def test_bernoulli_small():
    assert [bernoulli(n) for n in (0, 2, 4, 6, 8, 10, 12)] == [
        1, Fr(1, 6), Fr(-1, 30), Fr(1, 42), Fr(-1, 30), Fr(5, 66), Fr(-691, 2730)]
    assert all(bernoulli(n) == 0 for n in (3, 5, 7, 9))


def test_zeta_values():
    assert zeta_negative_odd(1) == Fr(-1, 12)
    assert zeta_negative_odd(2) == Fr(1, 120)
    assert zeta_negative_odd(3) == Fr(-1, 252)


@pytest.mark.parametrize("g,want", [(1, Fr(1, 24)), (2, Fr(1, 5760)), (3, Fr(1, 2903040)), (4, Fr(1, 1393459200))])
def test_proportionality_constant(g, want):
    assert bernoulli_zeta(g) == want


def test_laurent_arithmetic_and_residue():
    x = LaurentSeries.monomial(1, 1, -3, 6)
    inv = LaurentSeries.monomial(1, -1, -3, 6)
    s = (x + inv).scale(2)
    assert s[1] == 2 and s[-1] == 2
    assert laurent_residue(inv) == 1
    assert laurent_residue(x - x) == 0


def test_window_errors():
    s = LaurentSeries.monomial(1, 0, 0, 3)
    with pytest.raises(WindowError):
        s[5]
    with pytest.raises(WindowError):
        LaurentSeries({7: Fr(1)}, 0, 3)
