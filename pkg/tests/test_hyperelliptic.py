import pytest

from curvecount.hyperelliptic import HyperellipticModel, PlaneModel


def _chi(a, p):
    a %= p
    return 0 if a == 0 else (1 if pow(a, (p - 1) // 2, p) == 1 else -1)


@pytest.mark.parametrize("p,f", [(5, (1, 1, 0, 0, 0, 0, 1)), (7, (3, 0, 1, 0, 0, 1)), (3, (1, 0, 0, 0, 0, 1))])
def test_point_count_odd_prime(p, f):
    model = HyperellipticModel(p, 2, f)
    f = list(f) + [0] * (7 - len(f))
    expect = sum(1 + _chi(sum(c * x ** i for i, c in enumerate(f)), p) for x in range(p))
    expect += 1 + _chi(f[6], p)
    assert model.point_counts(1) == [expect]


def test_point_count_char2():
    # y^2 + y = x^5 over F_2: the affine points (0,0), (0,1), (1, y) need y^2 + y = 1, impossible
    model = HyperellipticModel(2, 2, (0, 0, 0, 0, 0, 1), (1,))
    assert model.point_counts(1) == [3]


def test_smoothness():
    assert HyperellipticModel(5, 2, (1, 1, 0, 0, 0, 0, 1)).is_smooth()
    assert not HyperellipticModel(5, 2, (0, 0, 1, 0, 0, 0, 1)).is_smooth()


def test_weil_polynomial_functional_equation():
    m = HyperellipticModel(7, 2, (3, 0, 1, 0, 0, 1))
    assert m.weil.satisfies_functional_equation()


def test_str():
    assert str(HyperellipticModel(2, 2, (1, 0, 0, 0, 0, 1), (1, 1, 1))) == "y^2 + (x^2 + x + 1)y = x^5 + 1"


def test_plane_model_parse_round_trip():
    text = "y^{27}+y^9+y^3+y = x^{246}+x^{84}+x^{82}"
    m = PlaneModel.parse(3, text)
    assert str(m) == text
    assert PlaneModel.parse(3, str(m)) == m
