import pytest

from curvecount.modforms import dim_cusp_forms, eichler_shimura_check, hecke_trace, tau


def _delta(n):
    """q prod (1 - q^m)^24 up to q^n, by repeated multiplication."""
    c = [0] * (n + 1)
    c[1] = 1
    for m in range(1, n + 1):
        for _ in range(24):
            for i in range(n, m - 1, -1):
                c[i] -= c[i - m]
    return c


def test_tau_matches_eta_product():
    d = _delta(30)
    assert [tau(n) for n in range(1, 31)] == d[1:]


def test_dimensions():
    assert [dim_cusp_forms(k) for k in range(0, 40, 2)] == [0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 2, 1, 2, 2, 2, 2, 3, 2]


@pytest.mark.parametrize("p", (2, 3, 5, 7))
def test_hecke_trace_weight_12(p):
    assert hecke_trace(12, p) == tau(p)


def test_hecke_trace_weight_24():
    # T_2 on S_24 has eigenvalues 540 +- 12 sqrt(144169)
    assert hecke_trace(24, 2) == 1080


@pytest.mark.parametrize("k", range(2, 17, 2))
@pytest.mark.parametrize("p", (2, 3, 5, 7))
def test_eichler_shimura(k, p):
    assert eichler_shimura_check(k, p)
