import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from curvecount.fields import CapacityError, GF, embedding, is_prime, prime_power

QS = (2, 3, 4, 5, 7, 8, 9, 16, 25, 27)


def test_prime_power():
    assert prime_power(27) == (3, 3)
    assert prime_power(7) == (7, 1)
    with pytest.raises(ValueError):
        prime_power(12)
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


@pytest.mark.parametrize("p", (2, 3, 5, 7, 13))
def test_prime_field_is_integers_mod_p(p):
    F = GF(p)
    for a in range(p):
        for b in range(p):
            assert F.add(a, b) == (a + b) % p
            assert F.mul(a, b) == (a * b) % p


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(QS), st.data())
def test_field_axioms(q, data):
    F = GF(q)
    a, b, c = (data.draw(st.integers(0, q - 1)) for _ in range(3))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(F.sub(a, b), b) == a
    if a:
        assert F.mul(a, F.inv(a)) == 1
        assert F.pow(a, q - 1) == 1


@pytest.mark.parametrize("q", QS)
def test_quadratic_character_and_trace(q):
    F = GF(q)
    chi = np.asarray(F.quadratic_character)
    if q % 2:
        assert (chi == 1).sum() == (chi == -1).sum() == (q - 1) // 2
        assert not F.is_square(F.nonsquare())
    tr = np.asarray(F.absolute_trace)
    assert np.bincount(tr, minlength=F.p).tolist() == [q // F.p] * F.p


@pytest.mark.parametrize("small,big", [(2, 4), (2, 8), (2, 16), (4, 16), (3, 9), (3, 27), (5, 25)])
def test_embedding_is_ring_homomorphism(small, big):
    k, K = GF(small), GF(big)
    e = embedding(small, big)
    assert len(set(e.tolist())) == small
    for a in range(small):
        for b in range(small):
            assert e[k.mul(a, b)] == K.mul(int(e[a]), int(e[b]))
            assert e[k.add(a, b)] == K.add(int(e[a]), int(e[b]))


def test_frobenius_fixes_subfield():
    K = GF(27)
    fixed = [a for a in range(27) if K.frobenius(a) == a]
    assert len(fixed) == 3


def test_capacity_error_is_runtime_error():
    assert issubclass(CapacityError, RuntimeError)
