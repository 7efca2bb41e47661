"""Small finite fields F_{p^m} with table-driven arithmetic.

Elements are plain ints in ``range(q)``; the int ``sum c_i p^i`` stands for the
residue class of ``sum c_i x^i`` modulo the field's defining polynomial.
Multiplication goes through exp/log tables, so every field here is meant to be
small (``q`` up to a few hundred thousand).
"""
from __future__ import annotations

import itertools
from functools import cached_property, lru_cache

import numpy as np

MAX_FIELD_SIZE = 1 << 20


class CapacityError(RuntimeError):
    """Requested size exceeds what an exhaustive kernel is allowed to handle."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, m)`` with ``q == p**m``; raise ValueError otherwise."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = 2
    while q % p:
        p += 1
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, m


# -- polynomials over F_p, coefficient lists low -> high ---------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _polymod_p(a: list[int], b: list[int], p: int) -> list[int]:
    a = [c % p for c in a]
    _trim(a)
    inv_lead = pow(b[-1], -1, p)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - db
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        _trim(a)
    return a


def _monic_polys(p: int, d: int):
    """Monic degree-``d`` polynomials in lexicographic order of (c_{d-1}, ..., c_0)."""
    for tail in itertools.product(range(p), repeat=d):
        yield list(reversed(tail)) + [1]


def is_irreducible_mod_p(f: list[int], p: int) -> bool:
    d = len(f) - 1
    if d <= 0:
        return False
    for e in range(1, d // 2 + 1):
        for g in _monic_polys(p, e):
            if not _polymod_p(f, g, p):
                return False
    return True


@lru_cache(maxsize=None)
def conway_free_modulus(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree ``m`` over F_p.

    Order is on the coefficient tuple read from x^{m-1} down to x^0.
    """
    if m == 1:
        return (0, 1)
    for f in _monic_polys(p, m):
        if is_irreducible_mod_p(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")


class FiniteField:
    """The field F_q, q = p^m, with a fixed defining polynomial."""

    def __init__(self, p: int, m: int = 1):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError("extension degree must be >= 1")
        q = p ** m
        if q > MAX_FIELD_SIZE:
            raise CapacityError(f"field of size {q} exceeds {MAX_FIELD_SIZE}")
        self.p, self.m, self.q = p, m, q
        self.modulus = conway_free_modulus(p, m)
        self._build_tables()

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.m})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and (self.p, self.m) == (other.p, other.m)

    def __hash__(self) -> int:
        return hash((self.p, self.m))

    # -- construction ----------------------------------------------------------
    def _mul_poly_raw(self, a: int, b: int) -> int:
        """Schoolbook product of two encoded elements, used only while building tables."""
        p, m = self.p, self.m
        da = self.to_digits(a)
        db = self.to_digits(b)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return self.from_digits(_polymod_p(prod, list(self.modulus), p))

    def _build_tables(self) -> None:
        p, m, q = self.p, self.m, self.q
        powers = p ** np.arange(m, dtype=np.int64)
        self.digits = (np.arange(q, dtype=np.int64)[:, None] // powers) % p
        gen = None
        for cand in range(1, q):
            if self._order_is_full(cand):
                gen = cand
                break
        assert gen is not None
        self.generator = gen
        exp = np.zeros(2 * (q - 1), dtype=np.int64)
        x = 1
        for i in range(q - 1):
            exp[i] = x
            x = self._times(x, gen)
        exp[q - 1:] = exp[: q - 1]
        log = np.full(q, -1, dtype=np.int64)
        log[exp[: q - 1]] = np.arange(q - 1)
        assert (log[1:] >= 0).all()
        self.exp, self.log = exp, log
        neg = ((-self.digits) % p) @ powers
        self.neg_table = neg
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp[(-(log[1:])) % (q - 1)]
        self.inv_table = inv

    def _times(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        return self._mul_poly_raw(a, b)

    def _order_is_full(self, g: int) -> bool:
        n = self.q - 1
        if n == 1:
            return g == 1
        primes = [r for r in range(2, n + 1) if n % r == 0 and is_prime(r)]
        for r in primes:
            if self._pow_raw(g, n // r) == 1:
                return False
        return True

    def _pow_raw(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self._times(result, base)
            base = self._times(base, base)
            e >>= 1
        return result

    # -- encoding --------------------------------------------------------------
    def to_digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return out

    def from_digits(self, d) -> int:
        v = 0
        for c in reversed(list(d)):
            v = v * self.p + int(c) % self.p
        return v

    def __call__(self, n: int) -> int:
        """Image of the integer ``n`` in the prime field."""
        return n % self.p

    def elements(self) -> range:
        return range(self.q)

    # -- scalar arithmetic -----------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, int(self.neg_table[b]))

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[self.log[a] + self.log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in finite field")
        return int(self.inv_table[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 to a negative power")
            return 1 if e == 0 else 0
        return int(self.exp[(int(self.log[a]) * e) % (self.q - 1)])

    def frobenius(self, a: int, k: int = 1) -> int:
        return self.pow(a, self.p ** k)

    def sum(self, values) -> int:
        acc = 0
        for v in values:
            acc = self.add(acc, v)
        return acc

    # -- tables ----------------------------------------------------------------
    @cached_property
    def add_table(self) -> np.ndarray:
        if self.q > 4096:
            raise CapacityError(f"addition table for q={self.q} is too large")
        d = self.digits
        powers = self.p ** np.arange(self.m, dtype=np.int64)
        s = (d[:, None, :] + d[None, :, :]) % self.p
        return s @ powers

    @cached_property
    def mul_table(self) -> np.ndarray:
        if self.q > 4096:
            raise CapacityError(f"multiplication table for q={self.q} is too large")
        a = np.arange(self.q)
        la = self.log[a]
        t = self.exp[(la[:, None] + la[None, :]) % (self.q - 1)]
        t[0, :] = 0
        t[:, 0] = 0
        return t

    @cached_property
    def quadratic_character(self) -> np.ndarray:
        """chi[a] in {0, 1, -1}; for even q every nonzero element is a square."""
        chi = np.zeros(self.q, dtype=np.int64)
        if self.p == 2:
            chi[1:] = 1
        else:
            chi[1:] = np.where(self.log[1:] % 2 == 0, 1, -1)
        return chi

    @cached_property
    def absolute_trace(self) -> np.ndarray:
        """Tr_{F_q/F_p}(a) for every element a."""
        tr = np.zeros(self.q, dtype=np.int64)
        for a in range(self.q):
            acc, x = 0, a
            for _ in range(self.m):
                acc = self.add(acc, x)
                x = self.pow(x, self.p)
            tr[a] = acc
        return tr

    def is_square(self, a: int) -> bool:
        return a == 0 or self.p == 2 or self.log[a] % 2 == 0

    def sqrt(self, a: int) -> int:
        if a == 0:
            return 0
        la = int(self.log[a])
        if self.p == 2:
            # squaring is a bijection; halve the log modulo the odd group order
            return int(self.exp[(la * pow(2, -1, self.q - 1)) % (self.q - 1)]) if self.q > 2 else a
        if la % 2:
            raise ValueError("not a square")
        return int(self.exp[la // 2])

    def nonsquare(self) -> int:
        if self.p == 2:
            raise ValueError("every element is a square in characteristic 2")
        return self.generator

    # -- vectorised helpers ----------------------------------------------------
    def vmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a)
        b = np.asarray(b)
        out = self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def vadd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.m == 1:
            return (np.asarray(a) + np.asarray(b)) % self.p
        if self.p == 2:
            return np.bitwise_xor(a, b)
        powers = self.p ** np.arange(self.m, dtype=np.int64)
        s = (self.digits[np.asarray(a)] + self.digits[np.asarray(b)]) % self.p
        return s @ powers

    # -- subfields -------------------------------------------------------------
    def embedding_from(self, small: "FiniteField") -> np.ndarray:
        """Array ``e`` with ``e[a]`` the image of ``a`` in ``self``.

        The image of small's ``x`` is the least root of small's modulus here.
        """
        if small.p != self.p or self.m % small.m:
            raise ValueError(f"{small} does not embed in {self}")
        if small.m == self.m:
            return np.arange(self.q, dtype=np.int64)
        if small.m == 1:
            e = np.zeros(small.q, dtype=np.int64)
            for a in range(small.q):
                e[a] = a
            return e
        root = None
        for r in range(self.q):
            if self.eval_poly(small.modulus, r) == 0:
                root = r
                break
        assert root is not None
        rpow = [1]
        for _ in range(small.m - 1):
            rpow.append(self.mul(rpow[-1], root))
        e = np.zeros(small.q, dtype=np.int64)
        for a in range(small.q):
            acc = 0
            for c, rp in zip(small.to_digits(a), rpow):
                if c:
                    acc = self.add(acc, self.mul(c, rp))
            e[a] = acc
        return e

    def eval_poly(self, coeffs, x: int) -> int:
        """Horner evaluation; ``coeffs`` low -> high, entries already in this field."""
        acc = 0
        for c in reversed(list(coeffs)):
            acc = self.add(self.mul(acc, x), c)
        return acc


@lru_cache(maxsize=None)
def GF(q: int) -> FiniteField:
    p, m = prime_power(q)
    return FiniteField(p, m)


@lru_cache(maxsize=None)
def embedding(small_q: int, big_q: int) -> np.ndarray:
    return GF(big_q).embedding_from(GF(small_q))
