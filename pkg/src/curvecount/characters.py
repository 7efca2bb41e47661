"""Frobenius data of curves and character values of the symplectic groups.

Everything is exact integer arithmetic.  Characters of Sp(4) are homogenised
for GSp(4) with multiplier q, i.e. evaluated on eigenvalues
``{alpha_1, q/alpha_1, alpha_2, q/alpha_2}``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

Poly3 = dict  # {(i, j, k): c} meaning sum c * a1^i * a2^j * q^k


def sl2_power_trace(k: int, t: int, q: int) -> int:
    """h_k(alpha, alpha_bar) for alpha + alpha_bar = t, alpha * alpha_bar = q.

    This is the trace of Frobenius on Sym^k of a rank-2 piece with trace t
    and determinant q.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    prev, cur = 0, 1
    for _ in range(k):
        prev, cur = cur, t * cur - q * prev
    return cur


def _newton_elementary(power_sums: list[int]) -> list[int]:
    """e_0..e_n from p_1..p_n via Newton's identities (exact, integral inputs)."""
    e = [1]
    for k in range(1, len(power_sums) + 1):
        acc = 0
        for i in range(1, k + 1):
            acc += (-1) ** (i - 1) * e[k - i] * power_sums[i - 1]
        if acc % k:
            raise ArithmeticError(f"non-integral e_{k} from power sums {power_sums}")
        e.append(acc // k)
    return e


@dataclass(frozen=True)
class WeilData:
    """Frobenius data of a genus-g curve (or ppav) over F_q.

    ``a`` holds (a_1, ..., a_g), the elementary symmetric functions of the
    2g Frobenius eigenvalues; the Weil polynomial is
    t^{2g} - a_1 t^{2g-1} + a_2 t^{2g-2} - ... with constant term q^g.
    """

    genus: int
    q: int
    s: tuple[int, ...]
    a: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.a:
            object.__setattr__(self, "a", tuple(_newton_elementary(list(self.s))[1:]))
        if len(self.s) != self.genus or len(self.a) != self.genus:
            raise ValueError("need exactly g power sums")
        if self.s[0] ** 2 > 4 * self.genus ** 2 * self.q:
            raise ValueError(f"trace {self.s[0]} violates the Weil bound for q={self.q}")

    @classmethod
    def from_point_counts(cls, q: int, counts) -> "WeilData":
        counts = list(counts)
        s = tuple(q ** (d + 1) + 1 - n for d, n in enumerate(counts))
        return cls(len(counts), q, s)

    @classmethod
    def from_coefficients(cls, q: int, a) -> "WeilData":
        a = tuple(a)
        g = len(a)
        e = [1] + list(a)
        # power sums from the first g elementary symmetric functions
        s = []
        for k in range(1, g + 1):
            acc = (-1) ** (k - 1) * k * e[k]
            for i in range(1, k):
                acc += (-1) ** (i - 1) * e[i] * s[k - i - 1]
            s.append(acc)
        return cls(g, q, tuple(s), a)

    def charpoly(self) -> list[int]:
        """Coefficients of the Weil polynomial, highest degree first."""
        return [(-1) ** i * c for i, c in enumerate(self.elementary())]

    def satisfies_functional_equation(self) -> bool:
        c = self.charpoly()[::-1]  # c[i] = coefficient of t^i
        g, q = self.genus, self.q
        return all(c[i] == q ** (g - i) * c[2 * self.genus - i] for i in range(g + 1))

    def point_count(self, d: int) -> int:
        """#C(F_{q^d}) from the power-sum recurrence of the eigenvalues."""
        return self.q ** d + 1 - self.power_sum(d)

    def elementary(self) -> list[int]:
        """e_0..e_{2g} of the 2g eigenvalues."""
        g, q = self.genus, self.q
        e = [1] + list(self.a)
        for i in range(g + 1, 2 * g + 1):
            e.append(q ** (i - g) * e[2 * g - i])
        return e

    def power_sum(self, d: int) -> int:
        e = self.elementary()
        n = len(e) - 1
        ps: list[int] = []
        for k in range(1, d + 1):
            acc = (-1) ** (k - 1) * k * e[k] if k <= n else 0
            for i in range(1, min(k - 1, n) + 1):
                acc += (-1) ** (i - 1) * e[i] * ps[k - i - 1]
            ps.append(acc)
        return ps[d - 1]


# -- Sp(4) characters ----------------------------------------------------------

def _padd(x: Poly3, y: Poly3, scale: int = 1) -> Poly3:
    out = dict(x)
    for mon, c in y.items():
        v = out.get(mon, 0) + scale * c
        if v:
            out[mon] = v
        else:
            out.pop(mon, None)
    return out


def _pmul(x: Poly3, y: Poly3) -> Poly3:
    out: Poly3 = {}
    for (i1, j1, k1), c1 in x.items():
        for (i2, j2, k2), c2 in y.items():
            mon = (i1 + i2, j1 + j2, k1 + k2)
            v = out.get(mon, 0) + c1 * c2
            if v:
                out[mon] = v
            else:
                out.pop(mon, None)
    return out


_A1 = {(1, 0, 0): 1}
_A2 = {(0, 1, 0): 1}
_Q = {(0, 0, 1): 1}


@lru_cache(maxsize=None)
def _complete_homogeneous(m: int) -> tuple:
    """h_m of the four eigenvalues as a polynomial in (a1, a2, q).

    e_1 = a1, e_2 = a2, e_3 = q*a1, e_4 = q^2.
    """
    if m < 0:
        return ()
    if m == 0:
        return (((0, 0, 0), 1),)
    e = [None, _A1, _A2, {(1, 0, 1): 1}, {(0, 0, 2): 1}]
    acc: Poly3 = {}
    for i in range(1, 5):
        prev = dict(_complete_homogeneous(m - i))
        if prev:
            acc = _padd(acc, _pmul(e[i], prev), (-1) ** (i - 1))
    return tuple(sorted(acc.items()))


def _h(m: int) -> Poly3:
    return dict(_complete_homogeneous(m))


@lru_cache(maxsize=None)
def sp4_character_polynomial(a: int, b: int) -> tuple:
    """Integer polynomial in (a1, a2, q) for the character of R_{a,b}.

    Symplectic Jacobi-Trudi determinant:
        | h_a      h_{a+1} + q h_{a-1} |
        | h_{b-1}  h_b     + q h_{b-2} |
    """
    if b < 0 or a < b:
        raise ValueError(f"need a >= b >= 0, got ({a}, {b})")
    m11 = _h(a)
    m12 = _padd(_h(a + 1), _pmul(_Q, _h(a - 1)))
    m21 = _h(b - 1)
    m22 = _padd(_h(b), _pmul(_Q, _h(b - 2)))
    det = _padd(_pmul(m11, m22), _pmul(m21, m12), -1)
    return tuple(sorted(det.items()))


def eval_poly3(poly, a1: int, a2: int, q: int) -> int:
    return sum(c * a1 ** i * a2 ** j * q ** k for (i, j, k), c in poly)


def sp4_character(a: int, b: int, w: WeilData) -> int:
    """Trace of Frobenius on R_{a,b}(H^1) for genus-2 Weil data ``w``."""
    if w.genus != 2:
        raise ValueError("sp4_character needs genus-2 Weil data")
    return sp4_character_from_coefficients(a, b, w.a[0], w.a[1], w.q)


def sp4_character_from_coefficients(a: int, b: int, a1: int, a2: int, q: int) -> int:
    return eval_poly3(sp4_character_polynomial(a, b), a1, a2, q)


def sp4_character_numeric(a: int, b: int, a1: int, a2: int, q: int) -> int:
    """Same determinant evaluated on integers, without the polynomial table."""
    if b < 0 or a < b:
        raise ValueError(f"need a >= b >= 0, got ({a}, {b})")
    h = [1]
    e = (a1, a2, q * a1, q * q)
    for m in range(1, a + 2):
        acc = 0
        for i in range(1, 5):
            if m - i >= 0:
                acc += (-1) ** (i - 1) * e[i - 1] * h[m - i]
        h.append(acc)

    def hh(m: int) -> int:
        return h[m] if m >= 0 else 0

    return hh(a) * (hh(b) + q * hh(b - 2)) - hh(b - 1) * (hh(a + 1) + q * hh(a - 1))
