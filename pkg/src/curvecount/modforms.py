"""Level-one elliptic modular forms through q-expansions.

Used as an independent oracle for the point-count side: Hecke traces here
never look at a curve.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


class PrecisionError(ValueError):
    pass


class ModularFormsError(ArithmeticError):
    pass


@dataclass(frozen=True)
class QSeries:
    """a_0 + a_1 q + ... + a_prec q^prec + O(q^{prec+1})."""

    coeffs: tuple
    weight: int | None = None

    @property
    def prec(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        if n > self.prec:
            raise PrecisionError(f"coefficient {n} beyond precision {self.prec}")
        return self.coeffs[n]

    def __add__(self, other: "QSeries") -> "QSeries":
        n = min(self.prec, other.prec) + 1
        w = self.weight if self.weight == other.weight else None
        return QSeries(tuple(a + b for a, b in zip(self.coeffs[:n], other.coeffs[:n])), w)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + other.scale(-1)

    def scale(self, c) -> "QSeries":
        return QSeries(tuple(c * a for a in self.coeffs), self.weight)

    def __mul__(self, other: "QSeries") -> "QSeries":
        n = min(self.prec, other.prec) + 1
        a, b = self.coeffs, other.coeffs
        out = [0] * n
        for i in range(n):
            ai = a[i]
            if ai:
                for j in range(n - i):
                    out[i + j] += ai * b[j]
        w = None if self.weight is None or other.weight is None else self.weight + other.weight
        return QSeries(tuple(out), w)

    def __pow__(self, e: int) -> "QSeries":
        result = QSeries((1,) + (0,) * self.prec, 0)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def valuation(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return self.prec + 1


def _divisor_power_sums(s: int, prec: int) -> list[int]:
    out = [0] * (prec + 1)
    for d in range(1, prec + 1):
        ds = d ** s
        for n in range(d, prec + 1, d):
            out[n] += ds
    return out


@lru_cache(maxsize=None)
def eisenstein(k: int, prec: int) -> QSeries:
    """E_4 = 1 + 240 sum sigma_3(n) q^n and E_6 = 1 - 504 sum sigma_5(n) q^n."""
    const = {4: 240, 6: -504}
    if k not in const:
        raise ValueError("only E_4 and E_6 are provided")
    sig = _divisor_power_sums(k - 1, prec)
    return QSeries((1,) + tuple(const[k] * sig[n] for n in range(1, prec + 1)), k)


def _eta_product_delta(prec: int) -> QSeries:
    """q * prod (1 - q^m)^24."""
    series = [0] * (prec + 1)
    series[0] = 1
    for m in range(1, prec + 1):
        for _ in range(24):
            for n in range(prec, m - 1, -1):
                series[n] -= series[n - m]
    return QSeries((0,) + tuple(series[:prec]), 12)


@lru_cache(maxsize=None)
def delta_tau(prec: int) -> QSeries:
    """Delta to O(q^{prec+1}); both constructions are computed and must agree."""
    if prec < 2:
        raise PrecisionError("need prec >= 2")
    e4, e6 = eisenstein(4, prec), eisenstein(6, prec)
    diff = e4 ** 3 - e6 ** 2
    if any(c % 1728 for c in diff.coeffs):
        raise ModularFormsError("E_4^3 - E_6^2 not divisible by 1728")
    from_eisenstein = QSeries(tuple(c // 1728 for c in diff.coeffs), 12)
    from_eta = _eta_product_delta(prec)
    if from_eisenstein.coeffs != from_eta.coeffs:
        raise ModularFormsError("Delta constructions disagree")
    return from_eta


def tau(n: int) -> int:
    return delta_tau(max(n, 2))[n]


def dim_cusp_forms(k: int) -> int:
    """dim S_k(SL_2(Z)) for even k >= 0."""
    if k % 2 or k < 0:
        return 0
    if k < 12:
        return 0
    if k % 12 == 2:
        return k // 12 - 1
    return k // 12


def _eisenstein_monomial(w: int, prec: int) -> QSeries:
    """Some E_4^a E_6^b of weight w (w even, w != 2)."""
    if w == 0:
        return QSeries((1,) + (0,) * prec, 0)
    for b in (0, 1):
        if (w - 6 * b) >= 0 and (w - 6 * b) % 4 == 0:
            a = (w - 6 * b) // 4
            return eisenstein(4, prec) ** a * eisenstein(6, prec) ** b
    raise ValueError(f"no Eisenstein monomial of weight {w}")


@dataclass(frozen=True)
class CuspSpace:
    weight: int
    dimension: int
    basis: tuple  # Miller basis: basis[i] = q^{i+1} + O(q^{dimension+1})

    @property
    def prec(self) -> int:
        return self.basis[0].prec if self.basis else 0


@lru_cache(maxsize=None)
def cusp_space(k: int, prec: int) -> CuspSpace:
    if k % 2 or k < 0:
        raise ValueError("weight must be even and non-negative")
    d = dim_cusp_forms(k)
    if d == 0:
        return CuspSpace(k, 0, ())
    if prec < d + 1:
        raise PrecisionError(f"prec {prec} too small for dim {d}")
    delta = delta_tau(prec)
    rows = [list((delta ** c * _eisenstein_monomial(k - 12 * c, prec)).coeffs) for c in range(1, d + 1)]
    # rows[c-1] = q^c + ...; clear the q^1..q^d block above the diagonal
    for i in range(d - 1, -1, -1):
        for j in range(i):
            c = rows[j][i + 1]
            if c:
                rows[j] = [x - c * y for x, y in zip(rows[j], rows[i])]
    for i, row in enumerate(rows):
        assert row[i + 1] == 1 and all(row[j + 1] == 0 for j in range(d) if j != i)
        if any(isinstance(x, Fraction) and x.denominator != 1 for x in row):
            raise ModularFormsError("Miller basis not integral")
    return CuspSpace(k, d, tuple(QSeries(tuple(r), k) for r in rows))


def hecke_matrix(k: int, p: int, space: CuspSpace | None = None) -> list[list[int]]:
    """Matrix of T_p on the Miller basis; row i = coordinates of T_p(f_i)."""
    d = dim_cusp_forms(k)
    if d == 0:
        return []
    space = space or cusp_space(k, d * p + 10)
    if space.prec < d * p:
        raise PrecisionError(f"need precision {d * p}, have {space.prec}")
    mat = []
    for f in space.basis:
        row = []
        for n in range(1, d + 1):
            v = f[n * p]
            if n % p == 0:
                v += p ** (k - 1) * f[n // p]
            row.append(v)
        mat.append(row)
    return mat


def hecke_trace(k: int, p: int) -> int:
    mat = hecke_matrix(k, p)
    return sum(mat[i][i] for i in range(len(mat)))


def eichler_shimura_check(k: int, p: int) -> bool:
    """sigma_k(p) == Tr(T_p, S_{k+2}) + 1, sigma_k coming from the elliptic census."""
    from .census_g1 import sigma_k

    return sigma_k(p, k) == hecke_trace(k + 2, p) + 1
