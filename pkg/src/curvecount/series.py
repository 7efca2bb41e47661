"""Truncated Laurent series in one variable with exact rational coefficients."""
from __future__ import annotations

from fractions import Fraction


class WindowError(ValueError):
    """An exponent outside the tracked window was requested."""


class LaurentSeries:
    """Coefficients of t^lo .. t^hi; everything above ``hi`` is unknown.

    Products are only exact on the part of the window both factors can
    account for, so ``__mul__`` shrinks ``hi`` accordingly instead of silently
    pretending the dropped terms vanish.
    """

    __slots__ = ("lo", "hi", "coeffs")

    def __init__(self, coeffs: dict[int, Fraction] | None = None, lo: int = 0, hi: int = 0):
        if hi < lo:
            raise WindowError(f"empty window [{lo}, {hi}]")
        self.lo, self.hi = lo, hi
        self.coeffs: dict[int, Fraction] = {}
        for e, c in (coeffs or {}).items():
            if not lo <= e <= hi:
                raise WindowError(f"exponent {e} outside window [{lo}, {hi}]")
            if c:
                self.coeffs[e] = Fraction(c)

    @classmethod
    def monomial(cls, c, e: int, lo: int, hi: int) -> "LaurentSeries":
        return cls({e: Fraction(c)} if lo <= e <= hi else {}, lo, hi)

    @classmethod
    def laurent_polynomial(cls, coeffs: dict[int, Fraction], hi: int) -> "LaurentSeries":
        """A finite Laurent polynomial, exact up to ``hi``."""
        lo = min(coeffs, default=0)
        return cls({e: c for e, c in coeffs.items() if e <= hi}, min(lo, hi), hi)

    def __getitem__(self, e: int) -> Fraction:
        if not self.lo <= e <= self.hi:
            raise WindowError(f"exponent {e} outside window [{self.lo}, {self.hi}]")
        return self.coeffs.get(e, Fraction(0))

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        lo, hi = min(self.lo, other.lo), min(self.hi, other.hi)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentSeries({e: c for e, c in out.items() if e <= hi}, lo, hi)

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries({e: -c for e, c in self.coeffs.items()}, self.lo, self.hi)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def scale(self, c) -> "LaurentSeries":
        c = Fraction(c)
        return LaurentSeries({e: c * v for e, v in self.coeffs.items()}, self.lo, self.hi)

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        lo = self.lo + other.lo
        # a coefficient at e needs every partner term down to the other's lo
        hi = min(self.hi + other.lo, other.hi + self.lo)
        if hi < lo:
            raise WindowError("product has no exact coefficients")
        out: dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                if e <= hi:
                    out[e] = out.get(e, 0) + c1 * c2
        return LaurentSeries(out, lo, hi)

    def polymul(self, other: "LaurentSeries") -> "LaurentSeries":
        """Product when both factors are Laurent polynomials (nothing above ``hi``)."""
        out: dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentSeries(out, self.lo + other.lo, self.hi + other.hi)

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by t^k."""
        return LaurentSeries({e + k: c for e, c in self.coeffs.items()}, self.lo + k, self.hi + k)

    def truncate(self, hi: int) -> "LaurentSeries":
        if hi > self.hi:
            raise WindowError(f"cannot extend window to {hi}; only exact up to {self.hi}")
        return LaurentSeries({e: c for e, c in self.coeffs.items() if e <= hi}, self.lo, hi)

    def residue(self) -> Fraction:
        return laurent_residue(self)

    def __repr__(self) -> str:
        terms = " + ".join(f"({c})t^{e}" for e, c in sorted(self.coeffs.items()))
        return f"LaurentSeries[{self.lo},{self.hi}]({terms or '0'})"


def laurent_residue(s: LaurentSeries) -> Fraction:
    """Coefficient of t^{-1}; a window not covering -1 is an error."""
    return s[-1]
