"""Scalar models of hyperelliptic and Artin-Schreier curves.

``HyperellipticModel`` is y^2 + h(x) y = f(x) with h, f binary forms of
degrees g+1 and 2g+2 (coefficient tuples low -> high in x); in odd
characteristic h is zero.  Point counts include the points over z = 0.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

from .characters import WeilData
from .fields import FiniteField, GF, embedding


def _lift(F: FiniteField, K: FiniteField, coeffs) -> list[int]:
    emb = embedding(F.q, K.q)
    return [int(emb[c]) for c in coeffs]


def _deriv(K: FiniteField, coeffs: list[int]) -> list[int]:
    return [K.mul(K(i), c) if K(i) else 0 for i, c in enumerate(coeffs)][1:] or [0]


@dataclass(frozen=True)
class HyperellipticModel:
    q: int
    genus: int
    f: tuple[int, ...]
    h: tuple[int, ...] = ()

    def __post_init__(self):
        g = self.genus
        f = tuple(self.f) + (0,) * (2 * g + 3 - len(self.f))
        h = tuple(self.h) + (0,) * (g + 2 - len(self.h)) if self.h else ()
        if len(f) > 2 * g + 3 or any(f[2 * g + 3:]):
            raise ValueError("f has degree above 2g+2")
        object.__setattr__(self, "f", f[: 2 * g + 3])
        object.__setattr__(self, "h", h[: g + 2] if h else ())
        F = self.field
        if F.p == 2 and not any(self.h):
            raise ValueError("characteristic 2 needs h != 0")
        if F.p != 2 and any(self.h):
            raise ValueError("use y^2 = f in odd characteristic")

    @property
    def field(self) -> FiniteField:
        return GF(self.q)

    @property
    def p(self) -> int:
        return self.field.p

    def reversed(self) -> "HyperellipticModel":
        """The chart at x = infinity: x -> 1/x."""
        g = self.genus
        return HyperellipticModel(self.q, g, self.f[: 2 * g + 3][::-1],
                                  self.h[: g + 2][::-1] if self.h else ())

    # -- smoothness ------------------------------------------------------------
    def is_smooth(self) -> bool:
        # a singular point sits over a repeated root of f (odd p) or a root of
        # h (p = 2); either has degree <= g+1 over F_q
        at_infinity = self.reversed()
        for k in range(1, self.genus + 2):
            K = GF(self.q ** k)
            if not self._affine_smooth(K):
                return False
        return at_infinity._affine_smooth_at_zero(self.field)

    def _affine_smooth_at_zero(self, K: FiniteField) -> bool:
        return self._smooth_at(K, 0)

    def _affine_smooth(self, K: FiniteField) -> bool:
        return all(self._smooth_at(K, x) for x in range(K.q))

    def _smooth_at(self, K: FiniteField, x: int) -> bool:
        f = _lift(self.field, K, self.f[: 2 * self.genus + 3])
        if self.p != 2:
            return K.eval_poly(f, x) != 0 or K.eval_poly(_deriv(K, f), x) != 0
        h = _lift(self.field, K, self.h)
        if K.eval_poly(h, x) != 0:
            return True
        hd = K.eval_poly(_deriv(K, h), x)
        fv = K.eval_poly(f, x)
        fd = K.eval_poly(_deriv(K, f), x)
        return K.add(K.mul(K.mul(hd, hd), fv), K.mul(fd, fd)) != 0

    # -- point counts ----------------------------------------------------------
    def points_over(self, K: FiniteField) -> int:
        g = self.genus
        f = _lift(self.field, K, self.f)
        h = _lift(self.field, K, self.h) if self.h else []
        total = 0
        for x in range(K.q):
            total += _fibre(K, K.eval_poly(h, x) if h else 0, K.eval_poly(f, x))
        total += _fibre(K, h[g + 1] if h else 0, f[2 * g + 2])
        return total

    def point_counts(self, n: int | None = None) -> list[int]:
        n = n or self.genus
        return [self.points_over(GF(self.q ** d)) for d in range(1, n + 1)]

    @property
    def weil(self) -> WeilData:
        return WeilData.from_point_counts(self.q, self.point_counts())

    def __str__(self) -> str:
        left = "y^2" + ("" if not self.h else f" + ({_poly_str(self.h)})y")
        return f"{left} = {_poly_str(self.f)}"


def _fibre(K: FiniteField, hv: int, fv: int) -> int:
    """Number of y in K with y^2 + hv y = fv."""
    if K.p != 2:
        return 1 + int(K.quadratic_character[fv])
    if hv == 0:
        return 1
    z = K.div(fv, K.mul(hv, hv))
    return 2 if K.absolute_trace[z] == 0 else 0


def _poly_str(coeffs, var: str = "x") -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        terms.append(f"{c}" if not mono else (mono if c == 1 else f"{c}*{mono}"))
    return " + ".join(terms) or "0"


# -- Artin-Schreier type models ------------------------------------------------

_TERM = re.compile(r"^(?:(\d+)\*?)?([xy])(?:\^\{?(\d+)\}?)?$|^(\d+)$")


def _parse_side(text: str) -> dict[str, dict[int, int]]:
    out: dict[str, dict[int, int]] = {"x": {}, "y": {}}
    for raw in text.replace(" ", "").replace("-", "+-").split("+"):
        if not raw:
            continue
        sign = -1 if raw.startswith("-") else 1
        raw = raw.lstrip("-")
        m = _TERM.match(raw)
        if not m:
            raise ValueError(f"cannot parse term {raw!r}")
        if m.group(4) is not None:
            out["x"][0] = out["x"].get(0, 0) + sign * int(m.group(4))
            continue
        coef = int(m.group(1) or 1) * sign
        var = m.group(2)
        exp = int(m.group(3) or 1)
        out[var][exp] = out[var].get(exp, 0) + coef
    return out


@dataclass(frozen=True)
class PlaneModel:
    """sum_i b_i y^i = sum_j c_j x^j over F_p, with sparse integer coefficients.

    The shape used for Artin-Schreier curves, where the left side is an
    additive (p-linearised) polynomial in y.
    """

    p: int
    y_side: tuple[tuple[int, int], ...]
    x_side: tuple[tuple[int, int], ...]

    @classmethod
    def parse(cls, p: int, text: str) -> "PlaneModel":
        left, right = text.split("=")
        lhs, rhs = _parse_side(left), _parse_side(right)
        if lhs["x"] or rhs["y"]:
            raise ValueError("expected y-terms on the left and x-terms on the right")
        y = tuple(sorted((e, c % p) for e, c in lhs["y"].items() if c % p))
        x = tuple(sorted((e, c % p) for e, c in rhs["x"].items() if c % p))
        return cls(p, y, x)

    def __str__(self) -> str:
        def side(terms, var):
            parts = []
            for e, c in sorted(terms, reverse=True):
                mono = "1" if e == 0 else (var if e == 1 else f"{var}^{{{e}}}" if e >= 10 else f"{var}^{e}")
                parts.append(mono if c == 1 else f"{c}{mono}")
            return "+".join(parts)
        return f"{side(self.y_side, 'y')} = {side(self.x_side, 'x')}"

    def is_additive_in_y(self) -> bool:
        return all(_is_power(e, self.p) for e, _ in self.y_side)

    def points_over(self, K: FiniteField) -> int:
        """Affine points plus the single point at infinity (totally ramified)."""
        if not self.is_additive_in_y():
            raise ValueError("point counting needs an additive left-hand side")
        image = _additive_image_counts(K, self.y_side)
        total = 1
        for x in range(K.q):
            c = 0
            for e, coef in self.x_side:
                c = K.add(c, K.mul(coef % K.p, K.pow(x, e)))
            total += int(image[c])
        return total

    def point_counts(self, n: int) -> list[int]:
        return [self.points_over(GF(self.p ** d)) for d in range(1, n + 1)]


def _is_power(e: int, p: int) -> bool:
    while e > 1 and e % p == 0:
        e //= p
    return e == 1


def _additive_image_counts(K: FiniteField, y_side) -> np.ndarray:
    counts = np.zeros(K.q, dtype=np.int64)
    for y in range(K.q):
        v = 0
        for e, coef in y_side:
            v = K.add(v, K.mul(coef % K.p, K.pow(y, e)))
        counts[v] += 1
    return counts


@dataclass
class SupersingularCandidate:
    model: object
    genus: int
    status: str  # "verified" or "claimed"
    slopes: tuple = field(default=())
