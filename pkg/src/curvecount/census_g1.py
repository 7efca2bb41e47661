"""Elliptic curves over F_q up to F_q-isomorphism, with automorphism-weighted masses.

Models live in a normal-form family per characteristic; the subgroup of
Weierstrass substitutions (u, r, s, t) that keeps a model inside its family is
enumerated explicitly, so isomorphism classes are orbits of that subgroup and
``#Aut_{F_q}(E)`` is the size of a stabiliser.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .characters import WeilData, sl2_power_trace
from .fields import CapacityError, FiniteField, GF, embedding

DEFAULT_MAX_Q = 1024
MAX_FAMILY_SIZE = 3_000_000

Model = tuple[int, int, int, int, int]  # (a1, a2, a3, a4, a6)


class CensusConsistencyError(ArithmeticError):
    """A census-level identity that must hold exactly failed."""


@dataclass(frozen=True)
class EllipticClassRecord:
    q: int
    model: Model
    j_invariant: int
    n1: int
    aut_order: int

    @property
    def field(self) -> FiniteField:
        return GF(self.q)

    @property
    def trace(self) -> int:
        return self.q + 1 - self.n1

    @property
    def mass(self) -> Fraction:
        return Fraction(1, self.aut_order)

    @property
    def weil(self) -> WeilData:
        return WeilData(1, self.q, (self.trace,))

    def point_count(self, d: int) -> int:
        """#E(F_{q^d}) from the Frobenius trace."""
        return self.q ** d + 1 - _power_sum(self.trace, self.q, d)


def _power_sum(t: int, q: int, d: int) -> int:
    """alpha^d + alpha_bar^d."""
    prev, cur = 2, t
    if d == 0:
        return 2
    for _ in range(d - 1):
        prev, cur = cur, t * cur - q * prev
    return cur


# -- Weierstrass arithmetic ----------------------------------------------------

class _Arith:
    """Tiny helper binding a field for readable formulas."""

    def __init__(self, F: FiniteField):
        self.F = F

    def c(self, n: int) -> int:
        return self.F(n)

    def s(self, *terms) -> int:
        acc = 0
        for t in terms:
            acc = self.F.add(acc, t)
        return acc

    def m(self, *factors) -> int:
        acc = 1
        for f in factors:
            acc = self.F.mul(acc, f)
        return acc

    def n(self, x: int) -> int:
        return self.F.neg(x)


def b_invariants(F: FiniteField, model: Model) -> tuple[int, int, int, int]:
    A = _Arith(F)
    a1, a2, a3, a4, a6 = model
    b2 = A.s(A.m(a1, a1), A.m(A.c(4), a2))
    b4 = A.s(A.m(A.c(2), a4), A.m(a1, a3))
    b6 = A.s(A.m(a3, a3), A.m(A.c(4), a6))
    b8 = A.s(A.m(a1, a1, a6), A.m(A.c(4), a2, a6), A.n(A.m(a1, a3, a4)),
             A.m(a2, a3, a3), A.n(A.m(a4, a4)))
    return b2, b4, b6, b8


def discriminant(F: FiniteField, model: Model) -> int:
    A = _Arith(F)
    b2, b4, b6, b8 = b_invariants(F, model)
    return A.s(A.n(A.m(b2, b2, b8)), A.n(A.m(A.c(8), b4, b4, b4)),
               A.n(A.m(A.c(27), b6, b6)), A.m(A.c(9), b2, b4, b6))


def j_invariant(F: FiniteField, model: Model) -> int:
    A = _Arith(F)
    b2, b4, _, _ = b_invariants(F, model)
    c4 = A.s(A.m(b2, b2), A.n(A.m(A.c(24), b4)))
    delta = discriminant(F, model)
    if delta == 0:
        raise ValueError("singular model")
    return F.div(A.m(c4, c4, c4), delta)


def transform(F: FiniteField, model: Model, u: int, r: int, s: int, t: int) -> Model:
    """Apply x = u^2 x' + r, y = u^3 y' + s u^2 x' + t."""
    A = _Arith(F)
    a1, a2, a3, a4, a6 = model
    ui = F.inv(u)
    u2 = A.m(ui, ui)
    u3 = A.m(u2, ui)
    u4 = A.m(u2, u2)
    u6 = A.m(u4, u2)
    two, three = A.c(2), A.c(3)
    b1 = A.m(ui, A.s(a1, A.m(two, s)))
    b2 = A.m(u2, A.s(a2, A.n(A.m(s, a1)), A.m(three, r), A.n(A.m(s, s))))
    b3 = A.m(u3, A.s(a3, A.m(r, a1), A.m(two, t)))
    b4 = A.m(u4, A.s(a4, A.n(A.m(s, a3)), A.m(two, r, a2), A.n(A.m(A.s(t, A.m(r, s)), a1)),
                    A.m(three, r, r), A.n(A.m(two, s, t))))
    b6 = A.m(u6, A.s(a6, A.m(r, a4), A.m(r, r, a2), A.m(r, r, r), A.n(A.m(t, a3)),
                    A.n(A.m(t, t)), A.n(A.m(r, t, a1))))
    return (b1, b2, b3, b4, b6)


def count_points(F: FiniteField, model: Model, ext: FiniteField | None = None) -> int:
    """#E(K) for K = ``ext`` (default F) by direct solution counting."""
    K = ext or F
    emb = embedding(F.q, K.q)
    a1, a2, a3, a4, a6 = (int(emb[c]) for c in model)
    x = np.arange(K.q)
    x2 = K.vmul(x, x)
    x3 = K.vmul(x2, x)
    rhs = K.vadd(K.vadd(x3, K.vmul(np.full_like(x, a2), x2)),
                 K.vadd(K.vmul(np.full_like(x, a4), x), np.full_like(x, a6)))
    h = K.vadd(K.vmul(np.full_like(x, a1), x), np.full_like(x, a3))
    if K.p == 2:
        nz = h != 0
        hinv = K.inv_table[h]
        z = K.vmul(rhs, K.vmul(hinv, hinv))
        sols = np.where(nz, np.where(K.absolute_trace[z] == 0, 2, 0), 1)
    else:
        four = K(4)
        disc = K.vadd(K.vmul(h, h), K.vmul(np.full_like(x, four), rhs))
        sols = 1 + K.quadratic_character[disc]
    return int(sols.sum()) + 1


# -- families ----------------------------------------------------------------

def _family(F: FiniteField):
    """Yield (models, group) pairs covering every isomorphism class exactly once."""
    q, p = F.q, F.p
    units = range(1, q)
    if p > 3:
        models = [(0, 0, 0, a, b) for a in range(q) for b in range(q)]
        group = [(u, 0, 0, 0) for u in units]
        yield models, group
    elif p == 3:
        models = [(0, a2, 0, a4, a6) for a2 in range(q) for a4 in range(q) for a6 in range(q)]
        group = [(u, r, 0, 0) for u in units for r in range(q)]
        yield models, group
    else:
        # j != 0: y^2 + xy = x^3 + a2 x^2 + a6
        models = [(1, a2, 0, 0, a6) for a2 in range(q) for a6 in range(q)]
        group = [(1, 0, s, 0) for s in range(q)]
        yield models, group
        # j == 0: y^2 + a3 y = x^3 + a4 x + a6
        models = [(0, 0, a3, a4, a6) for a3 in units for a4 in range(q) for a6 in range(q)]
        group = [(u, F.mul(s, s), s, t) for u in units for s in range(q) for t in range(q)]
        yield models, group


def _check_capacity(F: FiniteField, max_q: int) -> None:
    if F.q > max_q:
        raise CapacityError(f"q={F.q} exceeds the census bound {max_q}")
    size = {2: (F.q - 1) * F.q ** 2, 3: F.q ** 3}.get(F.p, F.q ** 2)
    if size > MAX_FAMILY_SIZE:
        raise CapacityError(f"normal-form family for q={F.q} has {size} models")


@lru_cache(maxsize=None)
def enumerate_elliptic(q: int, max_q: int = DEFAULT_MAX_Q) -> tuple[EllipticClassRecord, ...]:
    """One record per F_q-isomorphism class of elliptic curves, sorted by (j, model)."""
    F = GF(q)
    _check_capacity(F, max_q)
    records = []
    for models, group in _family(F):
        seen: set[Model] = set()
        for model in models:
            if model in seen or discriminant(F, model) == 0:
                continue
            orbit = {transform(F, model, *g) for g in group}
            seen |= orbit
            if len(group) % len(orbit):
                raise CensusConsistencyError(f"orbit of {model} does not divide the group")
            aut = len(group) // len(orbit)
            rep = min(orbit)
            records.append(EllipticClassRecord(q, rep, j_invariant(F, rep), count_points(F, rep), aut))
    records.sort(key=lambda r: (r.j_invariant, r.model))
    return tuple(records)


def total_mass(records) -> Fraction:
    return sum((r.mass for r in records), Fraction(0))


def frequency_table(records) -> dict[int, Fraction]:
    """Point count N_1 -> summed mass 1/#Aut."""
    freq: dict[int, Fraction] = defaultdict(Fraction)
    for r in records:
        freq[r.n1] += r.mass
    return dict(sorted(freq.items()))


def j_bucket_masses(records) -> dict[int, Fraction]:
    out: dict[int, Fraction] = defaultdict(Fraction)
    for r in records:
        out[r.j_invariant] += r.mass
    return dict(out)


@lru_cache(maxsize=None)
def trace_masses(q: int) -> tuple[tuple[int, Fraction], ...]:
    """Frobenius trace -> total mass, the only census data sigma_k needs."""
    out: dict[int, Fraction] = defaultdict(Fraction)
    for r in enumerate_elliptic(q):
        out[r.trace] += r.mass
    return tuple(sorted(out.items()))


def sigma_k(q: int, k: int) -> int:
    """sigma_k(q) = -sum_E h_k(alpha_E, alpha_bar_E) / #Aut_{F_q}(E)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k % 2:
        return 0
    total = -sum((m * sl2_power_trace(k, t, q) for t, m in trace_masses(q)), Fraction(0))
    if total.denominator != 1:
        raise CensusConsistencyError(f"sigma_{k}({q}) = {total} is not an integer")
    return int(total)


def exact_degree_counts(record: EllipticClassRecord, d_max: int = 6, direct: bool = False) -> dict[int, int]:
    """Number of points of exact degree d over F_q, for d = 1..d_max.

    With ``direct`` the counts over F_{q^D} come from solving the equation in
    the extension field instead of from the Frobenius trace.
    """
    if direct:
        if d_max > 6:
            raise CapacityError("direct exact-degree counts are limited to d <= 6")
        F = GF(record.q)
        totals = {D: count_points(F, record.model, GF(record.q ** D)) for D in range(1, d_max + 1)}
    else:
        totals = {D: record.point_count(D) for D in range(1, d_max + 1)}
    exact: dict[int, int] = {}
    for d in range(1, d_max + 1):
        exact[d] = totals[d] - sum(exact[e] for e in range(1, d) if d % e == 0)
    return exact


def geometric_aut_orders(q: int) -> dict[int, int]:
    """j -> largest F_q-automorphism group order among the twists with that j."""
    out: dict[int, int] = {}
    for r in enumerate_elliptic(q):
        out[r.j_invariant] = max(out.get(r.j_invariant, 0), r.aut_order)
    return out
