"""Genus-2 census over F_q keyed by Weil parameters, and the degree-2 trace engine.

Odd q: every binary sextic with nonzero discriminant is visited once.  The
group GL_2(F_q) x F_q^* acts through (M, mu): f -> mu^{-2} f o M, and
(lambda I, lambda^3) acts trivially on the curve, so the stacky mass of a
single form is 1 / #GL_2(F_q).

q = 2^m: models y^2 + h y = f.  The shifts y -> y + e (e a binary cubic)
send f to f + e h + e^2; for fixed h that map is F_2-linear with kernel
{0, h}, so one coset representative per class of f stands for q^4 / 2
pairs, and h only matters up to its GL_2 x F_q^* orbit (its root pattern).
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import calibration
from .census_g1 import trace_masses
from .characters import WeilData, sp4_character_numeric
from .fields import CapacityError, FiniteField, GF, embedding
from .hyperelliptic import HyperellipticModel
from .modforms import dim_cusp_forms

MAX_ODD_Q = 37
CHUNK = 1 << 15

WeilKey = tuple[int, int]


class CalibrationError(RuntimeError):
    pass


def gl2_order(q: int) -> int:
    return (q * q - 1) * (q * q - q)


def weil_key_admissible(q: int, a1: int, a2: int) -> bool:
    """Necessary and sufficient conditions for t^4 - a1 t^3 + a2 t^2 - q a1 t + q^2
    to have all roots of absolute value sqrt(q), in exact integer form."""
    if a1 * a1 > 16 * q:
        return False
    if 4 * a2 > a1 * a1 + 8 * q:
        return False
    if a2 + 2 * q < 0:
        return False
    return 4 * q * a1 * a1 <= (a2 + 2 * q) ** 2


def key_from_counts(q: int, n1: int, n2: int) -> WeilKey:
    s1 = q + 1 - n1
    s2 = q * q + 1 - n2
    if (s1 * s1 - s2) % 2:
        raise ArithmeticError(f"odd a_2 numerator from counts ({n1}, {n2})")
    return s1, (s1 * s1 - s2) // 2


@dataclass(frozen=True)
class SexticOrbitMass:
    q: int
    masses: tuple[tuple[WeilKey, Fraction], ...]

    def as_dict(self) -> dict[WeilKey, Fraction]:
        return dict(self.masses)

    @property
    def total(self) -> Fraction:
        return sum((m for _, m in self.masses), Fraction(0))


# -- vectorised evaluation of binary forms -------------------------------------

class _FormEvaluator:
    """Values of forms with F_q coefficients at every x in K = F_{q^k}.

    Forms arrive as digit matrices over F_p (coefficient i, digit j at column
    i*m + j); evaluation is then one integer matrix product.
    """

    def __init__(self, q: int, k: int, degree: int, derivative: bool = False):
        F, K = GF(q), GF(q ** k)
        self.F, self.K = F, K
        emb = embedding(q, q ** k)
        basis = [int(emb[F.p ** j]) for j in range(F.m)]
        rows = []
        for i in range(degree + 1):
            for e in basis:
                vals = []
                for x in range(K.q):
                    if derivative:
                        v = K.mul(K.mul(K(i), e), K.pow(x, i - 1)) if i and K(i) else 0
                    else:
                        v = K.mul(e, K.pow(x, i)) if (x or i) else e
                    vals.append(K.digits[v])
                rows.append(np.concatenate(vals))
        self.matrix = np.array(rows, dtype=np.float64)
        self.powers = K.p ** np.arange(K.m, dtype=np.int64)

    def __call__(self, form_digits: np.ndarray) -> np.ndarray:
        raw = form_digits.astype(np.float64) @ self.matrix
        dig = np.rint(raw).astype(np.int64) % self.K.p
        dig = dig.reshape(len(form_digits), self.K.q, self.K.m)
        return dig @ self.powers


def _form_digits(F: FiniteField, coeffs: np.ndarray) -> np.ndarray:
    """(B, n) coefficient codes -> (B, n*m) F_p digits."""
    d = F.digits[coeffs]  # (B, n, m)
    return d.reshape(len(coeffs), -1)


@dataclass
class SexticChunk:
    coeffs: np.ndarray  # (B, 7) codes of c_0..c_6 for squarefree forms only
    n1: np.ndarray
    n2: np.ndarray


def iter_sextic_chunks(q: int, chunk: int = CHUNK):
    """Squarefree binary sextics over odd F_q with their point counts."""
    F = GF(q)
    if F.p == 2:
        raise ValueError("odd characteristic only; use the char-2 census")
    if q > MAX_ODD_Q:
        raise CapacityError(f"genus-2 census bound is q <= {MAX_ODD_Q}")
    K2, K3 = GF(q ** 2), GF(q ** 3)
    ev1 = _FormEvaluator(q, 1, 6)
    ev2, ev2d = _FormEvaluator(q, 2, 6), _FormEvaluator(q, 2, 6, True)
    ev3, ev3d = _FormEvaluator(q, 3, 6), _FormEvaluator(q, 3, 6, True)
    chi1, chi2 = F.quadratic_character, K2.quadratic_character
    total = q ** 7
    place = q ** np.arange(7, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        coeffs = (idx[:, None] // place) % q
        # repeated root at infinity
        keep = (coeffs[:, 6] != 0) | (coeffs[:, 5] != 0)
        coeffs = coeffs[keep]
        digits = _form_digits(F, coeffs)
        v2 = ev2(digits)
        bad = ((v2 == 0) & (ev2d(digits) == 0)).any(axis=1)
        bad |= ((ev3(digits) == 0) & (ev3d(digits) == 0)).any(axis=1)
        coeffs, digits, v2 = coeffs[~bad], digits[~bad], v2[~bad]
        if not len(coeffs):
            continue
        v1 = ev1(digits)
        c6 = coeffs[:, 6]
        n1 = (1 + chi1[v1]).sum(axis=1) + 1 + chi1[c6]
        n2 = (1 + chi2[v2]).sum(axis=1) + np.where(c6 != 0, 2, 1)
        yield SexticChunk(coeffs, n1, n2)


@lru_cache(maxsize=None)
def enumerate_g2(q: int) -> SexticOrbitMass:
    F = GF(q)
    if F.p == 2:
        return enumerate_g2_char2(q).orbit_mass()
    counts: Counter = Counter()
    n_forms = 0
    for ch in iter_sextic_chunks(q):
        n_forms += len(ch.coeffs)
        s1 = q + 1 - ch.n1
        s2 = q * q + 1 - ch.n2
        a2 = (s1 * s1 - s2) // 2
        keys, mult = np.unique(np.stack([s1, a2], axis=1), axis=0, return_counts=True)
        for (k1, k2), c in zip(keys.tolist(), mult.tolist()):
            counts[(k1, k2)] += c
    expected = (q - 1) * q ** 4 * (q * q - 1)
    if n_forms != expected:
        raise ArithmeticError(f"found {n_forms} squarefree sextics, expected {expected}")
    order = gl2_order(q)
    masses = tuple(sorted((k, Fraction(c, order)) for k, c in counts.items()))
    for (a1, a2), _ in masses:
        if not weil_key_admissible(q, a1, a2):
            raise ArithmeticError(f"inadmissible Weil key {(a1, a2)} over F_{q}")
    return SexticOrbitMass(q, masses)


# -- brute-force automorphisms (oracle) ----------------------------------------

def _substitution_matrices(F: FiniteField, degree: int):
    """For each M in GL_2(F_q): the matrix of f -> f o M on coefficient vectors."""
    out = []
    for a, b, c, d in np.ndindex(F.q, F.q, F.q, F.q):
        det = F.sub(F.mul(a, d), F.mul(b, c))
        if det == 0:
            continue
        # (a x + b z)^i (c x + d z)^{deg - i}, expanded in x^j z^{deg-j}
        lin1, lin2 = [b, a], [d, c]
        cols = []
        for i in range(degree + 1):
            poly = [1]
            for _ in range(i):
                poly = _pmul(F, poly, lin1)
            for _ in range(degree - i):
                poly = _pmul(F, poly, lin2)
            cols.append(poly + [0] * (degree + 1 - len(poly)))
        out.append(((a, b, c, d), cols))
    return out


def _pmul(F: FiniteField, x, y):
    out = [0] * (len(x) + len(y) - 1)
    for i, u in enumerate(x):
        for j, v in enumerate(y):
            out[i + j] = F.add(out[i + j], F.mul(u, v))
    return out


def _apply(F: FiniteField, cols, f, scale: int):
    out = [0] * len(f)
    for i, fi in enumerate(f):
        if fi:
            for j, cij in enumerate(cols[i]):
                out[j] = F.add(out[j], F.mul(fi, cij))
    return tuple(F.mul(scale, v) for v in out)


def aut_bruteforce_g2(f, q: int) -> int:
    """#Aut_{F_q} of y^2 = f(x, z) (odd q <= 9) by exhaustive substitution search.

    Automorphisms are pairs (M, mu) with mu^{-2} f o M = f, modulo the
    q - 1 pairs (lambda I, lambda^3) that act trivially.
    """
    F = GF(q)
    if q > 9 or F.p == 2:
        raise CapacityError("aut_bruteforce_g2 supports odd q <= 9")
    f = tuple(f) + (0,) * (7 - len(f))
    hits = 0
    for _, cols in _g2_substitutions(q):
        g = _apply(F, cols, f, 1)
        for mu in range(1, q):
            if tuple(F.mul(F.inv(F.mul(mu, mu)), v) for v in g) == f:
                hits += 1
    return hits // (q - 1)


@lru_cache(maxsize=None)
def _g2_substitutions(q: int):
    return tuple(_substitution_matrices(GF(q), 6))


def classes_by_bruteforce(q: int) -> dict[WeilKey, Fraction]:
    """Per-key sum of 1/#Aut over explicit isomorphism classes (odd q <= 5)."""
    F = GF(q)
    if q > 5:
        raise CapacityError("explicit class enumeration is limited to q <= 5")
    subs = _g2_substitutions(q)
    seen: set = set()
    out: dict[WeilKey, Fraction] = defaultdict(Fraction)
    for ch in iter_sextic_chunks(q):
        for coeffs, n1, n2 in zip(ch.coeffs.tolist(), ch.n1.tolist(), ch.n2.tolist()):
            f = tuple(coeffs)
            if f in seen:
                continue
            for _, cols in subs:
                g = _apply(F, cols, f, 1)
                for mu in range(1, q):
                    seen.add(tuple(F.mul(F.inv(F.mul(mu, mu)), v) for v in g))
            out[key_from_counts(q, n1, n2)] += Fraction(1, aut_bruteforce_g2(f, q))
    return dict(out)


# -- characteristic 2 --------------------------------------------------------

@dataclass(frozen=True)
class Char2Census:
    q: int
    rows: tuple  # (h, f, h_pattern, weight, n1, n2)

    def orbit_mass(self) -> SexticOrbitMass:
        order = gl2_order(self.q) * self.q ** 4
        out: Counter = Counter()
        for h, f, pattern, weight, n1, n2 in self.rows:
            out[key_from_counts(self.q, n1, n2)] += Fraction(weight, order)
        return SexticOrbitMass(self.q, tuple(sorted(out.items())))

    def models(self):
        for h, f, pattern, weight, n1, n2 in self.rows:
            yield HyperellipticModel(self.q, 2, f, h), pattern, Fraction(weight, gl2_order(self.q) * self.q ** 4)

    @property
    def total(self) -> Fraction:
        return self.orbit_mass().total


def root_pattern(F: FiniteField, h) -> tuple[tuple[int, int], ...]:
    """Sorted (degree, multiplicity) of each Galois orbit of roots of a binary form."""
    deg = len(h) - 1
    orbits = []
    for k in range(1, deg + 1):
        tally: Counter = Counter()
        K = GF(F.q ** k)
        emb = embedding(F.q, K.q)
        hk = [int(emb[c]) for c in h]
        for x in range(K.q):
            if _exact_degree(K, x, F.q) != k:
                continue
            m = _root_multiplicity(K, hk, x)
            if m:
                tally[m] += 1
        for m, n in tally.items():
            orbits += [(k, m)] * (n // k)
    m_inf = 0
    for c in reversed(h):
        if c:
            break
        m_inf += 1
    if m_inf:
        orbits.append((1, m_inf))
    return tuple(sorted(orbits))


def _exact_degree(K: FiniteField, x: int, q: int) -> int:
    y, d = K.pow(x, q), 1
    while y != x:
        y = K.pow(y, q)
        d += 1
    return d


def _root_multiplicity(K: FiniteField, coeffs, x: int) -> int:
    m = 0
    poly = list(coeffs)
    while len(poly) > 1 and K.eval_poly(poly, x) == 0:
        m += 1
        # synthetic division by (X - x)
        out = [0] * (len(poly) - 1)
        acc = 0
        for i in range(len(poly) - 1, 0, -1):
            acc = K.add(K.mul(acc, x), poly[i])
            out[i - 1] = acc
        poly = out
    return m


def _f2_rank_basis(vectors: list[int]) -> dict[int, int]:
    """Row-reduce bit vectors; returns pivot bit -> reduced vector."""
    pivots: dict[int, int] = {}
    for v in vectors:
        for bit in sorted(pivots, reverse=True):
            if v >> bit & 1:
                v ^= pivots[bit]
        if v:
            top = v.bit_length() - 1
            for bit in list(pivots):
                if pivots[bit] >> top & 1:
                    pivots[bit] ^= v
            pivots[top] = v
    return pivots


@lru_cache(maxsize=None)
def enumerate_g2_char2(q: int) -> Char2Census:
    F = GF(q)
    if F.p != 2 or q > 8:
        raise CapacityError("characteristic-2 genus-2 census supports q in {2, 4, 8}")
    m = F.m

    def to_bits(poly):
        return sum(int(c) << (i * m) for i, c in enumerate(poly))

    def from_bits(v, n):
        return tuple((v >> (i * m)) & (q - 1) for i in range(n))

    # one h per root pattern, with the number of cubics sharing that pattern
    reps: dict[tuple, tuple] = {}
    sizes: Counter = Counter()
    for code in range(1, q ** 4):
        h = tuple((code // q ** i) % q for i in range(4))
        pat = root_pattern(F, h)
        sizes[pat] += 1
        reps.setdefault(pat, h)
    rows = []
    shift_weight = q ** 4 // 2
    for pat, h in sorted(reps.items()):
        image = []
        for i in range(4):
            for j in range(m):
                e = [0] * 4
                e[i] = 1 << j
                eh = _pmul(F, e, list(h))
                e2 = _pmul(F, e, e)
                image.append(to_bits([F.add(a, b) for a, b in zip(eh + [0] * 7, e2 + [0] * 7)][:7]))
        pivots = _f2_rank_basis(image)
        if len(pivots) != 4 * m - 1:
            raise ArithmeticError("shift map should have a kernel of order 2")
        free = [b for b in range(7 * m) if b not in pivots]
        for mask in range(1 << len(free)):
            v = sum(1 << b for i, b in enumerate(free) if mask >> i & 1)
            f = from_bits(v, 7)
            model = HyperellipticModel(q, 2, f, h)
            if not model.is_smooth():
                continue
            n1, n2 = model.point_counts(2)
            rows.append((h, f, pat, sizes[pat] * shift_weight, n1, n2))
    census = Char2Census(q, tuple(rows))
    if census.total != q ** 3:
        raise ArithmeticError(f"char-2 genus-2 mass {census.total} != q^3")
    return census


# -- sigma_{a,b} ----------------------------------------------------------------

def _character(a: int, b: int, a1: int, a2: int, q: int) -> int:
    return sp4_character_numeric(a, b, a1, a2, q)


def m2_sum(q: int, a: int, b: int) -> Fraction:
    table = enumerate_g2(q)
    return sum((mass * _character(a, b, a1, a2, q) for (a1, a2), mass in table.masses), Fraction(0))


def a11_contribution(q: int, a: int, b: int) -> int:
    """Products of elliptic curves: half of ordered pairs plus Weil restrictions."""
    g1 = trace_masses(q)
    total = Fraction(0)
    for t1, w1 in g1:
        for t2, w2 in g1:
            total += w1 * w2 * _character(a, b, t1 + t2, t1 * t2 + 2 * q, q)
    for s, w in trace_masses(q * q):
        total += w * _character(a, b, 0, -s, q)
    total /= 2
    if total.denominator != 1:
        raise ArithmeticError(f"A_11 contribution {total} is not integral")
    return int(total)


@dataclass(frozen=True)
class SigmaABReport:
    a: int
    b: int
    q: int
    value: int
    m2_part: Fraction
    a11_part: int


def sigma_ab(q: int, a: int, b: int) -> SigmaABReport:
    if b < 0 or a < b:
        raise ValueError(f"need a >= b >= 0, got ({a}, {b})")
    if (a + b) % 2:
        return SigmaABReport(a, b, q, 0, Fraction(0), 0)
    sign = current_calibration().sign
    if sign not in (1, -1):
        raise CalibrationError("sigma_{a,b} sign is not calibrated")
    m2 = m2_sum(q, a, b)
    a11 = a11_contribution(q, a, b)
    total = sign * (m2 + a11)
    if total.denominator != 1:
        raise ArithmeticError(f"sigma_{a},{b}({q}) = {total} is not integral")
    return SigmaABReport(a, b, q, int(total), m2, a11)


# -- correction terms and traces -------------------------------------------------

SELECTORS = ("top", "bottom", "top-if-a-even", "top-if-a-odd")


@dataclass(frozen=True)
class Calibration:
    sign: int
    selector: str
    shift: int
    s2: int = 0  # value used for dim S_2, which only enters when a == b

    def dim(self, k: int) -> int:
        return self.s2 if k == 2 else dim_cusp_forms(k)


def current_calibration() -> Calibration:
    return Calibration(calibration.SIGMA_AB_SIGN, calibration.BRACE_SELECTOR,
                       calibration.G1_INDEX_SHIFT, calibration.DIM_S2)


def _sigma1(p: int, k: int, shift: int) -> int:
    """Genus-1 ingredient sigma_{k + shift}(p); negative indices do not occur."""
    from .census_g1 import sigma_k

    k += shift
    if k < 0:
        raise ValueError(f"genus-1 index {k} out of range")
    return sigma_k(p, k)


def brace_term(p: int, a: int, b: int, cal: Calibration | None = None) -> int:
    cal = cal or current_calibration()
    if cal.selector not in SELECTORS:
        raise CalibrationError(f"unknown brace selector {cal.selector!r}")
    top = cal.selector == "top" or (cal.selector == "top-if-a-even" and a % 2 == 0) or (
        cal.selector == "top-if-a-odd" and a % 2 == 1)
    if top:
        return _sigma1(p, b + 2, cal.shift)
    return 1 - _sigma1(p, a + 3, cal.shift)


def c_ab(p: int, a: int, b: int, cal: Calibration | None = None) -> int:
    cal = cal or current_calibration()
    s = cal.dim
    return (s(a - b + 2) - s(a + b + 4) * _sigma1(p, a - b + 2, cal.shift) * p ** (b + 1)
            + brace_term(p, a, b, cal))


def degree2_weight_to_ab(j: int, k: int) -> tuple[int, int]:
    if k < 3 or j < 0:
        raise ValueError("need j >= 0 and k >= 3")
    return j + k - 3, k - 3


def trace_degree2(p: int, j: int, k: int, cal: Calibration | None = None) -> int:
    """Tr(T_p, S_{j,k}) for Siegel cusp forms of degree 2, level 1."""
    a, b = degree2_weight_to_ab(j, k)
    if (a + b) % 2:
        return 0
    cal = cal or current_calibration()
    raw = m2_sum(p, a, b) + a11_contribution(p, a, b)
    return int(cal.sign * raw) + c_ab(p, a, b, cal)


def calibrate(anchors) -> list[Calibration]:
    """All (sign, selector, shift) choices reproducing every ((p, j, k), value) anchor."""
    raw = {}
    for (p, j, k), _ in anchors:
        a, b = degree2_weight_to_ab(j, k)
        raw[(p, j, k)] = m2_sum(p, a, b) + a11_contribution(p, a, b)
    hits = []
    for sign in (1, -1):
        for selector in SELECTORS:
            for shift, s2 in ((0, 0), (0, -1), (-2, 0), (-2, -1)):
                cal = Calibration(sign, selector, shift, s2)
                if all(int(sign * raw[key]) + c_ab(key[0], *degree2_weight_to_ab(*key[1:]), cal) == v
                       for key, v in anchors):
                    hits.append(cal)
    return hits


def c_abc(p: int, a: int, b: int, c: int, cal: Calibration | None = None) -> int:
    if not a >= b >= c >= 0:
        raise ValueError(f"need a >= b >= c >= 0, got ({a}, {b}, {c})")
    cal = cal or current_calibration()

    def s2(x, y):
        return sigma_ab(p, x, y).value

    def s1(k):
        return _sigma1(p, k, cal.shift)

    def cc(x, y):
        return c_ab(p, x, y, cal)

    return (-s2(a + 1, b + 1) + s2(a + 1, c) - s2(b, c)
            - cc(a + 1, b + 1) * s1(c + 2) + cc(a + 1, c) * s1(b + 3) - cc(b, c) * s1(a + 4)
            + cc(a + 1, b + 1) - cc(a + 1, c) + cc(b, c))


def degree3_weight_to_abc(i: int, j: int, k: int) -> tuple[int, int, int]:
    c = k - 4
    b = j + c
    return i + b, b, c


def trace_degree3(p: int, i: int, j: int, k: int, sigma_abc: dict) -> int:
    """Tr(T_p, S_{i,j,k}) given an ingested table (p, a, b, c) -> sigma_{a,b,c}(p)."""
    a, b, c = degree3_weight_to_abc(i, j, k)
    try:
        value = sigma_abc[(p, a, b, c)]
    except KeyError:
        raise KeyError(f"no ingested sigma_{a},{b},{c}({p})") from None
    return value + c_abc(p, a, b, c)
