"""Characteristic-p invariants of curves: Cartier matrices, p-rank, a-number,
Newton polygons, supersingular constructors and a-number bounds.

Cartier convention: with a basis omega_1..omega_g of regular differentials,
V(omega_j) = sum_i M[i][j]^{1/p} omega_i.  Ranks are unaffected by the
coefficient twist, and V^g has the rank of M^{(p^{g-1})} ... M^{(p)} M,
where M^{(p^k)} raises every entry to the p^k-th power.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from .census_g1 import EllipticClassRecord, b_invariants
from .characters import WeilData
from .fields import FiniteField, GF
from .hyperelliptic import HyperellipticModel, PlaneModel, SupersingularCandidate

MAX_VERIFY_GENUS = 4


class UnsupportedModel(ValueError):
    pass


# -- linear algebra over F_q ---------------------------------------------------

def rank(F: FiniteField, rows) -> int:
    m = [list(r) for r in rows]
    if not m:
        return 0
    r = 0
    ncols = len(m[0])
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = F.inv(m[r][c])
        m[r] = [F.mul(inv, x) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                k = m[i][c]
                m[i] = [F.sub(x, F.mul(k, y)) for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def matmul(F: FiniteField, A, B):
    n, k, m = len(A), len(B), len(B[0])
    return [[F.sum(F.mul(A[i][t], B[t][j]) for t in range(k)) for j in range(m)] for i in range(n)]


def twist(F: FiniteField, A, e: int):
    return [[F.pow(x, e) for x in row] for row in A]


def stable_rank(F: FiniteField, M) -> int:
    g = len(M)
    if g == 0:
        return 0
    prod = M
    for k in range(1, g):
        prod = matmul(F, twist(F, M, F.p ** k), prod)
    return rank(F, prod)


# -- Cartier matrices ----------------------------------------------------------

def _poly_pow(F: FiniteField, f, e: int):
    out = [1]
    for _ in range(e):
        nxt = [0] * (len(out) + len(f) - 1)
        for i, a in enumerate(out):
            if a:
                for j, b in enumerate(f):
                    if b:
                        nxt[i + j] = F.add(nxt[i + j], F.mul(a, b))
        out = nxt
    return out


def cartier_matrix(model: HyperellipticModel):
    F, g = model.field, model.genus
    if F.p != 2:
        # omega_j = x^{j-1} dx / y; entries are coefficients of x^{ip-j} in f^{(p-1)/2}
        w = _poly_pow(F, list(model.f), (F.p - 1) // 2)

        def coef(n):
            return w[n] if 0 <= n < len(w) else 0

        return [[coef(i * F.p - j) for j in range(1, g + 1)] for i in range(1, g + 1)]
    # omega_j = x^j dx / h; entries are coefficients of x^{2i+1} in x^j h
    h = list(model.h)

    def hcoef(n):
        return h[n] if 0 <= n < len(h) else 0

    return [[hcoef(2 * i + 1 - j) for j in range(g)] for i in range(g)]


def hasse_invariant_elliptic(F: FiniteField, model) -> int:
    """Hasse invariant of a Weierstrass model (zero exactly when supersingular)."""
    a1 = model[0]
    if F.p == 2:
        return a1
    b2, b4, b6, _ = b_invariants(F, model)
    inv4, inv2 = F.inv(F(4)), F.inv(F(2))
    cubic = [F.mul(b6, inv4), F.mul(b4, inv2), F.mul(b2, inv4), 1]
    w = _poly_pow(F, cubic, (F.p - 1) // 2)
    return w[F.p - 1]


# -- invariants ------------------------------------------------------------------

@dataclass(frozen=True)
class NewtonPolygon:
    slopes: tuple[Fraction, ...]

    @property
    def p_rank(self) -> int:
        return sum(1 for s in self.slopes if s == 0)

    @property
    def is_supersingular(self) -> bool:
        return all(s == Fraction(1, 2) for s in self.slopes)

    def is_symmetric(self) -> bool:
        return sorted(self.slopes) == sorted(1 - s for s in self.slopes)

    def __str__(self) -> str:
        return "[" + ", ".join(str(s) for s in self.slopes) + "]"


def _vp(n: int, p: int) -> int | None:
    if n == 0:
        return None
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def newton_polygon(w: WeilData, p: int) -> NewtonPolygon:
    m = 0
    q = w.q
    while q > 1:
        q //= p
        m += 1
    coeffs = w.charpoly()  # leading first; index i pairs with x-coordinate i
    pts = [(i, Fraction(_vp(c, p), m)) for i, c in enumerate(coeffs) if c]
    hull = [pts[0]]
    for pt in pts[1:]:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    slopes = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        s = (y2 - y1) / (x2 - x1)
        slopes += [s] * (x2 - x1)
    return NewtonPolygon(tuple(slopes))


@dataclass(frozen=True)
class StrataRecord:
    label: str
    genus: int
    p: int
    f: int
    a: int
    slopes: tuple[Fraction, ...] = ()
    mass: Fraction = Fraction(0)
    hyperelliptic: bool = True

    def __post_init__(self):
        if not (0 <= self.f <= self.genus and 0 <= self.a <= self.genus):
            raise ValueError(f"invariants out of range in {self}")
        if self.a + self.f > self.genus:
            raise ValueError(f"a + f exceeds g in {self}")


def p_rank(model: HyperellipticModel) -> int:
    return stable_rank(model.field, cartier_matrix(model))


def a_number(model: HyperellipticModel) -> int:
    return model.genus - rank(model.field, cartier_matrix(model))


def two_rank_from_h(model: HyperellipticModel) -> int:
    """p = 2: the 2-rank is one less than the number of distinct roots of h on P^1."""
    from .census_g2 import root_pattern

    return sum(deg for deg, _ in root_pattern(model.field, model.h)) - 1


def strata_record(model: HyperellipticModel, label: str = "", mass: Fraction = Fraction(0)) -> StrataRecord:
    np_ = newton_polygon(model.weil, model.p)
    return StrataRecord(label or str(model), model.genus, model.p, p_rank(model),
                        a_number(model), np_.slopes, mass)


@dataclass(frozen=True)
class AgreementFailure:
    label: str
    stable_rank: int
    np_slope_zero: int
    other: int | None = None


def three_way_check(model: HyperellipticModel, counts=None) -> AgreementFailure | None:
    """Stable Cartier rank, NP slope-0 multiplicity and (p = 2) the h-root rule agree."""
    w = WeilData.from_point_counts(model.q, counts) if counts else model.weil
    f = p_rank(model)
    n0 = newton_polygon(w, model.p).p_rank
    other = two_rank_from_h(model) if model.p == 2 else None
    if f != n0 or (other is not None and other != f):
        return AgreementFailure(str(model), f, n0, other)
    return None


def elliptic_three_way(record: EllipticClassRecord) -> bool:
    F = record.field
    hasse = hasse_invariant_elliptic(F, record.model)
    # stable rank of the 1x1 semilinear map is 1 iff the Hasse invariant is nonzero
    f = int(hasse != 0)
    return f == newton_polygon(record.weil, F.p).p_rank == int(record.trace % F.p != 0)


def quadratic_twist(model: HyperellipticModel, c: int) -> HyperellipticModel:
    """y^2 = c f for odd q; for q = 2^m, y^2 + h y = f + c h^2 with Tr(c) = 1."""
    F = model.field
    if F.p != 2:
        return HyperellipticModel(model.q, model.genus, tuple(F.mul(c, x) for x in model.f))
    h = list(model.h)
    h2 = [0] * (2 * len(h) - 1)
    for i, a in enumerate(h):
        for j, b in enumerate(h):
            h2[i + j] = F.add(h2[i + j], F.mul(a, b))
    f = [F.add(x, F.mul(c, h2[i] if i < len(h2) else 0)) for i, x in enumerate(model.f)]
    return HyperellipticModel(model.q, model.genus, tuple(f), model.h)


def twist_invariant(model: HyperellipticModel) -> bool:
    F = model.field
    if F.p != 2:
        c = F.nonsquare()
    else:
        c = next(x for x in range(F.q) if F.absolute_trace[x] == 1)
    t = quadratic_twist(model, c)
    return (p_rank(t), a_number(t), newton_polygon(t.weil, F.p)) == (
        p_rank(model), a_number(model), newton_polygon(model.weil, F.p))


# -- bounds ------------------------------------------------------------------

def bound_check(rec: StrataRecord) -> list[str]:
    g, a, p = rec.genus, rec.a, rec.p
    out = []
    if a == g and 2 * g > p * (p - 1):
        out.append("ekedahl")
    if a == g - 1 and 2 * g > 2 * p + p * (p - 1):
        out.append("zhou")
    # p a <= (p-1) g + p(p-1)/2, doubled to stay integral
    if 2 * p * a > 2 * (p - 1) * g + p * (p - 1):
        out.append("conjecture")
    if p == 2:
        if 2 * a > g + 1:
            out.append("stohr-voloch")
        elif g >= 3 and not rec.hyperelliptic and 2 * a == g + 1:
            out.append("stohr-voloch-strict")
    return out


# -- supersingular constructors -------------------------------------------------

def _verify(candidate: SupersingularCandidate, counts) -> SupersingularCandidate:
    p = candidate.model.p
    w = WeilData.from_point_counts(p, counts)
    np_ = newton_polygon(w, p)
    if not np_.is_supersingular:
        raise ArithmeticError(f"constructed curve is not supersingular: slopes {np_}")
    return SupersingularCandidate(candidate.model, candidate.genus, "verified", np_.slopes)


def build_ss_char2(h: int, coeffs=None) -> SupersingularCandidate:
    """y^2 + y = x R(x) over F_2, R = sum_{i<=h} a_i x^{2^i} with a_h = 1; genus 2^{h-1}."""
    if h < 1:
        raise ValueError("need h >= 1")
    coeffs = tuple(coeffs) if coeffs is not None else (1,) + (0,) * (h - 1) + (1,)
    if len(coeffs) != h + 1 or coeffs[h] % 2 != 1:
        raise ValueError("R must have degree exactly 2^h")
    x_side = tuple((2 ** i + 1, 1) for i, c in enumerate(coeffs) if c % 2)
    model = PlaneModel(2, ((1, 1), (2, 1)), x_side)
    g = 2 ** (h - 1)
    cand = SupersingularCandidate(model, g, "claimed")
    if g <= MAX_VERIFY_GENUS:
        return _verify(cand, model.point_counts(g))
    return cand


def build_ss_oddp(p: int, h: int, coeffs=None) -> SupersingularCandidate:
    """y^p - y = x R(x) over F_p, R p-linearised of degree p^h; genus p^h (p-1)/2."""
    if p == 2:
        raise ValueError("use build_ss_char2")
    coeffs = tuple(coeffs) if coeffs is not None else (0,) * h + (1,)
    if len(coeffs) != h + 1 or coeffs[h] % p == 0:
        raise ValueError("R must have degree exactly p^h")
    x_side = tuple((p ** i + 1, c % p) for i, c in enumerate(coeffs) if c % p)
    model = PlaneModel(p, ((1, p - 1), (p, 1)), x_side)
    g = p ** h * (p - 1) // 2
    cand = SupersingularCandidate(model, g, "claimed")
    if g <= MAX_VERIFY_GENUS:
        return _verify(cand, model.point_counts(g))
    return cand


def quotient_curve(p: int, m: int, d: int, h: int) -> SupersingularCandidate:
    """y^{p^m} - y = x^d with d | p^h + 1; genus (p^m - 1)(d - 1)/2."""
    if m < 1 or (p ** h + 1) % d:
        raise ValueError(f"need m >= 1 and d | p^h + 1, got d={d}, h={h}")
    model = PlaneModel(p, ((1, p - 1), (p ** m, 1)), ((d, 1),))
    g = (p ** m - 1) * (d - 1) // 2
    cand = SupersingularCandidate(model, g, "claimed")
    if 0 < g <= MAX_VERIFY_GENUS:
        return _verify(cand, model.point_counts(g))
    return cand


LARGE_GENUS_EXAMPLES = (
    (2, "y^{256}+y^{64}+y^4+y = x^{68}+x^{20}+x^{17}+x^{12}+x^{10}", 2021),
    (3, "y^{27}+y^9+y^3+y = x^{246}+x^{84}+x^{82}", 999),
)


def large_genus_examples() -> list[SupersingularCandidate]:
    return [SupersingularCandidate(PlaneModel.parse(p, text), g, "claimed")
            for p, text, g in LARGE_GENUS_EXAMPLES]


def genus_digits_ok(p: int, g: int) -> bool:
    """Every base-p digit of g is 0 or (p-1)/2."""
    while g:
        if g % p not in (0, (p - 1) // 2):
            return False
        g //= p
    return True


# -- strata census -------------------------------------------------------------

@dataclass
class StrataCensus:
    q: int
    closed: dict = field(default_factory=dict)  # label -> mass
    records: list = field(default_factory=list)
    failures: list = field(default_factory=list)


def strata_census_g2_char2(q: int) -> StrataCensus:
    from .census_g2 import enumerate_g2_char2

    census = enumerate_g2_char2(q)
    by: dict[tuple[int, int], Fraction] = defaultdict(Fraction)
    out = StrataCensus(q)
    for (model, _pattern, mass), row in zip(census.models(), census.rows):
        f, a = p_rank(model), a_number(model)
        by[(f, a)] += mass
        if (bad := three_way_check(model, row[4:6])) is not None:
            out.failures.append(bad)
        out.records.append(StrataRecord(str(model), 2, 2, f, a, mass=mass))
    out.closed = {
        "f<=2": sum(by.values(), Fraction(0)),
        "f<=1": sum((m for (f, _), m in by.items() if f <= 1), Fraction(0)),
        "f=0": sum((m for (f, _), m in by.items() if f == 0), Fraction(0)),
        "a=2": sum((m for (_, a), m in by.items() if a == 2), Fraction(0)),
    }
    return out


@dataclass
class InvariantScan:
    q: int
    curves: int = 0
    agreement_failures: list = field(default_factory=list)
    twist_failures: list = field(default_factory=list)
    bound_violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.agreement_failures or self.twist_failures or self.bound_violations)


def scan_odd_genus2(q: int) -> InvariantScan:
    """Run the invariant suite on every squarefree sextic over odd F_q."""
    from .census_g2 import iter_sextic_chunks

    F = GF(q)
    c = F.nonsquare()
    out = InvariantScan(q)
    for ch in iter_sextic_chunks(q):
        for coeffs, n1, n2 in zip(ch.coeffs.tolist(), ch.n1.tolist(), ch.n2.tolist()):
            model = HyperellipticModel(q, 2, tuple(coeffs))
            out.curves += 1
            if (bad := three_way_check(model, (n1, n2))) is not None:
                out.agreement_failures.append(bad)
            tw = quadratic_twist(model, c)
            np_ = newton_polygon(WeilData.from_point_counts(q, (n1, n2)), F.p)
            np_tw = newton_polygon(WeilData.from_point_counts(q, (2 * (q + 1) - n1, n2)), F.p)
            inv = (p_rank(model), a_number(model), np_)
            if inv != (p_rank(tw), a_number(tw), np_tw):
                out.twist_failures.append(str(model))
            rec = StrataRecord(str(model), 2, F.p, inv[0], inv[1], np_.slopes)
            if bound_check(rec):
                out.bound_violations.append(rec)
    return out
