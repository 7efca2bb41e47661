"""Point counts of M_{0,n}, M_{1,n} and the compactification of M_{1,n}.

Equivariant counts take a cycle type: the number of fixed points of F o sigma
only depends on the conjugacy class of sigma.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .census_g1 import enumerate_elliptic
from .fields import CapacityError, prime_power
from .series import LaurentSeries

MAX_N = 11
MAX_MBAR_N = 6


class CountIntegralityError(ArithmeticError):
    pass


class PolynomialFitError(ValueError):
    """Interpolation failed one of its checks; ``reason`` says which."""

    def __init__(self, reason: str, detail: str):
        super().__init__(f"{reason}: {detail}")
        self.reason = reason


# -- cycle types ---------------------------------------------------------------

@dataclass(frozen=True)
class CycleType:
    """Multiplicities m_d of d-cycles, stored as sorted (d, m_d) pairs."""

    parts: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, lengths) -> "CycleType":
        c = Counter(int(d) for d in lengths)
        if any(d < 1 for d in c):
            raise ValueError("cycle lengths must be positive")
        return cls(tuple(sorted(c.items())))

    @classmethod
    def identity(cls, n: int) -> "CycleType":
        return cls.of([1] * n)

    @classmethod
    def of_permutation(cls, perm) -> "CycleType":
        """``perm`` maps index i to perm[i] (0-based)."""
        seen, lengths = set(), []
        for start in range(len(perm)):
            if start in seen:
                continue
            length, i = 0, start
            while i not in seen:
                seen.add(i)
                i = perm[i]
                length += 1
            lengths.append(length)
        return cls.of(lengths)

    @property
    def n(self) -> int:
        return sum(d * m for d, m in self.parts)

    def multiplicity(self, d: int) -> int:
        return dict(self.parts).get(d, 0)

    def class_size(self) -> int:
        size = factorial(self.n)
        for d, m in self.parts:
            size //= d ** m * factorial(m)
        return size

    def sign(self) -> int:
        return (-1) ** sum((d - 1) * m for d, m in self.parts)

    def __str__(self) -> str:
        return "".join(f"{d}^{m}" if m > 1 else f"{d}" for d, m in self.parts) or "()"


def cycle_types(n: int):
    """All cycle types of S_n."""
    def parts(rest, largest):
        if rest == 0:
            yield []
            return
        for d in range(min(rest, largest), 0, -1):
            for tail in parts(rest - d, d):
                yield [d] + tail
    for p in parts(n, n):
        yield CycleType.of(p)


def _exact_from_totals(totals: dict[int, int]) -> dict[int, int]:
    exact: dict[int, int] = {}
    for d in sorted(totals):
        exact[d] = totals[d] - sum(exact[e] for e in exact if d % e == 0 and e < d)
    return exact


def configuration_count(exact: dict[int, int], ct: CycleType) -> int:
    """Distinct n-tuples with F(P_i) = P_sigma(i), given exact-degree point counts."""
    total = 1
    for d, m in ct.parts:
        for i in range(m):
            total *= exact[d] - i * d
    return total


# -- genus 0 -------------------------------------------------------------------

def m0n_count(q: int, n: int) -> int:
    if n < 3:
        raise ValueError("M_{0,n} needs n >= 3")
    out = 1
    for i in range(2, n - 1):
        out *= q - i
    return out


def projective_line_exact(q: int, d_max: int) -> dict[int, int]:
    return _exact_from_totals({d: q ** d + 1 for d in range(1, d_max + 1)})


def m0n_equivariant(q: int, n: int, ct: CycleType | None = None) -> int:
    ct = ct or CycleType.identity(n)
    if n < 3:
        raise ValueError("M_{0,n} needs n >= 3")
    if ct.n != n:
        raise ValueError(f"cycle type {ct} is not a partition of {n}")
    d_max = max(d for d, _ in ct.parts)
    configs = configuration_count(projective_line_exact(q, d_max), ct)
    pgl2 = q ** 3 - q
    if configs % pgl2:
        raise CountIntegralityError(f"{configs} configurations not divisible by #PGL_2 = {pgl2}")
    return configs // pgl2


# -- genus 1 -------------------------------------------------------------------

@lru_cache(maxsize=None)
def _elliptic_exact_counts(q: int, d_max: int):
    out = []
    for r in enumerate_elliptic(q):
        totals = {d: r.point_count(d) for d in range(1, d_max + 1)}
        out.append((r.mass, r.n1, _exact_from_totals(totals)))
    return tuple(out)


def m1n_direct(q: int, n: int, ct: CycleType | None = None) -> int:
    """Groupoid count of fixed points of F o sigma on M_{1,n}.

    A genus-one curve over F_q always has a rational point, so it is an
    elliptic curve E with automorphism group E(F_q) x| Aut(E); each class is
    weighted by 1 / (N_1 #Aut(E)).
    """
    ct = ct or CycleType.identity(n)
    if not 1 <= n <= MAX_N:
        raise CapacityError(f"m1n_direct supports 1 <= n <= {MAX_N}")
    if ct.n != n:
        raise ValueError(f"cycle type {ct} is not a partition of {n}")
    prime_power(q)
    d_max = max(d for d, _ in ct.parts)
    total = Fraction(0)
    for mass, n1, exact in _elliptic_exact_counts(q, d_max):
        total += mass * Fraction(configuration_count(exact, ct), n1)
    if total.denominator != 1:
        raise CountIntegralityError(f"#M_1,{n} fixed points = {total}")
    return int(total)


def frequency_formula(freq: dict[int, Fraction], n: int) -> Fraction:
    """sum_m freq(m) * binom(m-1, n-1) * (n-1)!"""
    return sum((f * comb(m - 1, n - 1) * factorial(n - 1) for m, f in freq.items()), Fraction(0))


def _binomial_laurent(base: LaurentSeries, k: int) -> LaurentSeries:
    """binom(base, k) for a Laurent polynomial ``base``."""
    out = LaurentSeries({0: 1}, 0, 0)
    for i in range(k):
        out = out.polymul(base - LaurentSeries({0: i}, base.lo, base.hi))
    return out.scale(Fraction(1, factorial(k)))


def getzler_coefficients(q: int, n: int) -> dict[int, Fraction]:
    """c_k with binom(q - t - q/t, n-1) = sum_k c_k h_k(t, q/t).

    Since h_k(t, q/t) (t - q/t) = t^{k+1} - (q/t)^{k+1}, c_k is the residue at
    t = 0 of binom(q - t - q/t, n-1) (t - q/t) t^{-k-2}.
    """
    base = LaurentSeries({-1: -q, 0: q, 1: -1}, -1, 1)
    integrand = _binomial_laurent(base, n - 1).polymul(LaurentSeries({1: 1, -1: -q}, -1, 1))
    coeffs = {}
    for k in range(integrand.hi):
        c = integrand.shift(-k - 2).residue()
        if c:
            coeffs[k] = c
    if any(k >= n for k in coeffs):
        raise AssertionError("residue picked up h_k with k >= n")
    return coeffs


def m1n_getzler(q: int, n: int) -> int:
    """#M_{1,n}(F_q) from sigma_k(q), k < n, by a residue computation."""
    from .census_g1 import sigma_k

    if n < 1:
        raise ValueError("n must be >= 1")
    total = -sum((c * sigma_k(q, k) for k, c in getzler_coefficients(q, n).items()), Fraction(0))
    total *= factorial(n - 1)
    if total.denominator != 1:
        raise CountIntegralityError(f"residue route gave {total}")
    return int(total)


# -- stable graphs in genus one --------------------------------------------------

@dataclass(frozen=True)
class StableGraph:
    """Vertices carry a genus; legs map label -> vertex; edges are vertex pairs.

    Only canonical forms are stored, so equality is isomorphism.
    """

    genera: tuple[int, ...]
    legs: tuple[int, ...]  # legs[i] = vertex of leg i+1
    edges: tuple[tuple[int, int], ...]

    @property
    def genus(self) -> int:
        return sum(self.genera) + len(self.edges) - len(self.genera) + 1

    def valence(self, v: int) -> int:
        return (sum(1 for w in self.legs if w == v)
                + sum((a == v) + (b == v) for a, b in self.edges))

    def is_stable(self) -> bool:
        return all(2 * g - 2 + self.valence(v) >= 1 for v, g in enumerate(self.genera))

    def relabel(self, perm) -> "StableGraph":
        """Vertex v becomes perm[v]."""
        genera = [0] * len(self.genera)
        for v, g in enumerate(self.genera):
            genera[perm[v]] = g
        legs = tuple(perm[v] for v in self.legs)
        edges = tuple(sorted(tuple(sorted((perm[a], perm[b]))) for a, b in self.edges))
        return StableGraph(tuple(genera), legs, edges)

    def _colours(self) -> list:
        """Colour refinement; vertices of different colour are never swapped."""
        nv = len(self.genera)
        colour = [(g, tuple(i for i, w in enumerate(self.legs) if w == v)) for v, g in enumerate(self.genera)]
        while True:
            nbrs = [[] for _ in range(nv)]
            for a, b in self.edges:
                nbrs[a].append(colour[b])
                nbrs[b].append(colour[a])
            refined = [(colour[v], tuple(sorted(nbrs[v]))) for v in range(nv)]
            ranks = {c: i for i, c in enumerate(sorted(set(refined)))}
            new = [ranks[c] for c in refined]
            if len(set(new)) == len(set(colour)):
                return new
            colour = new

    def canonical(self) -> "StableGraph":
        colour = self._colours()
        classes: dict[int, list[int]] = {}
        for v, c in enumerate(colour):
            classes.setdefault(c, []).append(v)
        order = sorted(classes)
        best = None
        for choice in itertools.product(*(itertools.permutations(classes[c]) for c in order)):
            perm = [0] * len(colour)
            slot = 0
            for block in choice:
                for v in block:
                    perm[v] = slot
                    slot += 1
            cand = self.relabel(perm)
            if best is None or _graph_key(cand) < _graph_key(best):
                best = cand
        return best

    def vertex_automorphisms(self):
        nv = len(self.genera)
        return [p for p in itertools.permutations(range(nv)) if self.relabel(p) == self.relabel(range(nv))]

    def automorphisms(self):
        """Yield, for each automorphism, the half-edge permutation at every vertex.

        Legs are labelled and Frobenius-fixed, so in genus one every
        automorphism fixes all vertices; what remains permutes parallel edges
        and flips loops.  The result for vertex v is a permutation of
        v's half-edges, given as a cycle type.
        """
        if len(self.vertex_automorphisms()) != 1:
            raise NotImplementedError("vertex-permuting automorphisms do not occur for labelled genus <= 1 graphs")
        groups = Counter(self.edges)
        per_group = []
        for (a, b), m in sorted(groups.items()):
            options = []
            for perm in itertools.permutations(range(m)):
                flips = itertools.product((0, 1), repeat=m) if a == b else [(0,) * m]
                for flip in flips:
                    options.append(((a, b), perm, flip))
            per_group.append(options)
        for choice in itertools.product(*per_group):
            lengths: dict[int, list[int]] = {v: [1] * sum(1 for w in self.legs if w == v)
                                             for v in range(len(self.genera))}
            for (a, b), perm, flip in choice:
                m = len(perm)
                if a != b:
                    for v in (a, b):
                        lengths[v] += list(_cycle_lengths(perm))
                else:
                    # half-edges (i, 0), (i, 1) for loop i; automorphism sends
                    # (i, s) to (perm[i], s ^ flip[i])
                    mapping = {}
                    for i in range(m):
                        for s in (0, 1):
                            mapping[(i, s)] = (perm[i], s ^ flip[i])
                    lengths[a] += list(_cycle_lengths_map(mapping))
            yield {v: CycleType.of(ls) for v, ls in lengths.items()}


def _cycle_lengths(perm):
    return [d for d, m in CycleType.of_permutation(perm).parts for _ in range(m)]


def _cycle_lengths_map(mapping: dict):
    seen, out = set(), []
    for start in mapping:
        if start in seen:
            continue
        length, x = 0, start
        while x not in seen:
            seen.add(x)
            x = mapping[x]
            length += 1
        out.append(length)
    return out


def _graph_key(g: StableGraph):
    return (g.genera, g.legs, g.edges)


def _splits(graph: StableGraph):
    """All graphs with one more edge that contract back to ``graph``."""
    nv = len(graph.genera)
    for v, g in enumerate(graph.genera):
        # half-edges at v: legs and edge ends
        legs_here = [i for i, w in enumerate(graph.legs) if w == v]
        ends = [(ei, side) for ei, e in enumerate(graph.edges) for side in (0, 1) if e[side] == v]
        halves = [("leg", i) for i in legs_here] + [("end", x) for x in ends]
        if g >= 1:
            genera = list(graph.genera)
            genera[v] = g - 1
            yield StableGraph(tuple(genera), graph.legs, graph.edges + ((v, v),))
        for g1 in range(g + 1):
            for mask in range(1 << len(halves)):
                new = nv
                genera = list(graph.genera) + [g - g1]
                genera[v] = g1
                legs = list(graph.legs)
                edges = [list(e) for e in graph.edges]
                for bit, h in enumerate(halves):
                    if mask >> bit & 1:
                        if h[0] == "leg":
                            legs[h[1]] = new
                        else:
                            ei, side = h[1]
                            edges[ei][side] = new
                edges.append([v, new])
                yield StableGraph(tuple(genera), tuple(legs), tuple(tuple(e) for e in edges))


@lru_cache(maxsize=None)
def genus1_stable_graphs(n: int) -> tuple[StableGraph, ...]:
    """Isomorphism classes of stable graphs of genus 1 with legs 1..n."""
    if not 1 <= n <= MAX_MBAR_N:
        raise CapacityError(f"stable graphs are enumerated for 1 <= n <= {MAX_MBAR_N}")
    start = StableGraph((1,), (0,) * n, ()).canonical()
    found = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for graph in frontier:
            for child in _splits(graph):
                if not child.is_stable():
                    continue
                child = child.canonical()
                if child not in found:
                    found.add(child)
                    nxt.append(child)
        frontier = nxt
    return tuple(sorted(found, key=lambda g: (len(g.edges), _graph_key(g))))


def stratum_count(q: int, graph: StableGraph) -> Fraction:
    """F_q-points of the boundary stratum of ``graph``: average over Aut of twisted counts."""
    total, order = Fraction(0), 0
    for local in graph.automorphisms():
        order += 1
        term = 1
        for v, g in enumerate(graph.genera):
            ct = local[v]
            term *= m0n_equivariant(q, ct.n, ct) if g == 0 else m1n_direct(q, ct.n, ct)
        total += term
    return total / order


def mbar1n(q: int, n: int) -> int:
    total = sum((stratum_count(q, g) for g in genus1_stable_graphs(n)), Fraction(0))
    if total.denominator != 1:
        raise CountIntegralityError(f"#Mbar_1,{n} = {total}")
    return int(total)


# -- polynomial detection ------------------------------------------------------

@dataclass(frozen=True)
class PolynomialInQ:
    coeffs: tuple[int, ...]  # c_0 .. c_d
    complete: bool = False

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, q: int) -> int:
        return sum(c * q ** i for i, c in enumerate(self.coeffs))

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __str__(self) -> str:
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f"{sign}{body}"
        return out


def poly_fit_and_check(samples, d: int, complete: bool = False) -> PolynomialInQ:
    """Exact Lagrange interpolation through ``samples`` = [(q, count), ...].

    The first d+1 points determine the polynomial; any extra samples must lie
    on it.
    """
    pts = [(int(x), Fraction(y)) for x, y in samples]
    if len({x for x, _ in pts}) < d + 1:
        raise PolynomialFitError("too-few-samples", f"need {d + 1} distinct q, got {len(pts)}")
    base = pts[: d + 1]
    coeffs = [Fraction(0)] * (d + 1)
    for i, (xi, yi) in enumerate(base):
        # basis polynomial prod_{j != i} (x - xj) / (xi - xj)
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(base):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k, c in enumerate(basis):
            coeffs[k] += yi * c / denom
    if any(c.denominator != 1 for c in coeffs):
        raise PolynomialFitError("non-integral", f"coefficients {[str(c) for c in coeffs]}")
    poly = PolynomialInQ(tuple(int(c) for c in coeffs), complete)
    for x, y in pts[d + 1:]:
        if poly(x) != y:
            raise PolynomialFitError("extra-sample", f"P({x}) = {poly(x)} but sample is {y}")
    if complete and not poly.is_palindromic():
        raise PolynomialFitError("not-palindromic", str(poly))
    return poly
