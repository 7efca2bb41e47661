"""Closed-form masses of supersingular and superspecial loci, checked against censuses."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

import numpy as np

from .census_g1 import enumerate_elliptic, geometric_aut_orders
from .fields import is_prime
from .zeta import bernoulli_zeta

# deg(lambda_1) on the compactified A_1: Delta cuts out 12 lambda_1 at the cusp,
# which has one automorphism of order 2
DEG_LAMBDA1 = Fraction(1, 2) / 12
# deg(lambda_1 lambda_2) on A_2, taken as a named constant
DEG_LAMBDA1_LAMBDA2 = Fraction(1, 5760)


class IntegralityError(ArithmeticError):
    pass


@dataclass(frozen=True)
class MassReport:
    label: str
    formula: Fraction
    census: Fraction | None = None

    @property
    def match(self) -> bool | None:
        return None if self.census is None else self.formula == self.census


def _kronecker_minus3(p: int) -> int:
    if p == 3:
        return 0
    if p == 2:
        return -1
    return 1 if p % 3 == 1 else -1


def _kronecker_minus4(p: int) -> int:
    if p == 2:
        return 0
    return 1 if p % 4 == 1 else -1


def deuring_class_number(p: int) -> int:
    h = (Fraction(p - 1, 12) + (1 - _kronecker_minus3(p)) * Fraction(1, 3)
         + (1 - _kronecker_minus4(p)) * Fraction(1, 4))
    if h.denominator != 1:
        raise IntegralityError(f"h_{p} = {h}")
    return int(h)


def deuring(p: int) -> tuple[int, Fraction]:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return deuring_class_number(p), Fraction(p - 1, 24)


def supersingular_census(p: int) -> tuple[int, Fraction]:
    """Supersingular j-invariants over F_{p^2} and their mass with geometric Aut.

    Every supersingular j lies in F_{p^2}, and some twist over F_{p^2} carries
    all geometric automorphisms, so the largest F_{p^2}-automorphism group
    among the twists is the geometric one.
    """
    q = p * p
    ss_js = {r.j_invariant for r in enumerate_elliptic(q) if r.trace % p == 0}
    aut = geometric_aut_orders(q)
    return len(ss_js), sum((Fraction(1, aut[j]) for j in ss_js), Fraction(0))


def deuring_report(p: int) -> tuple[MassReport, MassReport]:
    h, mass = deuring(p)
    n, m = supersingular_census(p)
    return MassReport(f"h_{p}", Fraction(h), Fraction(n)), MassReport(f"ss mass p={p}", mass, m)


def proportionality_constant(g: int) -> Fraction:
    return bernoulli_zeta(g)


def ekedahl_ss_mass(g: int, p: int) -> Fraction:
    if not 1 <= g <= 6:
        raise ValueError("g must be in 1..6")
    factor = reduce(lambda acc, i: acc * (p ** i + (-1) ** i), range(1, g + 1), 1)
    return factor * proportionality_constant(g)


def vf_coefficient(g: int, f: int, p: int) -> int:
    """Scalar in front of lambda_{g-f} in the class of the p-rank stratum V_f."""
    if not 0 <= f <= g:
        raise ValueError("need 0 <= f <= g")
    return reduce(lambda acc, i: acc * (p ** i - 1), range(1, g - f + 1), 1)


def deg_v0_g1(p: int) -> Fraction:
    return vf_coefficient(1, 0, p) * DEG_LAMBDA1


def s3_coefficient(p: int) -> int:
    """Scalar in front of lambda_1 lambda_3 in the class of the supersingular locus for g = 3."""
    return (p - 1) ** 2 * (p ** 3 - 1) * (p ** 4 - 1)


# -- Sp(4, Z/n) ----------------------------------------------------------------

def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def sp4_group_order(n: int) -> int:
    """#Sp(4, Z/n) = n^10 prod_{l | n} (1 - l^-2)(1 - l^-4)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    r = Fraction(n ** 10)
    for ell in _prime_factors(n):
        r *= (1 - Fraction(1, ell ** 2)) * (1 - Fraction(1, ell ** 4))
    return int(r)


def sp4_group_order_bruteforce(n: int) -> int:
    """Count ordered symplectic bases (e1, f1, e2, f2) of (Z/n)^4."""
    if not 1 <= n <= 5:
        raise ValueError("brute force is limited to n <= 5")
    vecs = np.array(np.meshgrid(*[np.arange(n)] * 4, indexing="ij")).reshape(4, -1).T
    J = np.array([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
    pairing = (vecs @ J @ vecs.T) % n
    one = (pairing == 1 % n).astype(np.int64)
    total = 0
    for e1, f1 in zip(*np.nonzero(one)):
        orth = ((pairing[e1] == 0) & (pairing[f1] == 0)).astype(np.int64)
        total += int(orth @ one @ orth)
    return total


@dataclass(frozen=True)
class MoretBaillyCounts:
    p: int
    n: int
    lines: Fraction
    superspecial: Fraction
    in_m2: Fraction

    def integral(self) -> bool:
        return all(x.denominator == 1 for x in (self.lines, self.superspecial, self.in_m2))

    def incidence_holds(self) -> bool:
        # p^2 + 1 rational points on each line, p + 1 lines through each point
        return self.lines * (self.p ** 2 + 1) == self.superspecial * (self.p + 1)


def moret_bailly(p: int, n: int) -> MoretBaillyCounts:
    """Supersingular lines and superspecial points on A_2[n] over F_p-bar."""
    if not is_prime(p) or n % p == 0:
        raise ValueError("need p prime not dividing n")
    r = Fraction(sp4_group_order(n))
    counts = MoretBaillyCounts(
        p, n,
        (p * p - 1) * r * DEG_LAMBDA1_LAMBDA2,
        (p - 1) * (p * p + 1) * r * DEG_LAMBDA1_LAMBDA2,
        (p - 1) * (p - 2) * (p - 3) * r * DEG_LAMBDA1_LAMBDA2,
    )
    if n >= 3 and not counts.integral():
        raise IntegralityError(f"non-integral Moret-Bailly counts at p={p}, n={n}")
    return counts
