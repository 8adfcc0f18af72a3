"""Closed-form intersection numbers for symmetric degeneracy loci.

Classes on P^n are rational multiples of powers of the hyperplane class H,
truncated at H^{n+1} = 0. Half-integral Chern roots are handled by working
over Q throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, Optional, Sequence, Tuple

# Coefficients ((a,b)) of the specialized degeneracy-locus formula. These are
# tabulated inputs, not derived quantities.
PRATT_COEFFS: Dict[Tuple[int, int], int] = {(1, 0): 1, (2, 0): 3, (3, 0): 7, (2, 1): 3}

# Tabulated Q-Schur values on P^5, as multiples of H^{a+b}.
PAPER_Q_TABLE: Dict[Tuple[int, int], Fraction] = {
    (2, 1): Fraction(35),
    (3, 1): Fraction(105),
    (4, 1): Fraction(777, 4),
    (3, 2): Fraction(483, 4),
}

AMBIENT_N = 5
BUNDLE_RANK = 6


class IntersectionClass:
    """``sum_i coeffs[i] H^i`` in ``Q[H] / (H^{n+1})``."""

    __slots__ = ("coeffs", "n")

    def __init__(self, coeffs: Sequence, n: int):
        if n < 0:
            raise ValueError("ambient dimension must be non-negative")
        cs = [Fraction(c) for c in coeffs][: n + 1]
        cs += [Fraction(0)] * (n + 1 - len(cs))
        self.coeffs: Tuple[Fraction, ...] = tuple(cs)
        self.n = n

    @classmethod
    def monomial(cls, c, power: int, n: int) -> "IntersectionClass":
        cs = [0] * (n + 1)
        if 0 <= power <= n:
            cs[power] = c
        return cls(cs, n)

    @classmethod
    def one(cls, n: int) -> "IntersectionClass":
        return cls.monomial(1, 0, n)

    def _check(self, other: "IntersectionClass") -> None:
        if self.n != other.n:
            raise ValueError("classes live on different projective spaces")

    def __add__(self, other):
        if not isinstance(other, IntersectionClass):
            return NotImplemented
        self._check(other)
        return IntersectionClass([a + b for a, b in zip(self.coeffs, other.coeffs)], self.n)

    def __neg__(self):
        return IntersectionClass([-a for a in self.coeffs], self.n)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return IntersectionClass([a * other for a in self.coeffs], self.n)
        if not isinstance(other, IntersectionClass):
            return NotImplemented
        self._check(other)
        out = [Fraction(0)] * (self.n + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs[: self.n + 1 - i]):
                    out[i + j] += a * b
        return IntersectionClass(out, self.n)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, IntersectionClass) and self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.n))

    def coefficient(self, power: int) -> Fraction:
        return self.coeffs[power] if 0 <= power <= self.n else Fraction(0)

    def degree(self) -> Fraction:
        """Coefficient of the point class ``H^n``."""
        return self.coeffs[self.n]

    def is_monomial(self, power: int) -> bool:
        return all(c == 0 for i, c in enumerate(self.coeffs) if i != power)

    def __repr__(self) -> str:
        return f"IntersectionClass({str(self)!r}, n={self.n})"

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("H" if i == 1 else f"H^{i}")
            cs = str(c) if c.denominator == 1 else f"({c})"
            if mono and c == 1:
                parts.append(mono)
            elif mono and c == -1:
                parts.append("-" + mono)
            else:
                parts.append(cs + mono)
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def expected_codim(n: int, k: int) -> int:
    """Codimension of the rank <= k locus of symmetric (n+1)x(n+1) matrices."""
    if not 1 <= k <= n + 1:
        raise ValueError(f"need 1 <= k <= n+1, got n={n}, k={k}")
    return comb(n - k + 2, 2)


def degree_Qk(n: int, k: int) -> int:
    """Degree of the variety of quadrics of rank <= k in P(S^2 C^{n+1})."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    prod = Fraction(1)
    for t in range(n - k + 1):
        prod *= Fraction(comb(n + t + 1, n - k - t + 1), comb(2 * t + 1, t))
    if prod.denominator != 1:
        raise ArithmeticError(f"non-integral degree {prod} for (n, k) = ({n}, {k})")
    return int(prod)


def canonical_double(n: int, k: int) -> int:
    """Coefficient ``c`` in ``2K_Y = c H|_Y`` for a smooth symmetric rank locus."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    return (n + 1) * (n - k)


def curve_genus(double_canonical: int, degree: int) -> int:
    """Genus of a curve with ``2K = c H`` and ``deg H = degree``."""
    two_g_minus_2 = Fraction(double_canonical * degree, 2)
    g = two_g_minus_2 / 2 + 1
    if g.denominator != 1:
        raise ArithmeticError(f"non-integral genus {g}")
    return int(g)


@dataclass(frozen=True)
class LocusCurve:
    s: int
    n: int
    k: int
    degree: int
    genus: int


def smallest_locus_curve(s: int) -> LocusCurve:
    """The case where the smallest nonempty rank locus of a cubic is a curve."""
    if s < 1:
        raise ValueError("s must be at least 1")
    n = comb(s + 1, 2) + 1
    k = comb(s, 2) + 2
    deg = degree_Qk(n, k)
    double_k = (comb(s + 1, 2) + 2) * (s - 1)
    return LocusCurve(s, n, k, deg, curve_genus(double_k, deg))


def _onerow_coeff(r: int, rank: int = BUNDLE_RANK) -> Fraction:
    """Coefficient of t^r in ``((1 + t/2) / (1 - t/2))^rank``."""
    if r < 0:
        return Fraction(0)
    half = Fraction(1, 2)
    # (1 + t/2)^rank times (1 - t/2)^{-rank}
    return sum((comb(rank, i) * half**i * comb(rank + (r - i) - 1, r - i) * half ** (r - i)
                for i in range(min(r, rank) + 1)), Fraction(0))


def q_schur_onerow(r: int, n: int = AMBIENT_N) -> IntersectionClass:
    """One-row Q-Schur class with six Chern roots equal to H/2."""
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")
    return IntersectionClass.monomial(_onerow_coeff(r), r, n)


def _q(r: int, n: int) -> IntersectionClass:
    # Q_r for any integer r; zero outside [0, n]
    if r < 0 or r > n:
        return IntersectionClass([0], n)
    return q_schur_onerow(r, n)


def q_schur_tworow(a: int, b: int, n: int = AMBIENT_N) -> IntersectionClass:
    """``Q_(a,b) = Q_a Q_b + 2 sum_{i=1}^b (-1)^i Q_{a+i} Q_{b-i}``."""
    if not a > b >= 0:
        raise ValueError(f"need a > b >= 0, got ({a}, {b})")
    total = _q(a, n) * _q(b, n)
    for i in range(1, b + 1):
        total = total + _q(a + i, n) * _q(b - i, n) * (2 * (-1) ** i)
    return total


def chern_projective(j: int, n: int = AMBIENT_N) -> IntersectionClass:
    """``c_j(P^n) = C(n+1, j) H^j``."""
    return IntersectionClass.monomial(comb(n + 1, j), j, n)


def pratt_euler(q_values: str = "computed", skip: Optional[Tuple[int, int]] = None):
    """Degree of ``c_2(Y)`` for the rank-4 locus of a 6x6 symmetric linear matrix on P^5.

    ``c_2(Y) = sum (-1)^{i1+i2} ((i1+1, i2)) Q_(i1+2, i2+1) c_{2-i1-i2}(P^5)`` over
    the four index pairs with a tabulated coefficient. ``q_values`` selects
    ``"computed"`` or ``"paper"`` Q-Schur values; ``skip`` drops one ``(i1, i2)``
    term (used to check that every term matters), in which case the result
    may be a non-integral Fraction.
    """
    if q_values not in ("computed", "paper"):
        raise ValueError("q_values must be 'computed' or 'paper'")
    n = AMBIENT_N
    total = IntersectionClass([0], n)
    for (c1, c2), coeff in PRATT_COEFFS.items():
        i1, i2 = c1 - 1, c2
        if (i1, i2) == skip:
            continue
        a, b = i1 + 2, i2 + 1
        if q_values == "computed":
            q = q_schur_tworow(a, b, n)
        else:
            q = IntersectionClass.monomial(PAPER_Q_TABLE[(a, b)], a + b, n)
        total = total + q * chern_projective(2 - i1 - i2, n) * ((-1) ** (i1 + i2) * coeff)
    deg = total.degree()
    if deg.denominator == 1:
        return int(deg)
    if skip is None:
        raise ArithmeticError(f"non-integral Euler characteristic {deg}")
    return deg


@dataclass(frozen=True)
class SurfaceInvariants:
    e: int
    K2: int
    KH: int
    H2: int
    chi: int
    pg: int
    q: int
    h11: int

    def __post_init__(self):
        if 12 * self.chi != self.e + self.K2:
            raise ValueError("Noether's formula chi = (e + K^2)/12 fails")
        if self.e != 2 - 4 * self.q + 2 * self.pg + self.h11:
            raise ValueError("Hodge numbers do not add up to e")
        if self.pg != self.chi - 1 + self.q:
            raise ValueError("pg is inconsistent with chi and q")

    def chi_twist(self, m: int) -> Fraction:
        """``chi(O_Y(m)) = chi + (m^2 H^2 - m K.H)/2`` by Riemann-Roch."""
        return self.chi + Fraction(m * m * self.H2 - m * self.KH, 2)


def surface_invariants(e: Optional[int] = None, q: int = 0) -> SurfaceInvariants:
    """Invariants of the rank-4 Hessian locus of a general cubic fourfold.

    ``e`` defaults to :func:`pratt_euler`; ``K = 3H`` numerically comes from
    :func:`canonical_double` and ``H^2`` from :func:`degree_Qk`.
    """
    if e is None:
        e = pratt_euler()
    H2 = degree_Qk(5, 4)
    two_k = canonical_double(5, 4)
    if two_k % 2:
        raise ValueError("2K is not divisible by 2 in NS numerically")
    k = two_k // 2
    K2, KH = k * k * H2, k * H2
    if (e + K2) % 12:
        raise ValueError(f"Noether non-integrality: ({e} + {K2})/12")
    chi = (e + K2) // 12
    pg = chi - 1 + q
    h11 = e - 2 + 4 * q - 2 * pg
    return SurfaceInvariants(e, K2, KH, H2, chi, pg, q, h11)


def klein_hf(d: int) -> int:
    """HF of the Klein rank-4 locus at degree ``d`` from the hilbert module."""
    from .hessian import named_cubic
    from .hilbert import hf_value, minor_ideal

    return hf_value(minor_ideal(named_cubic("klein6", 5), 4), d)


def eta_certificate(pg: Optional[int] = None, hf3: Optional[int] = None) -> bool:
    """True when ``pg < HF(S_Y, 3)``, which rules out ``K_Y = 3H|_Y``.

    If ``K_Y = 3H`` then ``pg = h^0(O_Y(3)) >= HF(3)``.
    """
    if pg is None:
        pg = surface_invariants().pg
    if hf3 is None:
        hf3 = klein_hf(3)
    return pg < hf3
