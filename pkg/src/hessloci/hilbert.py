"""Hilbert functions of graded ideals by linear algebra over GF(p).

``HF(S/I, d) = dim S^d - rank{g * m : g a generator, deg m = d - deg g}``.
No Groebner bases and no saturation: polynomial tails are fitted on windows
where the values have stabilized.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import comb, factorial
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .hessian import CubicForm, hessian_data
from .polycore import GF, EchelonModP, Polynomial, minors, monomials_of_degree

DEFAULT_PRIME = 32003
FIT_WINDOWS = {3: (6, 12), 4: (8, 15), 5: (6, 11)}


class FitError(ValueError):
    pass


class GradedIdeal:
    """Homogeneous generators in ``nvars`` variables."""

    def __init__(self, generators: Sequence[Polynomial], nvars: Optional[int] = None):
        gens = [g for g in generators if not g.is_zero()]
        if nvars is None:
            if not gens:
                raise ValueError("cannot infer nvars from an empty generator list")
            nvars = gens[0].nvars
        for g in gens:
            if g.nvars != nvars:
                raise ValueError("generators live in different rings")
            if not g.is_homogeneous():
                raise ValueError(f"generator {g} is not homogeneous")
        self.nvars = nvars
        self.generators = tuple(gens)
        self.degrees = tuple(g.homogeneous_degree() for g in gens)

    @property
    def duplicates(self) -> List[Tuple[int, int]]:
        """Index pairs ``(i, j)``, ``i < j``, of repeated generators."""
        seen: Dict[Polynomial, int] = {}
        out = []
        for j, g in enumerate(self.generators):
            if g in seen:
                out.append((seen[g], j))
            else:
                seen[g] = j
        return out

    def with_generators(self, extra: Sequence[Polynomial]) -> "GradedIdeal":
        return GradedIdeal(list(self.generators) + list(extra), self.nvars)

    def __len__(self) -> int:
        return len(self.generators)


def _encode(exps: np.ndarray, base: int) -> np.ndarray:
    weights = base ** np.arange(exps.shape[-1], dtype=np.int64)
    return exps @ weights


def _gen_arrays(g: Polynomial, p: int):
    if g.field != GF(p):
        g = g.to_field(GF(p))
    items = list(g.items())
    exps = np.array([m for m, _ in items], dtype=np.int64)
    coeffs = np.array([int(c) for _, c in items], dtype=np.int64)
    return exps, coeffs


def degree_piece_rank(I: GradedIdeal, d: int, p: int) -> int:
    """dim of the degree-d part of the ideal, over GF(p)."""
    cols = monomials_of_degree(I.nvars, d)
    ncols = len(cols)
    if ncols == 0:
        return 0
    base = d + 1
    col_exps = np.array(cols, dtype=np.int64)
    keys = _encode(col_exps, base)
    order = np.argsort(keys)
    sorted_keys = keys[order]
    ech = EchelonModP(ncols, p)
    for g, e in zip(I.generators, I.degrees):
        if e > d:
            continue
        shifts = np.array(monomials_of_degree(I.nvars, d - e), dtype=np.int64).reshape(-1, I.nvars)
        gexp, gcoef = _gen_arrays(g, p)
        if not len(gcoef):
            continue
        prod = shifts[:, None, :] + gexp[None, :, :]
        pos = order[np.searchsorted(sorted_keys, _encode(prod, base))]
        rows = np.zeros((len(shifts), ncols), dtype=np.float64)
        rows[np.arange(len(shifts))[:, None], pos] = gcoef[None, :]
        ech.add_rows(rows)
        if ech.rank == ncols:
            break
    return ech.rank


def hf_value(I: GradedIdeal, d: int, p: int = DEFAULT_PRIME) -> int:
    if d < 0:
        raise ValueError("degree must be non-negative")
    return comb(d + I.nvars - 1, I.nvars - 1) - degree_piece_rank(I, d, p)


@dataclass
class HilbertWindow:
    prime: int
    d0: int
    d1: int
    values: List[int]
    nvars: int = 0

    def __post_init__(self):
        if len(self.values) != self.d1 - self.d0 + 1:
            raise ValueError("window length does not match its degree range")
        for d, v in zip(self.degrees, self.values):
            if v < 0 or (self.nvars and v > comb(d + self.nvars - 1, self.nvars - 1)):
                raise ValueError(f"HF value {v} at degree {d} is out of range")

    @property
    def degrees(self) -> range:
        return range(self.d0, self.d1 + 1)

    def as_dict(self) -> Dict[int, int]:
        return dict(zip(self.degrees, self.values))

    def __getitem__(self, d: int) -> int:
        return self.values[d - self.d0]


def hf_window(I: GradedIdeal, d0: int, d1: int, p: int = DEFAULT_PRIME) -> HilbertWindow:
    if d0 > d1 or d0 < 0:
        raise ValueError("need 0 <= d0 <= d1")
    return HilbertWindow(p, d0, d1, [hf_value(I, d, p) for d in range(d0, d1 + 1)], I.nvars)


@dataclass(frozen=True)
class HilbertPolynomial:
    """Polynomial in d with rational coefficients, constant term first."""

    coeffs: Tuple[Fraction, ...]
    valid_from: Optional[int] = None
    window: Optional[Tuple[int, int]] = None

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, d) -> Fraction:
        return sum((c * Fraction(d) ** i for i, c in enumerate(self.coeffs)), Fraction(0))

    def __str__(self) -> str:
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("d" if i == 1 else f"d^{i}")
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = (str(mag) if mag.denominator == 1 else f"({mag})") + "*" + mono
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            return "0"
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(f" {sign} {body}" for sign, body in parts[1:])


def _interpolate(xs: Sequence[int], ys: Sequence[int]) -> Tuple[Fraction, ...]:
    """Coefficients of the unique polynomial of degree < len(xs) through the points."""
    k = len(xs)
    # Vandermonde solve over Q by Gauss-Jordan
    A = [[Fraction(x) ** j for j in range(k)] + [Fraction(y)] for x, y in zip(xs, ys)]
    for c in range(k):
        piv = next(r for r in range(c, k) if A[r][c] != 0)
        A[c], A[piv] = A[piv], A[c]
        inv = 1 / A[c][c]
        A[c] = [a * inv for a in A[c]]
        for r in range(k):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    coeffs = [A[i][k] for i in range(k)]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def fit_hilbert_polynomial(w: HilbertWindow, dim_hint: int, confirm: int = 2) -> HilbertPolynomial:
    """Least-degree polynomial (degree <= dim_hint) agreeing with the tail of ``w``.

    The polynomial is interpolated through the last ``deg + 1`` values and must
    also match at least ``confirm`` earlier values; ``valid_from`` is the first
    degree from which it matches every window value.
    """
    degs = list(w.degrees)
    vals = w.values
    if len(vals) < dim_hint + 1 + confirm:
        raise FitError(f"window of length {len(vals)} too short for degree {dim_hint} plus {confirm} checks")
    for deg in range(dim_hint + 1):
        need = deg + 1 + confirm
        if len(vals) < need:
            break
        coeffs = _interpolate(degs[-(deg + 1):], vals[-(deg + 1):])
        hp = HilbertPolynomial(coeffs)
        if all(hp(d) == v for d, v in zip(degs[-need:], vals[-need:])):
            start = degs[-1]
            for d, v in zip(reversed(degs), reversed(vals)):
                if hp(d) != v:
                    break
                start = d
            return HilbertPolynomial(coeffs, start, (w.d0, w.d1))
    raise FitError(f"no polynomial of degree <= {dim_hint} fits the tail of the window {w.as_dict()}")


@dataclass(frozen=True)
class ProjectiveInvariants:
    dimension: int
    degree: int
    chi: Fraction

    @property
    def genus(self) -> Optional[Fraction]:
        """Arithmetic genus ``1 - chi`` for curves."""
        return 1 - self.chi if self.dimension == 1 else None


def extract_invariants(hp: HilbertPolynomial) -> ProjectiveInvariants:
    dim = hp.degree
    deg = hp.coeffs[-1] * factorial(dim)
    if deg.denominator != 1:
        raise FitError(f"non-integral degree {deg}: the fit is not a Hilbert polynomial")
    return ProjectiveInvariants(dim, int(deg), hp.coeffs[0])


@dataclass(frozen=True)
class HilbertSeriesRat:
    """``numerator(t) / (1 - t)^k`` with integer numerator coefficients (t^0 first)."""

    numerator: Tuple[int, ...]
    k: int

    def expand(self, upto: int) -> List[int]:
        """Coefficients of t^0..t^upto."""
        out = []
        for d in range(upto + 1):
            out.append(sum(c * comb(d - i + self.k - 1, self.k - 1)
                           for i, c in enumerate(self.numerator) if i <= d)
                       if self.k > 0 else (self.numerator[d] if d < len(self.numerator) else 0))
        return out


KLEIN_SURFACE_SERIES = HilbertSeriesRat((1, 3, 6, 10, 15), 3)


def series_match(w: HilbertWindow, s: HilbertSeriesRat) -> bool:
    coeffs = s.expand(w.d1)
    return all(coeffs[d] == v for d, v in zip(w.degrees, w.values))


def _series_rational(num: Sequence[Fraction], k: int, upto: int) -> List[Fraction]:
    return [sum((Fraction(c) * comb(d - i + k - 1, k - 1) for i, c in enumerate(num) if i <= d),
                Fraction(0)) for d in range(upto + 1)]


def series_coefficients_lhs(upto: int, h2_table: Sequence[int] = (55, 15)) -> List[Fraction]:
    """Coefficients of ``7(18t^2 - 21t + 8)/(1-t)^3 - sum_d h2_table[d] t^d``.

    This is sum_d h^0(O_Y(d)) t^d, assembled from the Euler characteristic
    series minus the h^2 corrections in low degrees.
    """
    chi_series = _series_rational([56, -147, 126], 3, upto)
    return [c - (h2_table[d] if d < len(h2_table) else 0) for d, c in enumerate(chi_series)]


def proj_normality_series_check(h2_table: Sequence[int] = (55, 15), upto: int = 30) -> bool:
    """The h^0 series of O_Y(d) agrees with the Hilbert series of the surface."""
    lhs = series_coefficients_lhs(upto, h2_table)
    return lhs == [Fraction(c) for c in KLEIN_SURFACE_SERIES.expand(upto)]


def minor_ideal(f: CubicForm, rank: int, p: int = DEFAULT_PRIME) -> GradedIdeal:
    """Ideal of the (rank+1)-minors of H_f, i.e. the equations of D_rank(f), over GF(p)."""
    fp = f.over(GF(p)) if f.field != GF(p) else f
    H = hessian_data(fp).matrix
    return GradedIdeal(minors(H, rank + 1, dedupe_symmetric=True), fp.nvars)
