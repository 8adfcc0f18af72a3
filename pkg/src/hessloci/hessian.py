"""Cubic forms, Hessian matrices, and the first-order identities they satisfy."""
from __future__ import annotations

import random
from dataclasses import dataclass
from math import factorial
from typing import List, Optional, Sequence

from .polycore import (GF, QQ, Field, PolyMatrix, Polynomial, RationalField, apply_operator,
                       det, monomials_of_degree, poly_parse)

NAMED_CUBICS = ("fermat", "klein6", "cuspidal3")

KLEIN6 = "x0^2*x1 + x1^2*x2 + x2^2*x3 + x3^2*x4 + x4^2*x5 + x5^2*x0"


def klein6_hessian_reference(field: Field = QQ) -> Polynomial:
    """Normalized closed form of hess of the Klein cubic fourfold (indices mod 6).

    sum_{i<3} x_i^3 x_{i+3}^3 - x0...x5 + sum_i x_i x_{i+1}^3 x_{i+3}^2
    - sum_i x_i x_{i+1} x_{i+2} x_{i+3}^3 - sum_{i<2} x_i^2 x_{i+2}^2 x_{i+4}^2
    """
    terms: dict = {}

    def add(coeff: int, powers: dict) -> None:
        e = [0] * 6
        for i, k in powers.items():
            e[i % 6] += k
        terms[tuple(e)] = terms.get(tuple(e), 0) + coeff

    for i in range(3):
        add(1, {i: 3, i + 3: 3})
    add(-1, {i: 1 for i in range(6)})
    for i in range(6):
        add(1, {i: 1, i + 1: 3, i + 3: 2})
        add(-1, {i: 1, i + 1: 1, i + 2: 1, i + 3: 3})
    for i in range(2):
        add(-1, {i: 2, i + 2: 2, i + 4: 2})
    return Polynomial(terms, 6, field)


class SamplingBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class CubicForm:
    poly: Polynomial

    def __post_init__(self):
        if self.poly.is_zero() or self.poly.homogeneous_degree() != 3:
            raise ValueError("a cubic form must be a nonzero homogeneous polynomial of degree 3")

    @property
    def nvars(self) -> int:
        return self.poly.nvars

    @property
    def n(self) -> int:
        return self.poly.nvars - 1

    @property
    def field(self) -> Field:
        return self.poly.field

    def over(self, field: Field) -> "CubicForm":
        return CubicForm(self.poly.to_field(field))

    def __str__(self) -> str:
        return str(self.poly)


@dataclass(frozen=True)
class HessianData:
    matrix: PolyMatrix
    hess: Polynomial
    gradient: tuple

    def at(self, point: Sequence) -> List[List]:
        return self.matrix.evaluate(point)


def hessian_matrix(f: Polynomial) -> PolyMatrix:
    grad = f.gradient()
    n1 = f.nvars
    rows = [[grad[i].diff(j) for j in range(n1)] for i in range(n1)]
    return PolyMatrix(rows, symmetric=True)


def hessian_data(f: CubicForm) -> HessianData:
    grad = tuple(f.poly.gradient())
    n1 = f.nvars
    matrix = PolyMatrix([[grad[i].diff(j) for j in range(n1)] for i in range(n1)], symmetric=True)
    hess = det(matrix)
    d = hess.homogeneous_degree()
    if not hess.is_zero() and d != n1:
        raise AssertionError(f"hessian has degree {d}, expected {n1}")
    return HessianData(matrix, hess, grad)


def directional(f: Polynomial, v: Sequence, order: int = 1) -> Polynomial:
    """``v(f)`` for order 1, ``v(v(f))`` for order 2."""
    if len(v) != f.nvars:
        raise ValueError(f"direction has {len(v)} coordinates, expected {f.nvars}")
    if order not in (1, 2):
        raise ValueError("order must be 1 or 2")
    g = apply_operator(f, v)
    return apply_operator(g, v) if order == 2 else g


def _matvec(M, v, field) -> list:
    return [field.reduce(sum(a * b for a, b in zip(row, v))) for row in M]


def check_magic_identities(f: CubicForm, v: Sequence, w: Sequence,
                           matrix: Optional[PolyMatrix] = None) -> dict:
    """Check the three Hessian identities at ``(v, w)``.

    ``a``: H(v)w = grad(vw(f)) and H(v)w = H(w)v;
    ``b``: 2 grad(f)(v) = H(v)v;
    ``c``: w^T H(v) w = 2 (v(f))(w).

    ``matrix`` overrides the Hessian (used to check the checker).
    """
    F = f.field
    poly = f.poly
    v = [F.reduce(x) for x in v]
    w = [F.reduce(x) for x in w]
    H = matrix if matrix is not None else hessian_matrix(poly)
    Hv, Hw = H.evaluate(v), H.evaluate(w)
    Hv_w = _matvec(Hv, w, F)
    Hw_v = _matvec(Hw, v, F)

    vw_f = apply_operator(apply_operator(poly, w), v)
    zero = [0] * poly.nvars
    grad_vw = [g.eval(zero) for g in vw_f.gradient()]
    a = Hv_w == grad_vw and Hv_w == Hw_v

    grad_at_v = [F.reduce(2 * g.eval(v)) for g in poly.gradient()]
    b = grad_at_v == _matvec(Hv, v, F)

    wHw = F.reduce(sum(x * y for x, y in zip(w, Hv_w)))
    c = wHw == F.reduce(2 * apply_operator(poly, v).eval(w))
    return {"a": a, "b": b, "c": c}


def euler_identity_check(G: Polynomial, v: Sequence) -> bool:
    """True iff ``v^m(G) = m! G(v)`` for ``G`` homogeneous of degree ``m``."""
    m = G.homogeneous_degree()
    if m is None:
        raise ValueError("euler_identity_check needs a homogeneous polynomial")
    if len(v) != G.nvars:
        raise ValueError("direction length does not match the variable count")
    g = G
    for _ in range(m):
        g = apply_operator(g, v)
    lhs = g.eval([0] * G.nvars)
    return lhs == G.field.reduce(factorial(m) * G.eval(v))


def named_cubic(name: str, n: int, field: Field = QQ) -> CubicForm:
    if name == "fermat":
        if n < 1:
            raise ValueError("fermat needs n >= 1")
        text = " + ".join(f"x{i}^3" for i in range(n + 1))
    elif name == "klein6":
        if n != 5:
            raise ValueError("klein6 lives in P^5 (n = 5)")
        text = KLEIN6
    elif name == "cuspidal3":
        if n != 2:
            raise ValueError("cuspidal3 lives in P^2 (n = 2)")
        text = "x0^2*x2 - x1^3"
    else:
        raise ValueError(f"unknown cubic {name!r}; choose from {', '.join(NAMED_CUBICS)}")
    return CubicForm(poly_parse(text, n + 1, field))


def random_cubic(n: int, field: Field, rng: random.Random) -> CubicForm:
    if isinstance(field, RationalField):
        raise ValueError("random cubics are drawn over a prime field")
    while True:
        terms = {m: rng.randrange(field.p) for m in monomials_of_degree(n + 1, 3)}
        poly = Polynomial(terms, n + 1, field)
        if not poly.is_zero():
            return CubicForm(poly)


def random_smooth_cubic(n: int, p: int, seed: int, max_tries: int = 50) -> CubicForm:
    """Seeded uniform cubic over GF(p) with no GF(p)-rational singular point and h_f != 0."""
    from .strata import has_rational_singular_point

    field = GF(p)
    rng = random.Random(f"cubic:{n}:{p}:{seed}")
    for _ in range(max_tries):
        f = random_cubic(n, field, rng)
        if has_rational_singular_point(f):
            continue
        if hessian_data(f).hess.is_zero():
            continue
        return f
    raise SamplingBudgetExceeded(f"no acceptable cubic after {max_tries} draws (n={n}, p={p})")
