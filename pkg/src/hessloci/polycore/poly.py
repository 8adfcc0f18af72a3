"""Sparse multivariate polynomials over a pluggable coefficient field."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial
from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple

from .fields import QQ, Field, PrimeField, Scalar

Monomial = Tuple[int, ...]


def grlex_key(m: Monomial):
    return (sum(m), m)


def monomials_of_degree(nvars: int, d: int) -> list[Monomial]:
    """All exponent vectors of total degree ``d``, graded-lex descending."""
    if d < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return out


def _var_name(i: int) -> str:
    return f"x{i}"


class Polynomial:
    """Immutable sparse polynomial ``{exponent tuple: nonzero coefficient}``.

    Terms are stored already reduced in ``field``; zero coefficients never
    appear. Arithmetic between polynomials requires the same field and
    variable count.
    """

    __slots__ = ("_terms", "nvars", "field", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar], nvars: int,
                 field: Field = QQ, *, homogeneous: bool = False, _clean: bool = False):
        self.nvars = nvars
        self.field = field
        if _clean:
            self._terms = dict(terms)
        else:
            clean: Dict[Monomial, Scalar] = {}
            for m, c in terms.items():
                m = tuple(int(e) for e in m)
                if len(m) != nvars or any(e < 0 for e in m):
                    raise ValueError(f"bad exponent vector {m} for {nvars} variables")
                c = field.reduce(c)
                if c != 0:
                    clean[m] = c
            self._terms = clean
        self._hash = None
        if homogeneous and self.homogeneous_degree() is None:
            raise ValueError("polynomial flagged homogeneous has terms of several degrees")

    # construction helpers
    @classmethod
    def zero(cls, nvars: int, field: Field = QQ) -> "Polynomial":
        return cls({}, nvars, field, _clean=True)

    @classmethod
    def constant(cls, c: Scalar, nvars: int, field: Field = QQ) -> "Polynomial":
        return cls({(0,) * nvars: c}, nvars, field)

    @classmethod
    def var(cls, i: int, nvars: int, field: Field = QQ) -> "Polynomial":
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        e = [0] * nvars
        e[i] = 1
        return cls({tuple(e): 1}, nvars, field, _clean=True)

    @classmethod
    def linear_form(cls, coeffs: Sequence[Scalar], field: Field = QQ) -> "Polynomial":
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return cls(terms, n, field)

    # basic accessors
    @property
    def terms(self) -> Dict[Monomial, Scalar]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Scalar]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, m: Monomial) -> Scalar:
        return self._terms.get(tuple(m), self.field.reduce(0))

    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def homogeneous_degree(self) -> Optional[int]:
        """Common degree of all terms, ``None`` if not homogeneous (0 for zero poly)."""
        degs = {sum(m) for m in self._terms}
        if not degs:
            return 0
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self) -> bool:
        return self.homogeneous_degree() is not None

    def sorted_terms(self) -> list[Tuple[Monomial, Scalar]]:
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_term(self) -> Tuple[Monomial, Scalar]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return self.sorted_terms()[0]

    def to_field(self, field: Field) -> "Polynomial":
        """Reinterpret coefficients in another field (integer/rational lift)."""
        if isinstance(self.field, PrimeField) and not isinstance(field, PrimeField):
            terms = {m: self.field.signed(c) for m, c in self._terms.items()}
        else:
            terms = self._terms
        return Polynomial(terms, self.nvars, field)

    # arithmetic
    def _check(self, other: "Polynomial"):
        if self.nvars != other.nvars or self.field != other.field:
            raise ValueError("polynomials live in different rings")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.nvars, self.field)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        red = self.field.reduce
        terms = dict(self._terms)
        for m, c in other._terms.items():
            s = red(terms.get(m, 0) + c)
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Polynomial(terms, self.nvars, self.field, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        red = self.field.reduce
        return Polynomial({m: red(-c) for m, c in self._terms.items()},
                          self.nvars, self.field, _clean=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> "Polynomial":
        red = self.field.reduce
        c = red(c)
        if c == 0:
            return Polynomial.zero(self.nvars, self.field)
        return Polynomial({m: red(v * c) for m, v in self._terms.items()},
                          self.nvars, self.field, _clean=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: Dict[Monomial, Scalar] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                acc[m] = acc.get(m, 0) + c1 * c2
        red = self.field.reduce
        out = {}
        for m, c in acc.items():
            c = red(c)
            if c != 0:
                out[m] = c
        return Polynomial(out, self.nvars, self.field, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(1, self.nvars, self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_monomial(self, mono: Monomial) -> "Polynomial":
        return Polynomial({tuple(a + b for a, b in zip(m, mono)): c for m, c in self._terms.items()},
                          self.nvars, self.field, _clean=True)

    # calculus and evaluation
    def diff(self, i: int) -> "Polynomial":
        """Partial derivative with respect to ``x_i``."""
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable index {i} out of range for {self.nvars} variables")
        red = self.field.reduce
        out = {}
        for m, c in self._terms.items():
            e = m[i]
            if e == 0:
                continue
            c2 = red(c * e)
            if c2 != 0:
                m2 = m[:i] + (e - 1,) + m[i + 1:]
                out[m2] = c2
        return Polynomial(out, self.nvars, self.field, _clean=True)

    def gradient(self) -> list["Polynomial"]:
        return [self.diff(i) for i in range(self.nvars)]

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = point[0]
        return self.eval(point)

    def eval(self, point: Sequence[Scalar]) -> Scalar:
        if len(point) != self.nvars:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.nvars}")
        red = self.field.reduce
        pt = [red(x) for x in point]
        total = 0
        for m, c in self._terms.items():
            t = c
            for x, e in zip(pt, m):
                if e:
                    t = t * x ** e
            total += t
        return red(total)

    def substitute(self, values: Sequence["Polynomial"]) -> "Polynomial":
        """Compose: replace ``x_i`` by ``values[i]``."""
        if len(values) != self.nvars:
            raise ValueError("need one substitution per variable")
        nv = values[0].nvars
        result = Polynomial.zero(nv, self.field)
        for m, c in self._terms.items():
            t = Polynomial.constant(c, nv, self.field)
            for v, e in zip(values, m):
                if e:
                    t = t * v ** e
            result = result + t
        return result

    # comparisons
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(other, self.nvars, self.field)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.nvars == other.nvars and self.field == other.field
                and self._terms == other._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, self.field, frozenset(self._terms.items())))
        return self._hash

    def proportionality_scalar(self, other: "Polynomial") -> Optional[Scalar]:
        """Return ``c`` with ``self == c * other`` (c nonzero), else ``None``.

        Two zero polynomials are proportional with scalar 1.
        """
        self._check(other)
        if set(self._terms) != set(other._terms):
            return None
        if not self._terms:
            return self.field.reduce(1)
        m0 = next(iter(other._terms))
        c = self.field.div(self._terms[m0], other._terms[m0])
        red = self.field.reduce
        for m, v in other._terms.items():
            if red(v * c) != self._terms[m]:
                return None
        return c

    def is_proportional(self, other: "Polynomial") -> bool:
        return self.proportionality_scalar(other) is not None

    # printing
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms():
            c = self.field.signed(c)
            neg = c < 0
            a = -c if neg else c
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(_var_name(i))
                elif e > 1:
                    factors.append(f"{_var_name(i)}^{e}")
            if a != 1 or not factors:
                factors.insert(0, str(a))
            body = "*".join(factors)
            if not pieces:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append(("- " if neg else "+ ") + body)
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r}, nvars={self.nvars}, field={self.field})"


def apply_operator(f: Polynomial, v: Sequence[Scalar]) -> Polynomial:
    """The derivation ``v = sum_k v_k d/dx_k`` applied to ``f``."""
    result = Polynomial.zero(f.nvars, f.field)
    for k, vk in enumerate(v):
        if f.field.reduce(vk) != 0:
            result = result + f.diff(k).scale(vk)
    return result


def multinomial_dimension(nvars: int, d: int) -> int:
    """dim of the degree-d piece of a polynomial ring in ``nvars`` variables."""
    if d < 0:
        return 0
    return factorial(d + nvars - 1) // (factorial(d) * factorial(nvars - 1))

