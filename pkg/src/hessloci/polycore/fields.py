"""Coefficient fields: prime fields GF(p) and the rationals.

Elements are plain Python objects (``int`` for GF(p), ``Fraction`` for Q), so
polynomial code can use the ordinary arithmetic operators and call
:meth:`reduce` once per accumulated coefficient.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """GF(p) for an odd prime ``p < 2**31``; elements are ints in ``[0, p-1]``."""

    p: int

    def __post_init__(self):
        if not (2 < self.p < 2**31) or not is_prime(self.p):
            raise ValueError(f"expected an odd prime below 2^31, got {self.p}")

    @property
    def characteristic(self) -> int:
        return self.p

    def reduce(self, x: Scalar) -> int:
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({self.p})")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, x: int) -> int:
        x %= self.p
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def div(self, a: Scalar, b: Scalar) -> int:
        return self.reduce(a) * self.inv(self.reduce(b)) % self.p

    def signed(self, x: int) -> int:
        """Symmetric representative in ``(-p/2, p/2]``, used for printing."""
        x %= self.p
        return x - self.p if x > self.p // 2 else x

    def __str__(self) -> str:
        return f"GF({self.p})"


@dataclass(frozen=True)
class RationalField:
    """The field Q, elements stored as reduced ``Fraction`` (denominator > 0)."""

    @property
    def characteristic(self) -> int:
        return 0

    def reduce(self, x: Scalar) -> Fraction:
        return x if isinstance(x, Fraction) else Fraction(x)

    def inv(self, x: Scalar) -> Fraction:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(x)

    def div(self, a: Scalar, b: Scalar) -> Fraction:
        return Fraction(a) / Fraction(b)

    def signed(self, x: Fraction) -> Fraction:
        return x

    def __str__(self) -> str:
        return "QQ"


Field = Union[PrimeField, RationalField]
QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)
