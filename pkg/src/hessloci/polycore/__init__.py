from .fields import GF, QQ, Field, PrimeField, RationalField, is_prime
from .linalg import EchelonModP, kernel_ff, rank_ff, rank_mod_p, rref_ff
from .matrix import PolyMatrix, det, det_cofactor, minors
from .parse import PolySyntaxError, poly_parse
from .poly import (Monomial, Polynomial, apply_operator, monomials_of_degree,
                   multinomial_dimension)


def poly_diff(f: Polynomial, i: int) -> Polynomial:
    return f.diff(i)


def poly_eval(f: Polynomial, point):
    return f.eval(point)


__all__ = [
    "GF", "QQ", "Field", "PrimeField", "RationalField", "is_prime",
    "EchelonModP", "kernel_ff", "rank_ff", "rank_mod_p", "rref_ff",
    "PolyMatrix", "det", "det_cofactor", "minors",
    "PolySyntaxError", "poly_parse",
    "Monomial", "Polynomial", "apply_operator", "monomials_of_degree",
    "multinomial_dimension", "poly_diff", "poly_eval",
]
