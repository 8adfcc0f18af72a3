import random

import pytest

from hessloci.hessian import (CubicForm, SamplingBudgetExceeded, check_magic_identities, directional,
                              euler_identity_check, hessian_data, klein6_hessian_reference,
                              named_cubic, random_cubic, random_smooth_cubic)
from hessloci.polycore import GF, PolyMatrix, Polynomial, monomials_of_degree, poly_parse
from hessloci.strata import has_rational_singular_point


def test_cubic_form_validation():
    with pytest.raises(ValueError):
        CubicForm(poly_parse("x0^2", 2))
    with pytest.raises(ValueError):
        CubicForm(poly_parse("x0^3 + x1", 2))
    with pytest.raises(ValueError):
        CubicForm(Polynomial.zero(3))


def test_hessian_data_examples():
    hd = hessian_data(CubicForm(poly_parse("x0^3 + x1^3", 2)))
    assert hd.matrix[0, 0] == poly_parse("6*x0", 2) and hd.matrix[0, 1].is_zero()
    assert hd.hess == poly_parse("36*x0*x1", 2)
    assert hessian_data(named_cubic("cuspidal3", 2)).hess == poly_parse("24*x0^2*x1", 3)


def test_hessian_entries_are_second_partials():
    f = named_cubic("klein6", 5)
    hd = hessian_data(f)
    for i in range(6):
        for j in range(6):
            assert hd.matrix[i, j] == f.poly.diff(i).diff(j)
    assert hd.hess.homogeneous_degree() == 6


def test_klein_hessian_scalar():
    h = hessian_data(named_cubic("klein6", 5)).hess
    assert h.proportionality_scalar(klein6_hessian_reference()) == 64


def test_directional():
    f = named_cubic("klein6", 5).poly
    e2 = [0, 0, 1, 0, 0, 0]
    assert directional(f, e2) == f.diff(2)
    v = [1, -2, 3, 0, 5, -1]
    third = directional(directional(f, v, 2), v)
    assert third == Polynomial.constant(6 * f.eval(v), 6)
    assert directional(f, [0] * 6).is_zero()
    with pytest.raises(ValueError):
        directional(f, [1, 2])
    with pytest.raises(ValueError):
        directional(f, v, 3)


def test_magic_identities_examples():
    k = named_cubic("klein6", 5).over(GF(31))
    assert check_magic_identities(k, [0] * 6, [0] * 6) == {"a": True, "b": True, "c": True}
    rng = random.Random(7)
    for _ in range(100):
        v = [rng.randrange(31) for _ in range(6)]
        w = [rng.randrange(31) for _ in range(6)]
        assert all(check_magic_identities(k, v, w).values())
    f = random_cubic(3, GF(101), rng)
    assert all(check_magic_identities(f, [1, 2, 3, 4], [5, 6, 7, 8]).values())


def test_magic_identities_over_q():
    f = named_cubic("fermat", 3)
    assert all(check_magic_identities(f, [1, -1, 2, 0], [3, 1, 1, -2]).values())


def test_corrupted_hessian_is_detected():
    f = named_cubic("fermat", 2).over(GF(31))
    H = hessian_data(f).matrix
    rows = [[H[i, j] for j in range(3)] for i in range(3)]
    bump = Polynomial.var(2, 3, GF(31))
    rows[0][1] = rows[0][1] + bump
    rows[1][0] = rows[1][0] + bump
    res = check_magic_identities(f, [1, 2, 3], [4, 5, 6], matrix=PolyMatrix(rows, symmetric=True))
    assert not all(res.values())


def test_euler_identity():
    assert euler_identity_check(poly_parse("x0^2", 3), [1, 0, 0])
    assert euler_identity_check(poly_parse("x0*x1*x2", 3), [1, 1, 1])
    rng = random.Random(11)
    F = GF(32003)
    for _ in range(100):
        m = rng.choice([2, 3, 4])
        G = Polynomial({e: rng.randrange(F.p) for e in monomials_of_degree(3, m)}, 3, F)
        if G.is_zero():
            continue
        assert euler_identity_check(G, [rng.randrange(F.p) for _ in range(3)])
    with pytest.raises(ValueError):
        euler_identity_check(poly_parse("x0^2 + x1", 2), [1, 1])


def test_named_cubics():
    assert named_cubic("fermat", 2).poly == poly_parse("x0^3+x1^3+x2^3", 3)
    assert len(named_cubic("klein6", 5).poly.terms) == 6
    assert named_cubic("cuspidal3", 2).poly == poly_parse("x0^2*x2 - x1^3", 3)
    for bad in [("klein6", 4), ("cuspidal3", 3), ("nope", 2)]:
        with pytest.raises(ValueError):
            named_cubic(*bad)


def test_random_smooth_cubic():
    f = random_smooth_cubic(2, 11, 4)
    assert f == random_smooth_cubic(2, 11, 4)
    assert f != random_smooth_cubic(2, 11, 5)
    assert not has_rational_singular_point(f)
    assert not hessian_data(f).hess.is_zero()
    with pytest.raises(SamplingBudgetExceeded):
        random_smooth_cubic(2, 11, 0, max_tries=0)
