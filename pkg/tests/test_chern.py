from fractions import Fraction
from math import comb

import pytest

from hessloci import chern
from hessloci.chern import IntersectionClass as IC


def test_intersection_ring_truncates():
    H = IC.monomial(1, 1, 3)
    assert H * H * H == IC.monomial(1, 3, 3)
    assert (H * H * H * H).coeffs == (0, 0, 0, 0)
    assert str(IC([1, Fraction(-1, 2), 0, 3], 3)) == "1 + (-1/2)H + 3H^3"
    with pytest.raises(ValueError):
        IC([1], 2) + IC([1], 3)


def test_expected_codim():
    assert chern.expected_codim(5, 4) == 3
    assert chern.expected_codim(3, 2) == 3
    assert all(chern.expected_codim(n, n + 1) == 0 for n in range(1, 8))
    assert all(chern.expected_codim(n, n - 1) == 3 for n in range(2, 11))
    with pytest.raises(ValueError):
        chern.expected_codim(3, 0)


def test_degree_qk():
    assert (chern.degree_Qk(3, 2), chern.degree_Qk(4, 3), chern.degree_Qk(5, 4)) == (10, 20, 35)
    assert all(chern.degree_Qk(n, n) == n + 1 for n in range(1, 11))
    with pytest.raises(ValueError):
        chern.degree_Qk(3, 4)


def test_degree_qk_rank_one_is_veronese():
    # rank <= 1 quadrics form the Veronese image of P^n, of degree 2^n
    assert all(chern.degree_Qk(n, 1) == 2**n for n in range(1, 8))


def test_canonical_double_and_curves():
    assert chern.canonical_double(5, 4) == 6
    assert chern.canonical_double(4, 3) == 5
    assert all(chern.canonical_double(n, n) == 0 for n in range(1, 6))
    assert chern.curve_genus(chern.canonical_double(4, 3), 20) == 26
    c1, c2, c3 = (chern.smallest_locus_curve(s) for s in (1, 2, 3))
    assert (c1.n, c1.k, c1.degree, c1.genus) == (2, 2, 3, 1)
    assert (c2.n, c2.k, c2.degree, c2.genus) == (4, 3, 20, 26)
    assert (c3.n, c3.k, c3.degree, c3.genus) == (7, 5, 672, 2689)
    # the curve relation is the canonical relation at (n_s, k_s)
    for s in range(1, 5):
        c = chern.smallest_locus_curve(s)
        assert chern.canonical_double(c.n, c.k) == (comb(s + 1, 2) + 2) * (s - 1)
        assert chern.expected_codim(c.n, c.k) == c.n - 1


def test_onerow_series():
    assert [chern.q_schur_onerow(r).coefficient(r) for r in range(4)] == [1, 6, 18, Fraction(73, 2)]
    with pytest.raises(ValueError):
        chern.q_schur_onerow(6)
    # generating series oracle: prod (1 + x t)/(1 - x t) with six roots x = 1/2
    num = [Fraction(comb(6, i), 2**i) for i in range(7)]
    inv = [Fraction(comb(5 + i, 5), 2**i) for i in range(6)]
    series = [sum(num[i] * inv[r - i] for i in range(min(r, 6) + 1)) for r in range(6)]
    assert series == [chern._onerow_coeff(r) for r in range(6)]


def test_tworow_table():
    for (a, b), val in chern.PAPER_Q_TABLE.items():
        assert chern.q_schur_tworow(a, b) == IC.monomial(val, a + b, 5)
    with pytest.raises(ValueError):
        chern.q_schur_tworow(1, 1)


def test_pratt_euler():
    assert chern.pratt_euler() == 357
    assert chern.pratt_euler("paper") == 357
    assert chern.pratt_euler(skip=(1, 1)) != 357
    with pytest.raises(ValueError):
        chern.pratt_euler("guess")


def test_surface_invariants():
    s = chern.surface_invariants()
    assert (s.e, s.K2, s.KH, s.H2, s.chi, s.pg, s.q, s.h11) == (357, 315, 105, 35, 56, 55, 0, 245)
    assert s.chi_twist(5) == 231
    assert [s.chi_twist(m) for m in range(6, 12)] == [371, 546, 756, 1001, 1281, 1596]
    with pytest.raises(ValueError):
        chern.surface_invariants(e=358)
    with pytest.raises(ValueError):
        chern.SurfaceInvariants(357, 315, 105, 35, 56, 56, 0, 245)


def test_eta_certificate():
    assert chern.eta_certificate(hf3=56)
    assert not chern.eta_certificate(pg=56, hf3=56)
    assert chern.klein_hf(3) == 56
