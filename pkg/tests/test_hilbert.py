from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hessloci import hilbert
from hessloci.hessian import named_cubic, random_smooth_cubic
from hessloci.hilbert import (FitError, GradedIdeal, HilbertPolynomial, HilbertSeriesRat, HilbertWindow,
                              extract_invariants, fit_hilbert_polynomial, hf_value, hf_window,
                              minor_ideal, series_match)
from hessloci.polycore import GF, poly_parse

P = 32003


@pytest.fixture(scope="module")
def klein_ideal():
    return minor_ideal(named_cubic("klein6", 5), 4)


def test_trivial_windows():
    assert hf_window(GradedIdeal([], 3), 0, 3).values == [1, 3, 6, 10]
    assert hf_window(GradedIdeal([poly_parse("x0", 2, GF(P))]), 0, 3).values == [1, 1, 1, 1]


def test_complete_intersections():
    # two quadrics in P^3 meet in a quartic elliptic curve: HF = 4d for d >= 1
    F = GF(P)
    I = GradedIdeal([poly_parse("x0*x1 - x2*x3", 4, F), poly_parse("x0^2 + x1^2 + x2^2 + x3^2", 4, F)])
    w = hf_window(I, 1, 8)
    assert w.values == [4 * d for d in range(1, 9)]
    hp = fit_hilbert_polynomial(w, 1)
    inv = extract_invariants(hp)
    assert (inv.dimension, inv.degree, inv.chi, inv.genus) == (1, 4, 0, 1)


def test_ideal_validation():
    with pytest.raises(ValueError):
        GradedIdeal([poly_parse("x0^2 + x1", 2)])
    with pytest.raises(ValueError):
        GradedIdeal([poly_parse("x0", 2), poly_parse("x0", 3)])
    with pytest.raises(ValueError):
        GradedIdeal([])
    g = poly_parse("x0*x1", 2)
    assert GradedIdeal([g, g, poly_parse("x1^2", 2), g]).duplicates == [(0, 1), (0, 3)]
    with pytest.raises(ValueError):
        hf_value(GradedIdeal([g]), -1)


def test_klein_prefix(klein_ideal):
    assert len(klein_ideal) == 21 and set(klein_ideal.degrees) == {5}
    w = hf_window(klein_ideal, 0, 5)
    assert w.values == [1, 6, 21, 56, 126, 231]
    assert series_match(w, hilbert.KLEIN_SURFACE_SERIES)
    assert not series_match(w, HilbertSeriesRat((1, 3, 6, 10, 14), 3))


def test_klein_d10_matches_series(klein_ideal):
    assert hf_value(klein_ideal, 10) == hilbert.KLEIN_SURFACE_SERIES.expand(10)[10] == 1281


def test_prime_independence_small_ideals():
    f = random_smooth_cubic(3, 11, 2)
    a = hf_window(minor_ideal(f.over(GF(32003)), 2, 32003), 0, 9, 32003).values
    b = hf_window(minor_ideal(f.over(GF(65537)), 2, 65537), 0, 9, 65537).values
    assert a == b
    assert a[-3:] == [10, 10, 10]


def test_window_validation():
    with pytest.raises(ValueError):
        HilbertWindow(P, 0, 2, [1, 2])
    with pytest.raises(ValueError):
        HilbertWindow(P, 0, 1, [1, 5], nvars=2)
    with pytest.raises(ValueError):
        hf_window(GradedIdeal([], 2), 3, 1)


def test_fit_and_invariants():
    w = HilbertWindow(P, 6, 11, [371, 546, 756, 1001, 1281, 1596])
    hp = fit_hilbert_polynomial(w, 2)
    assert hp.coeffs == (56, Fraction(-105, 2), Fraction(35, 2))
    assert str(hp) == "(35/2)*d^2 - (105/2)*d + 56"
    inv = extract_invariants(hp)
    assert (inv.dimension, inv.degree, inv.chi) == (2, 35, 56)
    assert extract_invariants(HilbertPolynomial((Fraction(-25), Fraction(20)))).genus == 26
    assert extract_invariants(HilbertPolynomial((Fraction(10),))).degree == 10


def test_fit_reports_first_valid_degree():
    w = HilbertWindow(P, 0, 6, [1, 4, 10, 10, 10, 10, 10])
    hp = fit_hilbert_polynomial(w, 0)
    assert hp.coeffs == (10,) and hp.valid_from == 2


def test_fit_errors():
    with pytest.raises(FitError):
        fit_hilbert_polynomial(HilbertWindow(P, 0, 5, [1, 2, 4, 8, 16, 32]), 2)
    with pytest.raises(FitError):
        fit_hilbert_polynomial(HilbertWindow(P, 0, 2, [1, 2, 3]), 2)
    with pytest.raises(FitError):
        extract_invariants(HilbertPolynomial((Fraction(0), Fraction(0), Fraction(1, 4))))


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=1, max_size=4), st.integers(0, 5))
def test_fit_recovers_polynomials(coeffs, start):
    # interpolation oracle: values of a known integer polynomial are fitted back exactly
    deg = len(coeffs) - 1
    vals = [sum(c * d**i for i, c in enumerate(coeffs)) + 10**6 for d in range(start, start + deg + 3)]
    w = HilbertWindow(P, start, start + deg + 2, vals)
    hp = fit_hilbert_polynomial(w, deg)
    target = list(coeffs)
    target[0] += 10**6
    while len(target) > 1 and target[-1] == 0:
        target.pop()
    assert list(hp.coeffs) == target


def test_series_expand():
    assert HilbertSeriesRat((1,), 3).expand(3) == [comb(d + 2, 2) for d in range(4)]
    assert series_match(hf_window(GradedIdeal([], 3), 0, 3), HilbertSeriesRat((1,), 3))
    assert HilbertSeriesRat((1, 2), 0).expand(3) == [1, 2, 0, 0]


def test_projective_normality_series():
    assert hilbert.proj_normality_series_check(upto=30)
    assert not hilbert.proj_normality_series_check(h2_table=(55,))
    assert hilbert.series_coefficients_lhs(5)[5] == 231
