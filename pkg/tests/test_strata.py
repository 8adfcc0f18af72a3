import itertools
import random

import numpy as np
import pytest

from hessloci import strata
from hessloci.hessian import hessian_data, named_cubic, random_smooth_cubic
from hessloci.polycore import GF, rank_ff
from hessloci.strata import ProjPoint


def test_projpoint_normalization():
    assert ProjPoint.normalize((0, 3, 6), 7) == ProjPoint((0, 1, 2))
    assert str(ProjPoint((0, 0, 1))) == "(0:0:1)"
    with pytest.raises(ValueError):
        ProjPoint.normalize((0, 0, 0), 7)


def test_iter_points_covers_projective_space():
    for n, p in [(1, 5), (2, 3), (3, 3)]:
        pts = np.vstack(list(strata.iter_points(n, p, chunk=7)))
        assert len(pts) == strata.count_points(n, p) == (p ** (n + 1) - 1) // (p - 1)
        keys = {tuple(r) for r in pts}
        assert len(keys) == len(pts)
        assert all(r[np.flatnonzero(r)[0]] == 1 for r in pts)


def test_batch_rank_matches_scalar_rank():
    rng = np.random.default_rng(0)
    p = 11
    M = rng.integers(0, p, (200, 4, 4))
    M[:50, 3] = M[:50, 0]
    M[50:60] = 0
    ranks = strata.batch_rank(M, p)
    assert [int(r) for r in ranks] == [rank_ff(m.tolist(), p) for m in M]


def test_stratify_fermat_plane():
    f = named_cubic("fermat", 2).over(GF(7))
    rep = strata.stratify(f, 7)
    assert sum(rep.counts) == strata.count_points(2, 7)
    on_axes = sum(1 for x in itertools.product(range(7), repeat=3)
                  if any(x) and x[0] * x[1] * x[2] % 7 == 0) // 6
    assert rep.at_most(2) == on_axes


def test_stratify_klein_coordinate_points():
    f = named_cubic("klein6", 5).over(GF(11))
    rep = strata.stratify(f, 11)
    assert rep.at_most(3) >= 6
    assert ProjPoint((1, 0, 0, 0, 0, 0)) in rep.points[3]


def test_stratify_cuspidal():
    f = named_cubic("cuspidal3", 2).over(GF(11))
    rep = strata.stratify(f, 11)
    assert rep.counts == [0, 2, 21, 110]
    assert rep.points[1] == [ProjPoint((0, 0, 1)), ProjPoint((0, 1, 0))]


def test_budget():
    with pytest.raises(strata.BudgetExceeded):
        strata.check_budget(5, 101)
    with pytest.raises(strata.BudgetExceeded):
        strata.stratify(named_cubic("fermat", 3).over(GF(31)), 31, budget=1000)


@pytest.mark.parametrize("n", [2, 3])
def test_theorem_a_random(n):
    for seed in range(3):
        cert = strata.verify_theorem_A(random_smooth_cubic(n, 11, seed), 11)
        assert cert.passed and cert.singular_points == cert.low_rank_points
        assert "necessary condition only" in cert.caveat


def test_theorem_a_cuspidal_fails():
    cert = strata.verify_theorem_A(named_cubic("cuspidal3", 2).over(GF(11)), 11)
    assert not cert.passed
    assert cert.counterexample["reason"] == "singular on H_f but rank n"


def test_gamma_pairs_symmetric_and_valid():
    f = random_smooth_cubic(2, 11, 1)
    pairs = strata.gamma_pairs(f, 11)
    s = {(q.x, q.y) for q in pairs}
    assert all((y, x) in s for x, y in s)
    assert all(q.x != q.y for q in pairs)
    hd = hessian_data(f)
    for q in pairs[:20]:
        Hx = hd.at(q.x.coords)
        assert all(sum(a * b for a, b in zip(row, q.y.coords)) % 11 == 0 for row in Hx)


def test_gamma_pair_validation():
    f = named_cubic("cuspidal3", 2).over(GF(11))
    cusp = ProjPoint((0, 0, 1))
    assert strata.make_gamma_pair(f, cusp, cusp).x == cusp
    with pytest.raises(ValueError):
        strata.make_gamma_pair(f, ProjPoint((1, 0, 0)), ProjPoint((1, 0, 0)))
    pairs = strata.gamma_pairs(f, 11)
    assert any(q.x == q.y == cusp for q in pairs)


def test_triangles_and_singular_pairs():
    f = named_cubic("cuspidal3", 2).over(GF(11))
    tris = strata.find_triangles(f, 11)
    assert tris
    s = set(tris)
    for t in tris:
        assert all(perm in s for perm in itertools.permutations(t))
    hd = hessian_data(f)
    for t in tris:
        for v in t:
            assert rank_ff(hd.at(v.coords), 11) <= 1
    assert strata.gamma_singular_pairs(f, 11)
    for seed in range(3):
        g = random_smooth_cubic(3, 11, seed)
        if not strata.find_triangles(g, 11):
            assert strata.gamma_singular_pairs(g, 11) == []


def test_rank_bound_lemma():
    assert strata.rank_bound_lemma_check(200, 0)
    rng = random.Random(1)
    phi, W = strata.random_isotropic_instance(6, 6, 31, rng)
    assert rank_ff(phi, 31) == 0
    phi, W = strata.random_isotropic_instance(6, 4, 31, rng)
    assert rank_ff(phi, 31) <= 4
