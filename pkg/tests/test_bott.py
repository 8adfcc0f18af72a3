from itertools import combinations_with_replacement
from math import comb

import pytest

from hessloci import bott
from hessloci.bott import CohomologyEntry, Partition, WeightVector


def partitions_up_to(size, parts):
    def rec(left, maxpart, k):
        if k == 0 or left == 0:
            yield ()
            return
        for first in range(min(left, maxpart), 0, -1):
            for rest in rec(left - first, first, k - 1):
                yield (first,) + rest
    for s in range(size + 1):
        for lam in rec(s, s, parts):
            if sum(lam) == s:
                yield Partition(lam)


def test_partition_basics():
    lam = Partition((3, 1, 0, 0))
    assert lam.parts == (3, 1) and lam.size == 4
    assert lam.conjugate() == Partition((2, 1, 1))
    assert lam.frobenius() == ((2,), (1,))
    assert Partition.from_frobenius((2, 0), (1, 0)) == Partition((3, 2))
    for bad in [(1, 2), (-1,)]:
        with pytest.raises(ValueError):
            Partition(bad)


def test_frobenius_roundtrip():
    for lam in partitions_up_to(9, 5):
        assert Partition.from_frobenius(*lam.frobenius()) == lam


def test_weight_vector():
    assert WeightVector.for_sub_schur(Partition((3, 1))).entries == (0, 0, 3, 1, 0, 0)
    with pytest.raises(ValueError):
        WeightVector((0, 1, 0, 0, 0, 0))
    with pytest.raises(ValueError):
        WeightVector.for_sub_schur(Partition((1, 1, 1, 1, 1)))


def test_weyl_dimension():
    assert bott.weyl_dimension((1, 1, 1, 1, 0, 0)) == 15
    assert bott.weyl_dimension((3, 1, 0, 0)) == 45
    assert bott.weyl_dimension((2, 0, 0, 0)) == 10
    with pytest.raises(ValueError):
        bott.weyl_dimension((0, 1))


def test_decompose_examples():
    assert bott.wedge_sym2_decompose(1) == [Partition((2,))]
    assert bott.wedge_sym2_decompose(2) == [Partition((3, 1))]
    assert bott.wedge_sym2_decompose(3) == [Partition((4, 1, 1)), Partition((3, 3))]
    with pytest.raises(ValueError):
        bott.wedge_sym2_decompose(11)


@pytest.mark.parametrize("rank", [2, 3, 4])
def test_decompose_matches_character(rank):
    for j in range(1, comb(rank + 1, 2) + 1):
        brute = bott.wedge_sym2_brute(j, rank)
        assert brute == {lam: 1 for lam in bott.wedge_sym2_decompose(j, rank)}
        total = sum(bott.weyl_dimension(lam.padded(rank)) for lam in bott.wedge_sym2_decompose(j, rank))
        assert total == comb(comb(rank + 1, 2), j)


def test_schur_expand_oracle():
    # h_2 = s_(2) and e_2 = s_(1,1) in 3 variables
    h2 = {e: 1 for e in [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1)]}
    assert bott.schur_expand(h2, 3) == {Partition((2,)): 1}
    e2 = {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1}
    assert bott.schur_expand(e2, 3) == {Partition((1, 1)): 1}


def test_bott_examples():
    assert bott.bott_cohomology(Partition((2,))) == CohomologyEntry(None, 0)
    assert bott.bott_cohomology(Partition((3, 1))) == CohomologyEntry(2, 15)
    assert bott.bott_cohomology(Partition()) == CohomologyEntry(0, 1)
    assert bott.bott_cohomology(Partition((5, 5, 5, 5))).vanishes


def test_bott_matches_weyl_orbit_search():
    for lam in partitions_up_to(8, 4):
        fast = bott.bott_cohomology(lam)
        orbit = bott.bott_cohomology_orbit(lam)
        assert len(orbit) <= 1
        if fast.vanishes:
            assert orbit == {}
        else:
            assert orbit == {fast.i: fast.dim}


def test_bott_on_projective_space():
    # Gr(1, 6) = P^5 and S_(m)(S) = O(-m): H^5 is nonzero exactly for m >= 6
    for m in range(12):
        e = bott.bott_cohomology(Partition((m,)), 1, 6)
        if m == 0:
            assert e == CohomologyEntry(0, 1)
        elif m < 6:
            assert e.vanishes
        else:
            assert e == CohomologyEntry(5, comb(m - 1, 5))


def test_vanishing_table():
    assert bott.vanishing_table() == {(2, 2), (2, 3), (2, 4), (4, 5), (4, 6), (4, 7), (6, 9)}
    table = bott.table_entries()
    assert all(e.vanishes for _, e in table[1]) and all(e.vanishes for _, e in table[10])


def test_line_bundles():
    assert bott.line_bundle_cohomology(2) == {0: 21}
    assert bott.line_bundle_cohomology(-3) == {}
    assert bott.line_bundle_cohomology(-7) == {5: 6}


def test_kunneth_examples():
    for j in range(1, 11):
        assert bott.kunneth_dim(j, 0, j) == 0
        assert bott.kunneth_dim(j, 0, j + 1) == 0
        for d in (1, 2):
            assert bott.kunneth_dim(j, d, j - 1) == 0
    assert bott.kunneth_h(6, 0) == [CohomologyEntry(9, 35)]
    with pytest.raises(ValueError):
        bott.kunneth_h(0, 0)


def test_koszul_certificates():
    for k, d in [(1, 0), (2, 0), (0, 1), (0, 2)]:
        assert bott.koszul_certificate(k, d)
    assert not bott.koszul_certificate(0, 3)


def test_double_cover_profile():
    p = bott.double_cover_profile(6, 4)
    assert (p.h, p.m, p.families, p.family_dim, p.edim_Z) == (2, 4, 2, 1, 3)
    q = bott.double_cover_profile(6, 5)
    assert (q.families, q.family_dim) == (1, 3)
    for bad in [(6, 0), (6, 7)]:
        with pytest.raises(ValueError):
            bott.double_cover_profile(*bad)


def test_sym2_character_dimension():
    # e_j of the C(5,2) weights of Sym^2 C^4 has C(10, j) terms with multiplicity
    for j in range(1, 11):
        assert sum(bott.wedge_sym2_character(j).values()) == comb(10, j)
    weights = list(combinations_with_replacement(range(4), 2))
    assert len(weights) == 10
