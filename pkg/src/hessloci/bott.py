"""Bott's algorithm on Grassmannians and the Koszul vanishing certificates.

Bundles are Schur functors ``S_lambda(S)`` of the tautological subbundle on
``Gr(k_sub, n_amb)``; the default setting is ``Gr(4, 6) = G(3, P^5)``.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import comb
from typing import Dict, List, Optional, Sequence, Set, Tuple

K_SUB = 4
N_AMB = 6
P5 = 5
KOSZUL_RANK = comb(K_SUB + 1, 2)


@dataclass(frozen=True)
class Partition:
    parts: Tuple[int, ...]

    def __init__(self, parts: Sequence[int] = ()):
        if isinstance(parts, Partition):
            parts = parts.parts
        parts = tuple(int(x) for x in parts)
        if any(x < 0 for x in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts {parts} are not weakly decreasing")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def padded(self, length: int) -> Tuple[int, ...]:
        if len(self.parts) > length:
            raise ValueError(f"{self} has more than {length} parts")
        return self.parts + (0,) * (length - len(self.parts))

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition([sum(1 for x in self.parts if x > i) for i in range(self.parts[0])])

    def frobenius(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        """Frobenius coordinates ``(alpha | beta)``: arm and leg lengths on the diagonal."""
        conj = self.conjugate().parts
        r = sum(1 for i, x in enumerate(self.parts) if x > i)
        return (tuple(self.parts[i] - i - 1 for i in range(r)),
                tuple(conj[i] - i - 1 for i in range(r)))

    @classmethod
    def from_frobenius(cls, alpha: Sequence[int], beta: Sequence[int]) -> "Partition":
        r = len(alpha)
        if len(beta) != r:
            raise ValueError("Frobenius coordinates need equal lengths")
        rows = [a + i + 1 for i, a in enumerate(alpha)]
        cols = [b + i + 1 for i, b in enumerate(beta)]
        height = cols[0] if cols else 0
        for i in range(r, height):
            rows.append(sum(1 for c in cols if c > i))
        return cls(rows)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class WeightVector:
    """GL(n) weight split as (quotient block | sub block)."""

    entries: Tuple[int, ...]
    split: int = N_AMB - K_SUB

    def __post_init__(self):
        e = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", e)
        if not 0 <= self.split <= len(e):
            raise ValueError("block split out of range")
        for block in (e[: self.split], e[self.split:]):
            if any(a < b for a, b in zip(block, block[1:])):
                raise ValueError(f"weight {e} is not decreasing within its blocks")

    @classmethod
    def for_sub_schur(cls, lam: Partition, k_sub: int = K_SUB, n_amb: int = N_AMB) -> "WeightVector":
        """Weight ``(0^{n-k} | lambda)`` of ``S_lambda(S)`` on ``Gr(k, n)``."""
        return cls((0,) * (n_amb - k_sub) + lam.padded(k_sub), n_amb - k_sub)


@dataclass(frozen=True)
class CohomologyEntry:
    """``H^i`` of dimension ``dim``; ``i`` is None when all cohomology vanishes."""

    i: Optional[int]
    dim: int

    @property
    def vanishes(self) -> bool:
        return self.dim == 0


def weyl_dimension(weight: Sequence[int]) -> int:
    """Dimension of the irreducible GL(n)-module of dominant highest weight ``weight``."""
    n = len(weight)
    if any(a < b for a, b in zip(weight, weight[1:])):
        raise ValueError(f"weight {tuple(weight)} is not dominant")
    num = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            num *= Fraction(weight[i] - weight[j] + j - i, j - i)
    return int(num)


def _bubble_sort_desc(v: Sequence[int]) -> Tuple[Tuple[int, ...], int]:
    """Sort decreasingly by adjacent swaps; returns ``(sorted, swap count)``."""
    a = list(v)
    swaps = 0
    for end in range(len(a) - 1, 0, -1):
        for i in range(end):
            if a[i] < a[i + 1]:
                a[i], a[i + 1] = a[i + 1], a[i]
                swaps += 1
    return tuple(a), swaps


def bott_cohomology(lam: Partition, k_sub: int = K_SUB, n_amb: int = N_AMB) -> CohomologyEntry:
    """Cohomology of ``S_lambda(S)`` on ``Gr(k_sub, n_amb)`` by Bott's algorithm."""
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    w = WeightVector.for_sub_schur(lam, k_sub, n_amb).entries
    rho = tuple(range(n_amb - 1, -1, -1))
    shifted = [a + r for a, r in zip(w, rho)]
    if len(set(shifted)) < len(shifted):
        return CohomologyEntry(None, 0)
    srt, length = _bubble_sort_desc(shifted)
    return CohomologyEntry(length, weyl_dimension([a - r for a, r in zip(srt, rho)]))


def _inversions(perm: Sequence[int]) -> int:
    return sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])


def bott_cohomology_orbit(lam: Partition, k_sub: int = K_SUB, n_amb: int = N_AMB) -> Dict[int, int]:
    """Oracle: search the whole Weyl group for elements making ``w + rho`` dominant.

    Returns ``{i: dim}`` summed over every permutation ``sigma`` with
    ``sigma(w + rho)`` strictly decreasing, ``i`` the length of ``sigma``.
    """
    w = WeightVector.for_sub_schur(Partition(lam), k_sub, n_amb).entries
    rho = tuple(range(n_amb - 1, -1, -1))
    shifted = [a + r for a, r in zip(w, rho)]
    out: Dict[int, int] = defaultdict(int)
    for perm in permutations(range(n_amb)):
        image = [shifted[perm[i]] for i in range(n_amb)]
        if all(a > b for a, b in zip(image, image[1:])):
            out[_inversions(perm)] += weyl_dimension([a - r for a, r in zip(image, rho)])
    return dict(out)


def _distinct_partitions(total: int, max_part: Optional[int] = None) -> List[Tuple[int, ...]]:
    """Partitions of ``total`` into distinct parts, in decreasing order."""
    if max_part is None:
        max_part = total
    if total == 0:
        return [()]
    out = []
    for first in range(min(total, max_part), 0, -1):
        for rest in _distinct_partitions(total - first, first - 1):
            out.append((first,) + rest)
    return out


def wedge_sym2_decompose(j: int, rank: int = K_SUB) -> List[Partition]:
    """Schur summands of ``wedge^j Sym^2 V`` with ``dim V = rank``.

    They are the partitions with Frobenius coordinates ``(b + 1 | b)``, where
    ``b_1 > b_2 > ...`` and ``sum(b_i + 1) = j``, having at most ``rank`` parts.
    """
    if not 1 <= j <= comb(rank + 1, 2):
        raise ValueError(f"need 1 <= j <= {comb(rank + 1, 2)}, got {j}")
    out = []
    for dp in _distinct_partitions(j):
        b = [x - 1 for x in dp]
        lam = Partition.from_frobenius([x + 1 for x in b], b)
        if len(lam) <= rank:
            out.append(lam)
    return sorted(out, key=lambda p: p.parts, reverse=True)


def _poly_mul(a: Dict[tuple, int], b: Dict[tuple, int]) -> Dict[tuple, int]:
    out: Dict[tuple, int] = defaultdict(int)
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
    return {e: c for e, c in out.items() if c}


def wedge_sym2_character(j: int, rank: int = K_SUB) -> Dict[tuple, int]:
    """Character of ``wedge^j Sym^2 V``: ``e_j`` of the weights ``x_a x_b``, ``a <= b``."""
    weights = []
    for a in range(rank):
        for b in range(a, rank):
            e = [0] * rank
            e[a] += 1
            e[b] += 1
            weights.append(tuple(e))
    # elementary symmetric functions by the product of (1 + t x^w)
    layers: List[Dict[tuple, int]] = [{(0,) * rank: 1}] + [{} for _ in range(j)]
    for w in weights:
        for k in range(j, 0, -1):
            for e, c in layers[k - 1].items():
                key = tuple(x + y for x, y in zip(e, w))
                layers[k][key] = layers[k].get(key, 0) + c
    return layers[j]


def schur_expand(f: Dict[tuple, int], nvars: int) -> Dict[Partition, int]:
    """Schur expansion of a symmetric polynomial, read off from ``f * a_delta``."""
    vandermonde: Dict[tuple, int] = {(0,) * nvars: 1}
    for i in range(nvars):
        for k in range(i + 1, nvars):
            ei = tuple(1 if t == i else 0 for t in range(nvars))
            ek = tuple(1 if t == k else 0 for t in range(nvars))
            vandermonde = _poly_mul(vandermonde, {ei: 1, ek: -1})
    alt = _poly_mul(f, vandermonde)
    delta = tuple(range(nvars - 1, -1, -1))
    out = {}
    for e, c in alt.items():
        if all(a > b for a, b in zip(e, e[1:])):
            out[Partition([x - d for x, d in zip(e, delta)])] = c
    return out


def wedge_sym2_brute(j: int, rank: int = K_SUB) -> Dict[Partition, int]:
    """Oracle for :func:`wedge_sym2_decompose` by character expansion."""
    return schur_expand(wedge_sym2_character(j, rank), rank)


def table_entries(k_sub: int = K_SUB, n_amb: int = N_AMB) -> Dict[int, List[Tuple[Partition, CohomologyEntry]]]:
    """Bott output for every summand of ``wedge^j Sym^2 S``, ``j = 1..C(k+1, 2)``."""
    return {j: [(lam, bott_cohomology(lam, k_sub, n_amb)) for lam in wedge_sym2_decompose(j, k_sub)]
            for j in range(1, comb(k_sub + 1, 2) + 1)}


def vanishing_table() -> Set[Tuple[int, int]]:
    """Pairs ``(i, j)`` with ``H^i(wedge^j Sym^2 S) != 0`` on Gr(4, 6)."""
    return {(e.i, j) for j, rows in table_entries().items() for _, e in rows if not e.vanishes}


def wedge_cohomology(j: int) -> Dict[int, int]:
    """``{i: h^i(wedge^j Sym^2 S)}`` on Gr(4, 6), nonzero entries only."""
    out: Dict[int, int] = defaultdict(int)
    for lam in wedge_sym2_decompose(j, K_SUB):
        e = bott_cohomology(lam)
        if not e.vanishes:
            out[e.i] += e.dim
    return dict(out)


def line_bundle_cohomology(m: int, n: int = P5) -> Dict[int, int]:
    """``{i: h^i(O_{P^n}(m))}``, nonzero entries only."""
    if m >= 0:
        return {0: comb(m + n, n)}
    if m <= -(n + 1):
        return {n: comb(-m - 1, n)}
    return {}


def kunneth_h(j: int, d: int) -> List[CohomologyEntry]:
    """Cohomology of ``pi_2^* O(d) (x) wedge^j P^*`` on Gr(4,6) x P^5.

    ``wedge^j P^* = wedge^j Sym^2 S (box) O_{P^5}(-j)``, so the Kunneth formula
    gives ``H^i = sum_{a+b=i} H^a(wedge^j Sym^2 S) (x) H^b(O(d - j))``.
    """
    if not 1 <= j <= KOSZUL_RANK:
        raise ValueError(f"need 1 <= j <= {KOSZUL_RANK}, got {j}")
    out: Dict[int, int] = defaultdict(int)
    for a, da in wedge_cohomology(j).items():
        for b, db in line_bundle_cohomology(d - j).items():
            out[a + b] += da * db
    return [CohomologyEntry(i, out[i]) for i in sorted(out)]


def kunneth_dim(j: int, d: int, i: int) -> int:
    return sum(e.dim for e in kunneth_h(j, d) if e.i == i)


def koszul_certificate(k: int, d: int, p: int = KOSZUL_RANK) -> bool:
    """True when ``H^{j+k-1}(M (x) wedge^j P^*) = 0`` for ``1 <= j <= p``, ``M = pi_2^* O(d)``.

    By the chained vanishing along the Koszul resolution of the zero locus Z
    this certifies ``H^k(I_Z (x) M) = 0``.
    """
    return all(kunneth_dim(j, d, j + k - 1) == 0 for j in range(1, p + 1))


@dataclass(frozen=True)
class DoubleCoverProfile:
    h: int
    m: int
    families: int
    family_dim: int
    edim_Z: int


def double_cover_profile(e_rank: int, k: int, n: int = P5) -> DoubleCoverProfile:
    """Isotropic-plane families for a quadric of rank ``k`` on ``C^{e_rank}``.

    For ``k = 2h`` the maximal isotropic subspaces have dimension
    ``m = e_rank - h`` and form two families of dimension ``C(h, 2)``; for
    ``k = 2h + 1`` they have dimension ``e_rank - h - 1`` and form one family of
    dimension ``C(h + 1, 2)``. ``edim_Z = n + m(e_rank - m) - C(m + 1, 2)``.
    """
    if not 1 <= k <= e_rank:
        raise ValueError(f"need 1 <= k <= e_rank, got k={k}, e_rank={e_rank}")
    h = k // 2
    if k % 2 == 0:
        m, families, family_dim = e_rank - h, 2, comb(h, 2)
    else:
        m, families, family_dim = e_rank - h - 1, 1, comb(h + 1, 2)
    edim = n + m * (e_rank - m) - comb(m + 1, 2)
    return DoubleCoverProfile(h, m, families, family_dim, edim)
