"""Rank strata of the Hessian over prime fields, by exhaustive enumeration.

Every statement produced here is about GF(p)-rational points only: an empty
rational stratum does not prove the stratum is empty over the algebraic
closure. Reports carry that caveat together with the prime used.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from .hessian import CubicForm, hessian_data, hessian_matrix
from .polycore import GF, Polynomial, kernel_ff, rank_ff, rref_ff

POINT_BUDGET = 30_000_000
CHUNK = 1 << 17
RATIONAL_CAVEAT = ("rational-point check over GF(p): necessary condition only, "
                   "not a statement over the algebraic closure")


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True, order=True)
class ProjPoint:
    coords: Tuple[int, ...]

    @classmethod
    def normalize(cls, coords, p: int) -> "ProjPoint":
        c = [int(x) % p for x in coords]
        lead = next((x for x in c if x), None)
        if lead is None:
            raise ValueError("the zero vector is not a projective point")
        inv = pow(lead, -1, p)
        return cls(tuple(x * inv % p for x in c))

    def __str__(self) -> str:
        return "(" + ":".join(str(x) for x in self.coords) + ")"


def count_points(n: int, p: int) -> int:
    return (p ** (n + 1) - 1) // (p - 1)


def check_budget(n: int, p: int, budget: int = POINT_BUDGET) -> None:
    total = count_points(n, p)
    if total > budget:
        raise BudgetExceeded(f"P^{n}(F_{p}) has {total} points, budget is {budget}")


def iter_points(n: int, p: int, chunk: int = CHUNK) -> Iterator[np.ndarray]:
    """Normalized points of P^n(F_p) in chunks; leading-1 position ascending,
    then the tail in lexicographic order."""
    for lead in range(n + 1):
        tail = n - lead
        total = p ** tail
        weights = p ** np.arange(tail - 1, -1, -1, dtype=np.int64)
        for start in range(0, total, chunk):
            idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
            X = np.zeros((len(idx), n + 1), dtype=np.int64)
            X[:, lead] = 1
            if tail:
                X[:, lead + 1:] = (idx[:, None] // weights[None, :]) % p
            yield X


def third_derivative_tensor(f: CubicForm, p: int) -> np.ndarray:
    """``T[k, i, j] = d^3 f / dx_k dx_i dx_j`` mod p, so ``H_f(x) = sum_k x_k T[k]``."""
    n1 = f.nvars
    H = hessian_matrix(f.poly.to_field(GF(p)) if f.field != GF(p) else f.poly)
    T = np.zeros((n1, n1, n1), dtype=np.int64)
    for i in range(n1):
        for j in range(n1):
            for m, c in H[i, j].items():
                T[m.index(1), i, j] = int(c)
    return T


def hessian_at(T: np.ndarray, X: np.ndarray, p: int) -> np.ndarray:
    return np.einsum("bk,kij->bij", X, T) % p


def _inverse_table(p: int) -> np.ndarray:
    inv = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        inv[a] = pow(a, -1, p)
    return inv


def batch_rank(M: np.ndarray, p: int) -> np.ndarray:
    """Ranks of a stack of square matrices over GF(p) (vectorized elimination)."""
    A = np.array(M, dtype=np.int64) % p
    B, m, _ = A.shape
    inv = _inverse_table(p)
    rank = np.zeros(B, dtype=np.int64)
    rows = np.arange(m)
    for c in range(m):
        cand = (A[:, :, c] != 0) & (rows[None, :] >= rank[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        b = np.flatnonzero(has)
        r = rank[b]
        pv = cand[b].argmax(axis=1)
        top = A[b, r].copy()
        A[b, r] = A[b, pv]
        A[b, pv] = top
        prow = A[b, r] * inv[A[b, r, c]][:, None] % p
        A[b, r] = prow
        factors = A[b, :, c] * (rows[None, :] > r[:, None])
        A[b] = (A[b] - factors[:, :, None] * prow[:, None, :]) % p
        rank[b] += 1
    return rank


class BatchPoly:
    """Vectorized evaluation of a polynomial mod p on a block of points."""

    def __init__(self, poly: Polynomial, p: int):
        if poly.field != GF(p):
            poly = poly.to_field(GF(p))
        self.p = p
        items = poly.sorted_terms()
        self.exps = np.array([m for m, _ in items], dtype=np.int64).reshape(-1, poly.nvars)
        self.coeffs = np.array([int(c) for _, c in items], dtype=np.int64)
        self.maxdeg = int(self.exps.max()) if len(items) else 0

    def __call__(self, X: np.ndarray, powers: Optional[np.ndarray] = None) -> np.ndarray:
        p = self.p
        if powers is None:
            powers = power_table(X, self.maxdeg, p)
        out = np.zeros(len(X), dtype=np.int64)
        cols = np.arange(X.shape[1])
        for e, c in zip(self.exps, self.coeffs):
            t = np.full(len(X), c, dtype=np.int64)
            for v in cols[e > 0]:
                t = t * powers[e[v], :, v] % p
            out = (out + t) % p
        return out


def power_table(X: np.ndarray, maxdeg: int, p: int) -> np.ndarray:
    P = np.empty((maxdeg + 1,) + X.shape, dtype=np.int64)
    P[0] = 1
    for e in range(1, maxdeg + 1):
        P[e] = P[e - 1] * X % p
    return P


@dataclass
class StratumReport:
    prime: int
    n: int
    counts: List[int]
    points: Dict[int, List[ProjPoint]] = dc_field(default_factory=dict)
    caveat: str = RATIONAL_CAVEAT

    @property
    def total(self) -> int:
        return sum(self.counts)

    def at_most(self, k: int) -> int:
        return sum(self.counts[:k + 1])

    def merge(self, other: "StratumReport") -> "StratumReport":
        counts = [a + b for a, b in zip(self.counts, other.counts)]
        pts = {k: sorted(set(self.points.get(k, [])) | set(other.points.get(k, [])))
               for k in set(self.points) | set(other.points)}
        return StratumReport(self.prime, self.n, counts, pts)


def stratify(f: CubicForm, p: int, budget: int = POINT_BUDGET) -> StratumReport:
    """Rank census of H_f(x) over all of P^n(F_p)."""
    n = f.n
    check_budget(n, p, budget)
    T = third_derivative_tensor(f, p)
    counts = np.zeros(n + 2, dtype=np.int64)
    low: Dict[int, List[np.ndarray]] = {}
    for X in iter_points(n, p):
        ranks = batch_rank(hessian_at(T, X, p), p)
        counts += np.bincount(ranks, minlength=n + 2)
        for k in np.unique(ranks):
            if k <= n:
                low.setdefault(int(k), []).append(X[ranks == k])
    nonempty = sorted(low)[:2]
    points = {k: sorted(ProjPoint(tuple(int(v) for v in row)) for row in np.vstack(low[k]))
              for k in nonempty}
    return StratumReport(p, n, [int(c) for c in counts], points)


def has_rational_singular_point(f: CubicForm, budget: int = POINT_BUDGET) -> bool:
    p = f.field.p
    check_budget(f.n, p, budget)
    grads = [BatchPoly(g, p) for g in f.poly.gradient()]
    for X in iter_points(f.n, p):
        P = power_table(X, 2, p)
        alive = np.ones(len(X), dtype=bool)
        for g in grads:
            alive &= g(X, P) == 0
            if not alive.any():
                break
        if alive.any():
            return True
    return False


@dataclass
class TheoremACertificate:
    passed: bool
    prime: int
    n: int
    hessian_points: int
    singular_points: int
    low_rank_points: int
    counterexample: Optional[dict] = None
    caveat: str = RATIONAL_CAVEAT


def verify_theorem_A(f: CubicForm, p: int, budget: int = POINT_BUDGET) -> TheoremACertificate:
    """At each rational point with h_f(x) = 0 compare "grad h_f(x) = 0" with
    "rank H_f(x) <= n - 1". ``h_f`` and its partials are evaluated as
    polynomials, independently of the rank computation."""
    n = f.n
    check_budget(n, p, budget)
    fp = f if f.field == GF(p) else f.over(GF(p))
    hd = hessian_data(fp)
    h = BatchPoly(hd.hess, p)
    dh = [BatchPoly(g, p) for g in hd.hess.gradient()]
    T = third_derivative_tensor(fp, p)
    n_hess = n_sing = n_low = 0
    counterexample = None
    for X in iter_points(n, p):
        P = power_table(X, n + 1, p)
        on_h = h(X, P) == 0
        ranks = batch_rank(hessian_at(T, X, p), p)
        if counterexample is None:
            bad = np.flatnonzero(on_h != (ranks <= n))
            if len(bad):
                i = bad[0]
                counterexample = {"point": str(ProjPoint(tuple(int(v) for v in X[i]))),
                                  "reason": "h_f(x) = 0 disagrees with rank(H_f(x)) <= n",
                                  "rank": int(ranks[i])}
        Xh, Ph, rh = X[on_h], P[:, on_h], ranks[on_h]
        sing = np.ones(len(Xh), dtype=bool)
        for g in dh:
            sing &= g(Xh, Ph) == 0
        low = rh <= n - 1
        n_hess += len(Xh)
        n_sing += int(sing.sum())
        n_low += int(low.sum())
        if counterexample is None:
            bad = np.flatnonzero(sing != low)
            if len(bad):
                i = bad[0]
                counterexample = {"point": str(ProjPoint(tuple(int(v) for v in Xh[i]))),
                                  "reason": ("singular on H_f but rank n" if sing[i]
                                             else "rank <= n-1 but smooth on H_f"),
                                  "rank": int(rh[i])}
    return TheoremACertificate(counterexample is None, p, n, n_hess, n_sing, n_low, counterexample)


@dataclass(frozen=True, order=True)
class GammaPair:
    x: ProjPoint
    y: ProjPoint


def _eval_matrix(hd, x: ProjPoint, p: int) -> List[List[int]]:
    return [[int(v) for v in row] for row in hd.matrix.evaluate(list(x.coords))]


def _annihilates(M: List[List[int]], y: ProjPoint, p: int) -> bool:
    return all(sum(a * b for a, b in zip(row, y.coords)) % p == 0 for row in M)


def make_gamma_pair(f: CubicForm, x: ProjPoint, y: ProjPoint) -> GammaPair:
    p = f.field.p
    hd = hessian_data(f)
    if not _annihilates(_eval_matrix(hd, x, p), y, p):
        raise ValueError(f"({x}, {y}) does not satisfy H_f(x) y = 0")
    return GammaPair(x, y)


def projectivize_span(basis: List[List[int]], p: int) -> List[ProjPoint]:
    """All GF(p)-rational points of P(span(basis))."""
    if not basis:
        return []
    pts = set()
    for coeffs in product(range(p), repeat=len(basis)):
        if not any(coeffs):
            continue
        lead = next(c for c in coeffs if c)
        if lead != 1:
            continue
        v = [sum(c * b[i] for c, b in zip(coeffs, basis)) % p for i in range(len(basis[0]))]
        pts.add(ProjPoint.normalize(v, p))
    return sorted(pts)


def _prepare(f: CubicForm, p: Optional[int]):
    if p is None:
        p = f.field.p
    fp = f if f.field == GF(p) else f.over(GF(p))
    return fp, p


def hessian_points(f: CubicForm, p: Optional[int] = None, max_rank: Optional[int] = None,
                   budget: int = POINT_BUDGET) -> List[ProjPoint]:
    """Rational points with rank H_f(x) <= max_rank (default n, i.e. the Hessian)."""
    fp, p = _prepare(f, p)
    n = fp.n
    max_rank = n if max_rank is None else max_rank
    check_budget(n, p, budget)
    T = third_derivative_tensor(fp, p)
    out = []
    for X in iter_points(n, p):
        ranks = batch_rank(hessian_at(T, X, p), p)
        for row in X[ranks <= max_rank]:
            out.append(ProjPoint(tuple(int(v) for v in row)))
    return sorted(out)


def gamma_pairs(f: CubicForm, p: Optional[int] = None,
                budget: int = POINT_BUDGET) -> List[GammaPair]:
    """All rational pairs ``(x, y)`` with ``H_f(x) y = 0``."""
    fp, p = _prepare(f, p)
    hd = hessian_data(fp)
    pairs = []
    for x in hessian_points(fp, p, budget=budget):
        ker = kernel_ff(_eval_matrix(hd, x, p), p)
        for y in projectivize_span(ker, p):
            pairs.append(GammaPair(x, y))
    return sorted(pairs)


def find_triangles(f: CubicForm, p: Optional[int] = None,
                   budget: int = POINT_BUDGET) -> List[Tuple[ProjPoint, ProjPoint, ProjPoint]]:
    """Ordered rational triples ``(x, y, z)`` with H(x)y = H(y)z = H(z)x = 0.

    Vertices are searched only among points with rank H_f <= n - 1, where
    every triangle vertex lies.
    """
    fp, p = _prepare(f, p)
    hd = hessian_data(fp)
    verts = hessian_points(fp, p, max_rank=fp.n - 1, budget=budget)
    mats = {x: _eval_matrix(hd, x, p) for x in verts}
    adj = {x: [y for y in verts if _annihilates(mats[x], y, p)] for x in verts}
    triples = []
    for x in verts:
        for y in adj[x]:
            for z in adj[y]:
                if _annihilates(mats[z], x, p):
                    triples.append((x, y, z))
    return sorted(triples)


def gamma_singular_pairs(f: CubicForm, p: Optional[int] = None,
                         budget: int = POINT_BUDGET) -> List[GammaPair]:
    """Pairs of Gamma_f where the Jacobian block ``(H_f(y) | H_f(x))`` is not of
    full rank n + 1, i.e. ker H_f(x) and ker H_f(y) meet."""
    fp, p = _prepare(f, p)
    hd = hessian_data(fp)
    out = []
    for pair in gamma_pairs(fp, p, budget=budget):
        Hx = _eval_matrix(hd, pair.x, p)
        Hy = _eval_matrix(hd, pair.y, p)
        block = [ry + rx for ry, rx in zip(Hy, Hx)]
        if rank_ff(block, p) < fp.nvars:
            out.append(pair)
    return out


def random_isotropic_instance(size: int, l: int, p: int, rng: random.Random):
    """Random symmetric ``phi`` (size x size) with an l-dimensional W satisfying W^T phi W = 0.

    Built in a basis whose first l vectors span W (zero top-left block) and
    moved back by a random invertible change of basis. Returns ``(phi, W)``
    with W given as an l x size list of row vectors.
    """
    while True:
        P = [[rng.randrange(p) for _ in range(size)] for _ in range(size)]
        if rank_ff(P, p) == size:
            break
    core = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(i, size):
            if i < l and j < l:
                continue
            core[i][j] = core[j][i] = rng.randrange(p)
    # phi = P^T core P, W = rows of P^{-1} restricted to the first l columns
    PT = [list(col) for col in zip(*P)]
    tmp = [[sum(PT[i][k] * core[k][j] for k in range(size)) % p for j in range(size)]
           for i in range(size)]
    phi = [[sum(tmp[i][k] * P[k][j] for k in range(size)) % p for j in range(size)]
           for i in range(size)]
    Pinv = _inverse(P, p)
    W = [[Pinv[r][c] for r in range(size)] for c in range(l)]
    return phi, W


def _inverse(P, p):
    n = len(P)
    aug = [list(P[i]) + [int(i == j) for j in range(n)] for i in range(n)]
    rows, _ = rref_ff(aug, p)
    return [r[n:] for r in rows]


def rank_bound_lemma_check(trials: int = 200, seed: int = 0, p: int = 31) -> bool:
    """Random instances of: W^T phi W = 0 with dim W = l forces rank(phi) <= 2(e+1-l)."""
    rng = random.Random(f"isotropic:{seed}:{p}")
    for _ in range(trials):
        size = rng.randint(2, 8)
        l = rng.randint(1, size)
        phi, W = random_isotropic_instance(size, l, p, rng)
        restricted = [[sum(W[a][i] * phi[i][j] * W[b][j] for i in range(size) for j in range(size)) % p
                       for b in range(l)] for a in range(l)]
        if any(any(row) for row in restricted):
            return False
        if rank_ff(phi, p) > 2 * (size - l):
            return False
    return True
