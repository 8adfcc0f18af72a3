"""Linear algebra over GF(p).

Small matrices go through plain Python elimination. Large sparse-ish systems
(graded pieces of ideals) use :class:`EchelonModP`, a streaming reduced
row-echelon form whose block updates are float64 matrix products; values stay
exact because every product sum is bounded by ``ncols * p**2 < 2**53``.
"""
from __future__ import annotations

from typing import List, Sequence

import numpy as np


def rank_ff(M: Sequence[Sequence[int]], p: int) -> int:
    """Rank of a matrix over GF(p) by Gaussian elimination."""
    rows = [[x % p for x in r] for r in M]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        prow = [x * inv % p for x in rows[rank]]
        rows[rank] = prow
        for i in range(rank + 1, len(rows)):
            f = rows[i][c]
            if f:
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], prow)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def rref_ff(M: Sequence[Sequence[int]], p: int):
    """Reduced row-echelon form over GF(p); returns ``(rows, pivot_columns)``."""
    rows = [[x % p for x in r] for r in M]
    pivots: List[int] = []
    if not rows:
        return rows, pivots
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rank])]
        pivots.append(c)
        rank += 1
    return rows[:rank], pivots


def kernel_ff(M: Sequence[Sequence[int]], p: int) -> List[List[int]]:
    """Basis of the right kernel ``{v : M v = 0}`` over GF(p)."""
    if not M:
        return []
    ncols = len(M[0])
    rows, pivots = rref_ff(M, p)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in zip(rows, pivots):
            v[pc] = (-r[fc]) % p
        basis.append(v)
    return basis


_LEAF = 8


def _rref_leaf(C: np.ndarray, p: int):
    """Gauss-Jordan on a few rows; returns ``(rows, pivot_columns)``."""
    C = C.copy()
    m = len(C)
    rank = 0
    piv: List[int] = []
    while rank < m:
        nz = np.flatnonzero(C[rank:].any(axis=0))
        if not len(nz):
            break
        c = int(nz[0])
        r = rank + int(np.flatnonzero(C[rank:, c])[0])
        if r != rank:
            C[[rank, r]] = C[[r, rank]]
        C[rank, c:] = np.mod(C[rank, c:] * pow(int(C[rank, c]), -1, p), p)
        f = C[:, c].copy()
        f[rank] = 0
        hit = np.flatnonzero(f)
        if len(hit):
            C[hit, c:] = np.mod(C[hit, c:] - f[hit, None] * C[rank, c:][None, :], p)
        piv.append(c)
        rank += 1
    return C[:rank], piv


def rref_block(C: np.ndarray, p: int):
    """Reduced row-echelon form of a float64 block with entries in ``[0, p)``.

    Recursive on rows: the bottom half is reduced against the echelon form of
    the top half with one matrix product, and vice versa. Returns
    ``(rows, pivot_columns)``; row ``i`` has a 1 in column ``pivots[i]`` and
    zeros in every other pivot column.
    """
    if len(C) <= _LEAF:
        return _rref_leaf(C, p)
    h = len(C) // 2
    R1, P1 = rref_block(C[:h], p)
    B = C[h:]
    if P1:
        B = np.mod(B - B[:, P1] @ R1, p)
    B = B[B.any(axis=1)]
    if not len(B):
        return R1, P1
    R2, P2 = rref_block(B, p)
    if not P2:
        return R1, P1
    if P1:
        R1 = np.mod(R1 - R1[:, P2] @ R2, p)
    return np.vstack([R1, R2]), P1 + P2


class EchelonModP:
    """Incrementally maintained reduced row-echelon basis of a row space mod p.

    Rows are fed in with :meth:`add_rows`; :attr:`rank` is the dimension of
    the span of everything seen so far. Only the non-pivot columns of the
    basis are stored, since its pivot columns form an identity block.
    """

    def __init__(self, ncols: int, p: int, block: int = 1024):
        if ncols * (p - 1) ** 2 >= 2**53:
            raise ValueError("prime too large for exact float64 block updates")
        self.ncols = ncols
        self.p = p
        self.block = block
        self.free = np.arange(ncols)
        self.pivots = np.zeros(0, dtype=np.int64)
        self._basis = np.zeros((0, ncols), dtype=np.float64)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def basis(self) -> np.ndarray:
        """The reduced basis as full-width rows."""
        out = np.zeros((self.rank, self.ncols), dtype=np.float64)
        out[:, self.free] = self._basis
        out[np.arange(self.rank), self.pivots] = 1
        return out

    def add_rows(self, rows: np.ndarray) -> None:
        rows = np.asarray(rows)
        if rows.ndim != 2 or rows.shape[1] != self.ncols:
            raise ValueError("row block has the wrong shape")
        for start in range(0, rows.shape[0], self.block):
            if self.rank == self.ncols:
                return
            chunk = np.mod(rows[start:start + self.block].astype(np.float64), self.p)
            self._absorb(chunk)

    def _absorb(self, C: np.ndarray) -> None:
        p = self.p
        # work in coordinates of the current free columns
        Cf = C[:, self.free]
        if self.rank:
            Cf = np.mod(Cf - C[:, self.pivots] @ self._basis, p)
        Cf = Cf[Cf.any(axis=1)]
        if not len(Cf):
            return
        R, piv = rref_block(Cf, p)
        if not piv:
            return
        keep = np.ones(len(self.free), dtype=bool)
        keep[piv] = False
        if self.rank:
            self._basis = np.mod(self._basis[:, keep] - self._basis[:, piv] @ R[:, keep], p)
        else:
            self._basis = self._basis[:, keep]
        self._basis = np.vstack([self._basis, R[:, keep]])
        self.pivots = np.concatenate([self.pivots, self.free[piv]])
        self.free = self.free[keep]


def rank_mod_p(M: np.ndarray, p: int) -> int:
    """Rank of a (possibly large) integer matrix over GF(p)."""
    M = np.asarray(M)
    if M.size == 0:
        return 0
    ech = EchelonModP(M.shape[1], p)
    ech.add_rows(M)
    return ech.rank
