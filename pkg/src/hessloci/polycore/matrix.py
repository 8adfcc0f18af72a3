"""Square matrices of polynomials: determinants and minors."""
from __future__ import annotations

from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from .poly import Polynomial

MAX_DET_SIZE = 8


class PolyMatrix:
    """Square grid of polynomials sharing one ring.

    With ``symmetric=True`` the constructor checks ``M[i][j] == M[j][i]``.
    """

    def __init__(self, entries: Sequence[Sequence[Polynomial]], symmetric: bool = False):
        rows = tuple(tuple(r) for r in entries)
        size = len(rows)
        if size == 0 or any(len(r) != size for r in rows):
            raise ValueError("matrix must be square and non-empty")
        first = rows[0][0]
        for r in rows:
            for e in r:
                first._check(e)
        if symmetric:
            for i in range(size):
                for j in range(i + 1, size):
                    if rows[i][j] != rows[j][i]:
                        raise ValueError(f"entries ({i},{j}) and ({j},{i}) differ")
        self.entries = rows
        self.size = size
        self.symmetric = symmetric

    @property
    def nvars(self) -> int:
        return self.entries[0][0].nvars

    @property
    def field(self):
        return self.entries[0][0].field

    def __getitem__(self, ij: Tuple[int, int]) -> Polynomial:
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def is_symmetric(self) -> bool:
        return all(self.entries[i][j] == self.entries[j][i]
                   for i in range(self.size) for j in range(i + 1, self.size))

    def evaluate(self, point: Sequence) -> List[List]:
        return [[e.eval(point) for e in row] for row in self.entries]

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix([[self.entries[i][j] for j in cols] for i in rows])

    def swap_rows(self, a: int, b: int) -> "PolyMatrix":
        rows = list(self.entries)
        rows[a], rows[b] = rows[b], rows[a]
        return PolyMatrix(rows)

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries)


def _subset_dets(M: PolyMatrix, rows: Sequence[int], max_order: int) -> Dict[int, Polynomial]:
    """Determinants of ``rows[:k] x S`` for every column bitmask ``S`` with ``|S| = k``.

    Expansion along the last row of each prefix; results for ``k - 1`` rows
    are shared by every ``k``-subset containing them.
    """
    size = M.size
    one = Polynomial.constant(1, M.nvars, M.field)
    level: Dict[int, Polynomial] = {0: one}
    out: Dict[int, Polynomial] = {}
    for k in range(1, max_order + 1):
        r = rows[k - 1]
        nxt: Dict[int, Polynomial] = {}
        for cols in combinations(range(size), k):
            mask = 0
            for c in cols:
                mask |= 1 << c
            acc = Polynomial.zero(M.nvars, M.field)
            for pos, c in enumerate(cols):
                entry = M.entries[r][c]
                if entry.is_zero():
                    continue
                rest = level[mask & ~(1 << c)]
                if rest.is_zero():
                    continue
                term = entry * rest
                # sign (-1)^{(k-1)+pos}: entry sits in the last row, column pos
                acc = acc - term if (k - 1 + pos) % 2 else acc + term
            nxt[mask] = acc
        level = nxt
        if k == max_order:
            out = level
    return out


def det(M: PolyMatrix) -> Polynomial:
    """Exact determinant by dynamic programming over column subsets."""
    if M.size > MAX_DET_SIZE:
        raise ValueError(f"determinant limited to size <= {MAX_DET_SIZE}")
    dets = _subset_dets(M, list(range(M.size)), M.size)
    return dets[(1 << M.size) - 1]


def det_cofactor(M: PolyMatrix) -> Polynomial:
    """Plain recursive Laplace expansion along the first row (reference oracle)."""

    def rec(rows: Tuple[int, ...], cols: Tuple[int, ...]) -> Polynomial:
        if len(rows) == 1:
            return M.entries[rows[0]][cols[0]]
        acc = Polynomial.zero(M.nvars, M.field)
        r0, rest = rows[0], rows[1:]
        for pos, c in enumerate(cols):
            entry = M.entries[r0][c]
            if entry.is_zero():
                continue
            sub = rec(rest, cols[:pos] + cols[pos + 1:])
            acc = acc - entry * sub if pos % 2 else acc + entry * sub
        return acc

    idx = tuple(range(M.size))
    return rec(idx, idx)


def minors(M: PolyMatrix, order: int, dedupe_symmetric: bool = False) -> List[Polynomial]:
    """All ``order x order`` minors, row sets outer and column sets inner (lex order).

    With ``dedupe_symmetric`` on a symmetric matrix only pairs with
    ``rows <= cols`` are kept, one per unordered pair of index sets.
    """
    if not 1 <= order <= M.size:
        raise ValueError(f"order must lie in [1, {M.size}]")
    if dedupe_symmetric and not (M.symmetric or M.is_symmetric()):
        raise ValueError("dedupe_symmetric requires a symmetric matrix")
    subsets = list(combinations(range(M.size), order))
    out = []
    for ri, rows in enumerate(subsets):
        dets = _subset_dets(M, rows, order)
        for ci, cols in enumerate(subsets):
            if dedupe_symmetric and ci < ri:
                continue
            mask = 0
            for c in cols:
                mask |= 1 << c
            out.append(dets[mask])
    return out
