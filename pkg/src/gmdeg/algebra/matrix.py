"""Polynomial matrices: determinants, minors and pointwise rank over F_p."""
from __future__ import annotations

from itertools import combinations
from typing import Sequence

import numpy as np

from .poly import MultiPoly
from .rings import GF, IncompatibleRings


class PolyMatrix:
    __slots__ = ("rows", "cols", "entries", "ring", "nvars")

    def __init__(self, entries: Sequence[Sequence[MultiPoly]], symmetric: bool = False):
        entries = [list(r) for r in entries]
        if not entries or not entries[0]:
            raise ValueError("matrix must have at least one row and one column")
        self.rows, self.cols = len(entries), len(entries[0])
        if any(len(r) != self.cols for r in entries):
            raise ValueError("matrix is not rectangular")
        first = entries[0][0]
        self.ring, self.nvars = first.ring, first.nvars
        for r in entries:
            for e in r:
                if e.ring != self.ring or e.nvars != self.nvars:
                    raise IncompatibleRings()
        self.entries = entries
        if symmetric and not self.is_symmetric():
            raise ValueError("matrix flagged symmetric is not symmetric")

    @classmethod
    def from_constants(cls, ring, nvars, rows):
        return cls([[MultiPoly.constant(ring, nvars, c) for c in r] for r in rows])

    @classmethod
    def identity(cls, ring, nvars, n):
        return cls.from_constants(ring, nvars, [[int(i == j) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows) for j in range(i + 1, self.cols))

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        zero = MultiPoly.zero(self.ring, self.nvars)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix([[self.entries[i][j] for j in cols] for i in rows])

    def map(self, fn) -> "PolyMatrix":
        return PolyMatrix([[fn(e) for e in r] for r in self.entries])

    def evaluate(self, point) -> list[list]:
        return [[e.evaluate(point) for e in r] for r in self.entries]

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols})"


def _cofactor_det(m: list[list[MultiPoly]]) -> MultiPoly:
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    # expand along the sparsest row
    r = min(range(n), key=lambda i: sum(1 for e in m[i] if e))
    acc = MultiPoly.zero(m[0][0].ring, m[0][0].nvars)
    rows = [i for i in range(n) if i != r]
    for j in range(n):
        if not m[r][j]:
            continue
        minor = [[m[i][k] for k in range(n) if k != j] for i in rows]
        term = m[r][j] * _cofactor_det(minor)
        acc = acc + term if (r + j) % 2 == 0 else acc - term
    return acc


def _bareiss_det(m: list[list[MultiPoly]]) -> MultiPoly:
    m = [list(r) for r in m]
    n = len(m)
    sign = 1
    one = MultiPoly.constant(m[0][0].ring, m[0][0].nvars, 1)
    prev = one
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return MultiPoly.zero(one.ring, one.nvars)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[k][k] * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = num.divexact(prev) if prev != one else num
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return d if sign == 1 else -d


def determinant(M: PolyMatrix) -> MultiPoly:
    """Exact determinant: cofactor expansion up to 4x4, Bareiss beyond."""
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    if M.rows <= 4:
        return _cofactor_det(M.entries)
    return _bareiss_det(M.entries)


def minors(M: PolyMatrix, r: int) -> list[MultiPoly]:
    """All r x r minors, row subsets outer, column subsets inner (lexicographic)."""
    if not 1 <= r <= min(M.rows, M.cols):
        raise ValueError(f"minor size {r} out of range for a {M.rows}x{M.cols} matrix")
    out = []
    for rs in combinations(range(M.rows), r):
        for cs in combinations(range(M.cols), r):
            out.append(determinant(M.submatrix(rs, cs)))
    return out


def symmetric_minors(M: PolyMatrix, r: int) -> list[MultiPoly]:
    """The r x r minors of a symmetric matrix up to transposition (row set <= column set)."""
    if not M.is_symmetric():
        raise ValueError("matrix is not symmetric")
    if not 1 <= r <= M.rows:
        raise ValueError(f"minor size {r} out of range")
    out = []
    for rs in combinations(range(M.rows), r):
        for cs in combinations(range(M.cols), r):
            if rs <= cs:
                out.append(determinant(M.submatrix(rs, cs)))
    return out


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank of an integer matrix over F_p by Gaussian elimination."""
    m = [[x % p for x in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, p)
        prow = [x * inv % p for x in m[rank]]
        m[rank] = prow
        for i in range(len(m)):
            if i != rank and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], prow)]
        rank += 1
        if rank == len(m):
            break
    return rank


def rank_at_point(M: PolyMatrix, point) -> int:
    if not isinstance(M.ring, GF):
        raise ValueError("rank_at_point needs a matrix over a prime field")
    if len(point) != M.nvars:
        raise ValueError("point length does not match variable count")
    return rank_mod_p(M.evaluate(point), M.ring.p)


def batched_rank_mod_p(mats: np.ndarray, p: int) -> np.ndarray:
    """Ranks over F_p of a stack of matrices with shape (N, r, c).

    Entries must be in [0, p) with p < 2**31 so products fit in int64.
    """
    m = np.array(mats, dtype=np.int64) % p
    n, r, c = m.shape
    rank = np.zeros(n, dtype=np.int64)
    used = np.zeros((n, r), dtype=bool)
    ar = np.arange(n)
    for col in range(c):
        cand = (m[:, :, col] != 0) & ~used
        has = cand.any(axis=1)
        if not has.any():
            continue
        idx = ar[has]
        prow_i = np.argmax(cand[idx], axis=1)
        prow = m[idx, prow_i]
        prow = prow * _inv_mod(prow[:, col], p)[:, None] % p
        factors = m[idx, :, col].copy()
        factors[np.arange(len(idx)), prow_i] = 0
        m[idx] = (m[idx] - factors[:, :, None] * prow[:, None, :]) % p
        m[idx, prow_i] = prow
        used[idx, prow_i] = True
        rank[idx] += 1
    return rank


def _inv_mod(x: np.ndarray, p: int) -> np.ndarray:
    out = np.ones_like(x)
    base = x % p
    e = p - 2
    while e:
        if e & 1:
            out = out * base % p
        base = base * base % p
        e >>= 1
    return out



def nullspace_mod_p(rows: Sequence[Sequence[int]], p: int) -> list[list[int]]:
    """Basis of the right kernel of an integer matrix over F_p."""
    m = [[x % p for x in r] for r in rows]
    ncols = len(m[0]) if m else 0
    pivots = []
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[rank])]
        pivots.append(c)
        rank += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc] % p
        basis.append(v)
    return basis
