"""Sparse matrices over prime fields and the rank machinery.

Koszul differentials preserve the lattice multidegree, so their sparsity
patterns split into many small connected components. Ranks, nullspaces and
cokernel bases are computed per component with dense elimination, which is
both simple and fast at the sizes this package targets.

The elimination inner loops live in a compiled extension (_kernels) with a
numpy fallback (_kernels_py) chosen at import time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np
import scipy.sparse as sp

try:
    from . import _kernels as _backend
except ImportError:  # pragma: no cover - depends on build environment
    from . import _kernels_py as _backend

BACKEND = _backend.IMPLEMENTATION

# Two fixed 31-bit primes. (p-1)^2 < 2^63 keeps single products in int64.
DEFAULT_PRIMES = (2147483647, 2147483629)


def rank_dense(a: np.ndarray, p: int) -> int:
    """Rank of a dense int64 array mod p (consumes a)."""
    if a.size == 0:
        return 0
    a = np.ascontiguousarray(a, dtype=np.int64)
    return int(_backend.rank_mod(a, p))


def rref_dense(a: np.ndarray, p: int) -> tuple[int, list[int]]:
    if a.size == 0:
        return 0, []
    return _backend.rref_mod(np.ascontiguousarray(a, dtype=np.int64), p)


def nullspace_dense(a: np.ndarray, p: int) -> np.ndarray:
    """Column basis of the kernel of a (cols x nullity), entries in [0, p)."""
    rows, cols = a.shape
    if rows == 0 or a.size == 0:
        return np.eye(cols, dtype=np.int64)
    a = np.ascontiguousarray(a, dtype=np.int64)
    rank, pivots = _backend.rref_mod(a, p)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for k, fcol in enumerate(free):
        basis[fcol, k] = 1
        for i, pcol in enumerate(pivots):
            v = int(a[i, fcol])
            if v:
                basis[pcol, k] = p - v
    return basis


def left_nullspace_dense(a: np.ndarray, p: int) -> np.ndarray:
    """Row basis of {x : x a = 0} ((rows - rank) x rows)."""
    return nullspace_dense(np.ascontiguousarray(a.T), p).T


def matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact a @ b mod p for int64 inputs in [0, p), p < 2^31.

    Splits a into 16-bit halves so each partial product sum stays below
    2^63 for inner dimensions up to 2^16.
    """
    if a.shape[1] == 0 or a.shape[0] == 0 or b.shape[1] == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    if a.shape[1] >= 1 << 16:
        raise ValueError("inner dimension too large for exact int64 matmul")
    hi, lo = np.divmod(a, 1 << 16)
    return ((lo @ b) % p + (((hi @ b) % p) << 16)) % p


@dataclass
class KoszulMatrix:
    """Sparse matrix mod p stored as (row, col, value) triples.

    Values are residues in [1, p-1]; for the Koszul differentials they are
    always +-1, which to_signed_csr exploits for exact integer products.
    """

    rows: int
    cols: int
    prime: int
    entries: list  # list of (row, col, value) with value in [1, p-1]

    def to_dense(self) -> np.ndarray:
        a = np.zeros((self.rows, self.cols), dtype=np.int64)
        for r, c, v in self.entries:
            a[r, c] = (a[r, c] + v) % self.prime
        return a

    def to_csr(self) -> sp.csr_matrix:
        if not self.entries:
            return sp.csr_matrix((self.rows, self.cols), dtype=np.int64)
        r, c, v = zip(*self.entries)
        m = sp.coo_matrix((np.array(v, dtype=np.int64), (r, c)),
                          shape=(self.rows, self.cols)).tocsr()
        m.data %= self.prime
        return m

    def to_signed_csr(self) -> sp.csr_matrix:
        """CSR with values mapped to balanced residues (here: +-1)."""
        m = self.to_csr()
        m.data = np.where(m.data > self.prime // 2, m.data - self.prime, m.data)
        return m

    def compose(self, other: "KoszulMatrix") -> "KoszulMatrix":
        """self @ other as sparse matrices mod p."""
        if self.cols != other.rows or self.prime != other.prime:
            raise ValueError("incompatible composition")
        prod = (self.to_csr() @ other.to_csr()).tocoo()
        data = prod.data % self.prime
        keep = data != 0
        entries = list(zip(prod.row[keep].tolist(), prod.col[keep].tolist(),
                           data[keep].tolist()))
        return KoszulMatrix(self.rows, other.cols, self.prime, entries)

    def is_zero(self) -> bool:
        return all(v % self.prime == 0 for _, _, v in self.entries)

    def dump(self) -> str:
        """Debug format: 'rows cols prime nnz' header plus sorted triples."""
        lines = [f"{self.rows} {self.cols} {self.prime} {len(self.entries)}"]
        for r, c, v in sorted(self.entries):
            lines.append(f"{r} {c} {v}")
        return "\n".join(lines) + "\n"


@dataclass
class BlockDecomposition:
    """Connected components of the sparsity pattern.

    blocks: (row_indices, col_indices, dense submatrix) per component.
    loose_rows / loose_cols: indices that carry no entry at all.
    """

    matrix: KoszulMatrix
    blocks: list
    loose_rows: np.ndarray
    loose_cols: np.ndarray


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, x: int, y: int):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


def split_blocks(M: KoszulMatrix) -> BlockDecomposition:
    uf = _UnionFind(M.rows + M.cols)
    for r, c, _ in M.entries:
        uf.union(r, M.rows + c)
    groups: dict[int, list] = {}
    for r, c, v in M.entries:
        groups.setdefault(uf.find(r), []).append((r, c, v))
    touched_rows = np.zeros(M.rows, dtype=bool)
    touched_cols = np.zeros(M.cols, dtype=bool)
    blocks = []
    for triples in groups.values():
        rs = sorted({t[0] for t in triples})
        cs = sorted({t[1] for t in triples})
        rmap = {r: i for i, r in enumerate(rs)}
        cmap = {c: i for i, c in enumerate(cs)}
        a = np.zeros((len(rs), len(cs)), dtype=np.int64)
        for r, c, v in triples:
            a[rmap[r], cmap[c]] = (a[rmap[r], cmap[c]] + v) % M.prime
        blocks.append((np.array(rs, dtype=np.intp), np.array(cs, dtype=np.intp), a))
        touched_rows[rs] = True
        touched_cols[cs] = True
    blocks.sort(key=lambda b: int(b[0][0]) if len(b[0]) else -1)
    return BlockDecomposition(M, blocks,
                              np.nonzero(~touched_rows)[0],
                              np.nonzero(~touched_cols)[0])


def rank_mod_p(M: KoszulMatrix) -> int:
    dec = split_blocks(M)
    return sum(rank_dense(a.copy(), M.prime) for _, _, a in dec.blocks)


def nullspace_mod_p(M: KoszulMatrix) -> np.ndarray:
    """Kernel basis as a dense (cols x nullity) array, entries in [0, p)."""
    dec = split_blocks(M)
    pieces = []
    for _, cs, a in dec.blocks:
        nb = nullspace_dense(a, M.prime)
        if nb.shape[1]:
            full = np.zeros((M.cols, nb.shape[1]), dtype=np.int64)
            full[cs] = nb
            pieces.append(full)
    if len(dec.loose_cols):
        ident = np.zeros((M.cols, len(dec.loose_cols)), dtype=np.int64)
        ident[dec.loose_cols, np.arange(len(dec.loose_cols))] = 1
        pieces.append(ident)
    if not pieces:
        return np.zeros((M.cols, 0), dtype=np.int64)
    return np.concatenate(pieces, axis=1)


@dataclass
class CokernelBasis:
    """Left nullspace of a matrix, kept in block form.

    project(M) computes the cokernel image of dense columns M, i.e. the
    stacked products C_d @ M[rows_d] plus the untouched rows verbatim.
    rank_rel(M, p) is then rank(M mod column space) = rank([M | B]) - rank(B).
    """

    nrows: int
    prime: int
    blocks: list  # (row_indices, C_d) pairs
    loose_rows: np.ndarray

    @property
    def dim(self) -> int:
        return sum(c.shape[0] for _, c in self.blocks) + len(self.loose_rows)

    def project(self, M: np.ndarray) -> np.ndarray:
        if M.shape[0] != self.nrows:
            raise ValueError("row count mismatch")
        parts = [matmul_mod(cd, M[rs], self.prime) for rs, cd in self.blocks
                 if cd.shape[0]]
        if len(self.loose_rows):
            parts.append(M[self.loose_rows])
        if not parts:
            return np.zeros((0, M.shape[1]), dtype=np.int64)
        return np.concatenate(parts, axis=0)

    def rank_rel(self, M: np.ndarray) -> int:
        return rank_dense(self.project(M), self.prime)


def cokernel_basis(M: KoszulMatrix) -> CokernelBasis:
    dec = split_blocks(M)
    blocks = [(rs, left_nullspace_dense(a, M.prime)) for rs, _, a in dec.blocks]
    return CokernelBasis(M.rows, M.prime, blocks, dec.loose_rows)
