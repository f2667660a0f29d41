"""Pure numpy elimination kernels mod p (fallback backend).

All matrices are C-contiguous int64 arrays with entries already reduced to
[0, p). p is a 31-bit prime, so a single product plus a subtraction stays
well inside int64. Arrays are modified in place.
"""

from __future__ import annotations

import numpy as np

IMPLEMENTATION = "python"


def rank_mod(a: np.ndarray, p: int) -> int:
    """Rank over GF(p) by forward elimination with partial pivoting."""
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivots = np.nonzero(a[r:, c])[0]
        if pivots.size == 0:
            continue
        i = r + int(pivots[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r, c:] = a[r, c:] * inv % p
        below = r + 1 + np.nonzero(a[r + 1:, c])[0]
        if below.size:
            a[below, c:] = (a[below, c:] - np.outer(a[below, c], a[r, c:])) % p
        r += 1
    return r


def rref_mod(a: np.ndarray, p: int) -> tuple[int, list[int]]:
    """Reduced row echelon form; returns (rank, pivot column list)."""
    rows, cols = a.shape
    r = 0
    pivots: list[int] = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r, c:] = a[r, c:] * inv % p
        others = np.nonzero(a[:, c])[0]
        others = others[others != r]
        if others.size:
            a[np.ix_(others, range(c, cols))] = (
                a[np.ix_(others, range(c, cols))]
                - np.outer(a[others, c], a[r, c:])) % p
        pivots.append(c)
        r += 1
    return r, pivots
