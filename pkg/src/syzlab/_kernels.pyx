# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Typed elimination kernels mod p (compiled backend).

Same contracts as _kernels_py: int64 C-contiguous arrays with entries in
[0, p), modified in place, p a 31-bit prime.
"""

import numpy as np

IMPLEMENTATION = "cython"


cdef long long _inv_mod(long long a, long long p):
    cdef long long result = 1
    cdef long long base = a % p
    cdef long long e = p - 2
    while e:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result


def rank_mod(long long[:, ::1] a, long long p):
    """Rank over GF(p) by forward elimination with partial pivoting."""
    cdef Py_ssize_t rows = a.shape[0]
    cdef Py_ssize_t cols = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, k
    cdef long long inv, f, tmp
    for c in range(cols):
        if r == rows:
            break
        i = -1
        for k in range(r, rows):
            if a[k, c] != 0:
                i = k
                break
        if i < 0:
            continue
        if i != r:
            for j in range(c, cols):
                tmp = a[r, j]
                a[r, j] = a[i, j]
                a[i, j] = tmp
        inv = _inv_mod(a[r, c], p)
        for j in range(c, cols):
            a[r, j] = (a[r, j] * inv) % p
        for k in range(r + 1, rows):
            f = a[k, c]
            if f == 0:
                continue
            for j in range(c, cols):
                a[k, j] = (a[k, j] - f * a[r, j]) % p
                if a[k, j] < 0:
                    a[k, j] += p
        r += 1
    return r


def rref_mod(long long[:, ::1] a, long long p):
    """Reduced row echelon form; returns (rank, pivot column list)."""
    cdef Py_ssize_t rows = a.shape[0]
    cdef Py_ssize_t cols = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, k
    cdef long long inv, f, tmp
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        i = -1
        for k in range(r, rows):
            if a[k, c] != 0:
                i = k
                break
        if i < 0:
            continue
        if i != r:
            for j in range(c, cols):
                tmp = a[r, j]
                a[r, j] = a[i, j]
                a[i, j] = tmp
        inv = _inv_mod(a[r, c], p)
        for j in range(c, cols):
            a[r, j] = (a[r, j] * inv) % p
        for k in range(rows):
            if k == r:
                continue
            f = a[k, c]
            if f == 0:
                continue
            for j in range(c, cols):
                a[k, j] = (a[k, j] - f * a[r, j]) % p
                if a[k, j] < 0:
                    a[k, j] += p
        pivots.append(c)
        r += 1
    return r, pivots
