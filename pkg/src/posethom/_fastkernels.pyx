# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled elimination kernels over F_p, p < 2**31.

Mirrors posethom._purekernels: same pivot rule, same in-place
semantics, identical results entry for entry.
"""

import numpy as np

cimport numpy as cnp

BACKEND = "compiled"


cdef long long _modinv(long long a, long long p):
    cdef long long g = a % p, g1 = p, x = 1, x1 = 0, q, t
    while g1 != 0:
        q = g / g1
        t = g - q * g1
        g = g1
        g1 = t
        t = x - q * x1
        x = x1
        x1 = t
    x %= p
    if x < 0:
        x += p
    return x


def rank_mod(cnp.int64_t[:, ::1] a, long long p):
    """Rank of ``a`` over F_p by forward elimination.  Clobbers ``a``."""
    cdef Py_ssize_t m = a.shape[0], n = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef long long inv, f, t
    for c in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(n):
                t = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = t
        inv = _modinv(a[r, c], p)
        for i in range(r + 1, m):
            if a[i, c] == 0:
                continue
            f = (a[i, c] * inv) % p
            for j in range(c, n):
                a[i, j] = (a[i, j] - f * a[r, j]) % p
                if a[i, j] < 0:
                    a[i, j] += p
        r += 1
    return r


def rref_mod(cnp.int64_t[:, ::1] a, long long p):
    """Reduced row echelon form over F_p, in place; (rank, pivot cols)."""
    cdef Py_ssize_t m = a.shape[0], n = a.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef long long inv, f, t
    pivots = []
    for c in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if a[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(n):
                t = a[r, j]
                a[r, j] = a[piv, j]
                a[piv, j] = t
        inv = _modinv(a[r, c], p)
        for j in range(n):
            a[r, j] = (a[r, j] * inv) % p
        for i in range(m):
            if i == r or a[i, c] == 0:
                continue
            f = a[i, c]
            for j in range(n):
                a[i, j] = (a[i, j] - f * a[r, j]) % p
                if a[i, j] < 0:
                    a[i, j] += p
        pivots.append(c)
        r += 1
    return r, tuple(pivots)
