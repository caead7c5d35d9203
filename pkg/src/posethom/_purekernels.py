"""Pure Python (numpy) elimination kernels, the fallback backend.

Semantics must match posethom._fastkernels exactly: same pivot choice
(first nonzero row, columns scanned left to right), same in-place
mutation of the argument.  Entries are assumed reduced into [0, p) and
p < 2**31, so every intermediate product fits in int64.
"""

import numpy as np

BACKEND = "python"


def rank_mod(a, p):
    """Rank of ``a`` over F_p by forward elimination.  Clobbers ``a``."""
    m, n = a.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), -1, p)
        below = a[r + 1:, c]
        mask = below != 0
        if mask.any():
            factors = (below[mask] * inv) % p
            a[r + 1:][mask] = (a[r + 1:][mask] - np.outer(factors, a[r])) % p
        r += 1
    return r


def rref_mod(a, p):
    """Reduced row echelon form of ``a`` over F_p, in place.

    Returns (rank, pivot column tuple).  The result is the canonical
    RREF: unit pivots, zeros above and below each pivot.
    """
    m, n = a.shape
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            a[mask] = (a[mask] - np.outer(col[mask], a[r])) % p
        pivots.append(c)
        r += 1
    return r, tuple(pivots)
