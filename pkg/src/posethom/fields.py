"""Field linear algebra: reduced row echelon, kernels, solving.

Two coefficient fields are supported: F_p for primes p < 2^31 (routed
through the compiled/pure elimination kernels) and the rationals
(Fraction arithmetic; integer ranks are computed in posethom.linalg
instead, this path only serves explicit bases and solves).  Matrices
are plain lists of rows.
"""

from fractions import Fraction

from posethom import kernels
from posethom.linalg import _is_prime


class GF:
    """The prime field F_p, p < 2^31."""

    __slots__ = ("p",)

    def __init__(self, p):
        p = int(p)
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        if p >= 1 << 31:
            raise ValueError("prime moduli supported up to 2^31")
        self.p = p

    @property
    def name(self):
        return f"F{self.p}"

    def reduce(self, v):
        return int(v) % self.p

    def rref(self, rows, ncols):
        if not rows:
            return 0, (), []
        rank, pivots, arr = kernels.rref_mod_dense(rows, self.p)
        return rank, pivots, [list(map(int, r)) for r in arr]

    def __eq__(self, other):
        return isinstance(other, GF) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class Rationals:
    """The field Q, with Fraction arithmetic."""

    __slots__ = ()
    p = None

    @property
    def name(self):
        return "Q"

    def reduce(self, v):
        return Fraction(v)

    def rref(self, rows, ncols):
        a = [[Fraction(v) for v in row] for row in rows]
        m = len(a)
        r = 0
        pivots = []
        for c in range(ncols):
            if r == m:
                break
            piv = next((i for i in range(r, m) if a[i][c]), None)
            if piv is None:
                continue
            if piv != r:
                a[r], a[piv] = a[piv], a[r]
            inv = 1 / a[r][c]
            a[r] = [v * inv for v in a[r]]
            for i in range(m):
                if i != r and a[i][c]:
                    f = a[i][c]
                    a[i] = [u - f * v for u, v in zip(a[i], a[r])]
            pivots.append(c)
            r += 1
        return r, tuple(pivots), a

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "Rationals()"


QQ = Rationals()


def rank(rows, ncols, field):
    r, _, _ = field.rref(rows, ncols)
    return r


def kernel_basis(rows, ncols, field):
    """Vectors spanning the right kernel, one per free column of RREF."""
    r, pivots, red = field.rref(rows, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for c in free:
        vec = [field.reduce(0)] * ncols
        vec[c] = field.reduce(1)
        for row_idx, pc in enumerate(pivots):
            vec[pc] = field.reduce(-red[row_idx][c])
        basis.append(vec)
    return basis


def solve_matrix(A_rows, ncols, B_cols, field):
    """X with A X = B (columns B_cols), free variables set to zero.

    Returns the list of solution columns, or None when some column is
    inconsistent.
    """
    nb = len(B_cols)
    if not A_rows:
        # zero-row system: solvable iff B is empty of rows too
        return [[field.reduce(0)] * ncols for _ in range(nb)] \
            if all(len(b) == 0 for b in B_cols) else None
    aug = [list(row) + [b[i] for b in B_cols]
           for i, row in enumerate(A_rows)]
    r, pivots, red = field.rref(aug, ncols + nb)
    if any(pc >= ncols for pc in pivots):
        return None
    out = []
    for k in range(nb):
        x = [field.reduce(0)] * ncols
        for row_idx, pc in enumerate(pivots):
            x[pc] = red[row_idx][ncols + k]
        out.append(x)
    return out


def matmul(A_rows, B_rows, field):
    if not A_rows:
        return []
    nb = len(B_rows[0]) if B_rows else 0
    out = []
    for row in A_rows:
        acc = [field.reduce(0)] * nb
        for k, a in enumerate(row):
            if a:
                brow = B_rows[k]
                for j in range(nb):
                    if brow[j]:
                        acc[j] = field.reduce(acc[j] + a * brow[j])
        out.append(acc)
    return out
