"""Exact integer linear algebra: Smith normal form, integer solving,
ranks over the rationals and over prime fields.

Everything here is arbitrary precision; intermediate Smith entries blow
up even on small inputs, and correctness over Z is the whole point.
Dense routines (with unimodular transforms) serve the small matrices of
simplicial chain complexes; the sparse routines serve the big
block-structured differentials assembled over the subset lattice, where
almost every pivot is a unit.

>>> smith(IntMatrix.from_rows([[2, 0], [0, 3]])).invariant_factors
[1, 6]
"""

from math import gcd


def xgcd(a, b):
    """(g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def _is_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class IntMatrix:
    """Dense integer matrix; zero-row and zero-column shapes are legal."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows, cols, data):
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n):
        data = [[0] * n for _ in range(n)]
        for i in range(n):
            data[i][i] = 1
        return cls(n, n, data)

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(map(int, r)) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, rows)

    @classmethod
    def from_triplets(cls, rows, cols, triplets):
        M = cls.zeros(rows, cols)
        for i, j, v in triplets:
            M.data[i][j] += v
        return M

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __setitem__(self, ij, v):
        i, j = ij
        self.data[i][j] = v

    def copy(self):
        return IntMatrix(self.rows, self.cols, [r[:] for r in self.data])

    def transpose(self):
        return IntMatrix(self.cols, self.rows,
                         [[self.data[i][j] for i in range(self.rows)]
                          for j in range(self.cols)])

    def column(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def is_zero(self):
        return all(all(v == 0 for v in row) for row in self.data)

    def __matmul__(self, other):
        if isinstance(other, list):
            if len(other) != self.cols:
                raise ValueError("vector length mismatch")
            return [sum(a * b for a, b in zip(row, other))
                    for row in self.data]
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out = IntMatrix.zeros(self.rows, other.cols)
        odata = other.data
        for i, row in enumerate(self.data):
            orow = out.data[i]
            for k, a in enumerate(row):
                if a:
                    brow = odata[k]
                    for j, b in enumerate(brow):
                        if b:
                            orow[j] += a * b
        return out

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.data == other.data

    def __repr__(self):
        return f"IntMatrix({self.data!r})"

    def hstack(self, other):
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return IntMatrix(self.rows, self.cols + other.cols,
                         [a + b for a, b in zip(self.data, other.data)])

    def triplets(self):
        for i, row in enumerate(self.data):
            for j, v in enumerate(row):
                if v:
                    yield i, j, v


class AbelianGroup:
    """Finitely generated abelian group: free rank plus invariant factors.

    Torsion is stored in divisibility order (each factor divides the
    next), all factors > 1, so equality of groups is list equality.

    >>> str(AbelianGroup(2, (2, 6)))
    'Z^2 + Z/2 + Z/6'
    """

    __slots__ = ("free_rank", "torsion")

    def __init__(self, free_rank, torsion=()):
        torsion = tuple(int(t) for t in torsion)
        if free_rank < 0:
            raise ValueError("negative free rank")
        for a, b in zip(torsion, torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {torsion} not a divisibility chain")
        if any(t < 2 for t in torsion):
            raise ValueError("torsion factors must exceed 1")
        self.free_rank = free_rank
        self.torsion = torsion

    @classmethod
    def zero(cls):
        return cls(0)

    @classmethod
    def free(cls, rank):
        return cls(rank)

    def is_zero(self):
        return self.free_rank == 0 and not self.torsion

    def plus_free(self, k=1):
        return AbelianGroup(self.free_rank + k, self.torsion)

    def __eq__(self, other):
        if not isinstance(other, AbelianGroup):
            return NotImplemented
        return (self.free_rank == other.free_rank
                and self.torsion == other.torsion)

    def __hash__(self):
        return hash((self.free_rank, self.torsion))

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"AbelianGroup({self.free_rank}, {self.torsion})"

    def to_json(self):
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


class SmithDecomposition:
    """U @ A @ V == D with U, V unimodular and D = diag(invariant factors)."""

    __slots__ = ("U", "D", "V", "Uinv", "Vinv", "rank", "invariant_factors")

    def __init__(self, U, D, V, Uinv, Vinv, rank, invariant_factors):
        self.U = U
        self.D = D
        self.V = V
        self.Uinv = Uinv
        self.Vinv = Vinv
        self.rank = rank
        self.invariant_factors = invariant_factors


def _pick_pivot(data, start, rows, cols):
    best = None
    for i in range(start, rows):
        row = data[i]
        for j in range(start, cols):
            v = row[j]
            if v:
                key = (abs(v), i, j)
                if best is None or key < best[0]:
                    best = (key, i, j)
                    if abs(v) == 1 and i == start:
                        return best[1], best[2]
    return (None, None) if best is None else (best[1], best[2])


def smith(A, transforms=True):
    """Smith normal form with transforms, deterministic pivoting.

    Pivot rule: smallest nonzero magnitude, then lowest (row, column)
    index.  Returns a SmithDecomposition; D has positive diagonal in a
    divisibility chain.  When ``transforms`` is False the U/V/inverse
    fields are None (cheaper, factors only).
    """
    rows, cols = A.rows, A.cols
    d = [r[:] for r in A.data]
    track = transforms
    U = [[int(i == j) for j in range(rows)] for i in range(rows)] if track else None
    Ui = [r[:] for r in U] if track else None
    V = [[int(i == j) for j in range(cols)] for i in range(cols)] if track else None
    Vi = [r[:] for r in V] if track else None

    def row_combine(t, i, x, y, z, w):
        # rows (t, i) <- (x*t + y*i, z*t + w*i); det(x w - y z) = +-1
        for mat in (d, U):
            if mat is None:
                continue
            rt, ri = mat[t], mat[i]
            for j in range(len(rt)):
                a, b = rt[j], ri[j]
                rt[j] = x * a + y * b
                ri[j] = z * a + w * b
        if track:
            # inverse gets columns combined by the inverse 2x2
            for r in Ui:
                a, b = r[t], r[i]
                r[t] = w * a - z * b
                r[i] = -y * a + x * b

    def col_combine(t, j, x, y, z, w):
        for r in d:
            a, b = r[t], r[j]
            r[t] = x * a + y * b
            r[j] = z * a + w * b
        if track:
            for r in V:
                a, b = r[t], r[j]
                r[t] = x * a + y * b
                r[j] = z * a + w * b
            rt, rj = Vi[t], Vi[j]
            for k in range(len(rt)):
                a, b = rt[k], rj[k]
                rt[k] = w * a - z * b
                rj[k] = -y * a + x * b

    def row_swap(t, i):
        d[t], d[i] = d[i], d[t]
        if track:
            U[t], U[i] = U[i], U[t]
            for r in Ui:
                r[t], r[i] = r[i], r[t]

    def col_swap(t, j):
        for r in d:
            r[t], r[j] = r[j], r[t]
        if track:
            for r in V:
                r[t], r[j] = r[j], r[t]
            Vi[t], Vi[j] = Vi[j], Vi[t]

    def clear_col(t):
        changed = False
        for i in range(t + 1, rows):
            v = d[i][t]
            if not v:
                continue
            piv = d[t][t]
            if v % piv == 0:
                q = v // piv
                row_combine(t, i, 1, 0, -q, 1)
            else:
                g, x, y = xgcd(piv, v)
                row_combine(t, i, x, y, -(v // g), piv // g)
                changed = True
        return changed

    def clear_row(t):
        changed = False
        for j in range(t + 1, cols):
            v = d[t][j]
            if not v:
                continue
            piv = d[t][t]
            if v % piv == 0:
                q = v // piv
                col_combine(t, j, 1, 0, -q, 1)
            else:
                g, x, y = xgcd(piv, v)
                col_combine(t, j, x, y, -(v // g), piv // g)
                changed = True
        return changed

    n = min(rows, cols)
    rank = 0
    for t in range(n):
        pi, pj = _pick_pivot(d, t, rows, cols)
        if pi is None:
            break
        if pi != t:
            row_swap(t, pi)
        if pj != t:
            col_swap(t, pj)
        while True:
            refined = clear_col(t)
            refined |= clear_row(t)
            if not (refined or any(d[i][t] for i in range(t + 1, rows))
                    or any(d[t][j] for j in range(t + 1, cols))):
                break
        rank += 1

    def make_positive(t):
        if d[t][t] < 0:
            d[t][t] = -d[t][t]
            if track:
                for j in range(rows):
                    U[t][j] = -U[t][j]
                for r in Ui:
                    r[t] = -r[t]

    # normalize signs, then enforce the divisibility chain
    for t in range(rank):
        make_positive(t)
    changed = True
    while changed:
        changed = False
        for t in range(rank - 1):
            a, b = d[t][t], d[t + 1][t + 1]
            if b % a:
                changed = True
                # pull b into column t, then re-clear the 2x2 block
                col_combine(t, t + 1, 1, 1, 0, 1)
                while True:
                    refined = clear_col(t)
                    refined |= clear_row(t)
                    if not (refined or any(d[i][t] for i in range(t + 1, rows))
                            or any(d[t][j] for j in range(t + 1, cols))):
                        break
                make_positive(t)
                make_positive(t + 1)

    D = IntMatrix(rows, cols, d)
    factors = [d[t][t] for t in range(rank)]
    out = SmithDecomposition(
        IntMatrix(rows, rows, U) if track else None,
        D,
        IntMatrix(cols, cols, V) if track else None,
        IntMatrix(rows, rows, Ui) if track else None,
        IntMatrix(cols, cols, Vi) if track else None,
        rank, factors)
    if track and __debug__:
        assert (out.U @ A @ out.V) == D, "SNF transform identity violated"
        assert (out.U @ out.Uinv) == IntMatrix.identity(rows)
        assert (out.V @ out.Vinv) == IntMatrix.identity(cols)
    return out


def _sparse_build(triplets):
    """dict-of-dict rows plus a column index of nonzero positions."""
    rows = {}
    cols = {}
    for i, j, v in triplets:
        if not v:
            continue
        row = rows.setdefault(i, {})
        nv = row.get(j, 0) + v
        if nv:
            row[j] = nv
            cols.setdefault(j, set()).add(i)
        else:
            del row[j]
            cols[j].discard(i)
    for i in [i for i, r in rows.items() if not r]:
        del rows[i]
    for j in [j for j, c in cols.items() if not c]:
        del cols[j]
    return rows, cols


def _sparse_set(rows, cols, i, j, v):
    row = rows.setdefault(i, {})
    if v:
        row[j] = v
        cols.setdefault(j, set()).add(i)
    else:
        if j in row:
            del row[j]
            cols[j].discard(i)
            if not cols[j]:
                del cols[j]
        if not row:
            del rows[i]


def _pick_sparse_pivot(rows, cols, units_first=True):
    """(i, j) of the next pivot: thinnest column, then unit entries with
    the thinnest row, then smallest magnitude.  Deterministic."""
    if not cols:
        return None
    j = min(cols, key=lambda c: (len(cols[c]), c))
    best = None
    for i in cols[j]:
        v = rows[i][j]
        key = ((0 if (units_first and abs(v) == 1) else 1),
               abs(v), len(rows[i]), i)
        if best is None or key < best[0]:
            best = (key, i)
    return best[1], j


def _row_axpy(rows, cols, dst, src, q):
    """row[dst] -= q * row[src], maintaining the column index."""
    if not q:
        return
    src_row = list(rows.get(src, {}).items())
    drow = rows.get(dst, {})
    for j, v in src_row:
        nv = drow.get(j, 0) - q * v
        _sparse_set(rows, cols, dst, j, nv)


def _row_combine2(rows, cols, t, i, x, y, z, w):
    """rows (t, i) <- (x t + y i, z t + w i); determinant must be +-1."""
    rt = dict(rows.get(t, {}))
    ri = dict(rows.get(i, {}))
    for j in set(rt) | set(ri):
        a, b = rt.get(j, 0), ri.get(j, 0)
        _sparse_set(rows, cols, t, j, x * a + y * b)
        _sparse_set(rows, cols, i, j, z * a + w * b)


def _col_axpy(rows, cols, dst, src, q):
    """col[dst] -= q * col[src]."""
    if not q:
        return
    for i in list(cols.get(src, ())):
        v = rows[i][src]
        nv = rows.get(i, {}).get(dst, 0) - q * v
        _sparse_set(rows, cols, i, dst, nv)


def _col_combine2(rows, cols, t, j, x, y, z, w):
    """cols (t, j) <- (x t + y j, z t + w j)."""
    touched = set(cols.get(t, ())) | set(cols.get(j, ()))
    for i in touched:
        row = rows.get(i, {})
        a, b = row.get(t, 0), row.get(j, 0)
        _sparse_set(rows, cols, i, t, x * a + y * b)
        _sparse_set(rows, cols, i, j, z * a + w * b)


def sparse_rank_over_Q(triplets):
    """Rank over the rationals of a sparse integer matrix.

    Row-operation Gaussian elimination on the Schur complement; exact
    gcd row combinations when the pivot does not divide an entry, so no
    fractions ever appear.
    """
    rows, cols = _sparse_build(triplets)
    rank = 0
    while cols:
        i, j = _pick_sparse_pivot(rows, cols)
        for i2 in list(cols[j]):
            if i2 == i:
                continue
            piv = rows[i][j]
            v = rows[i2][j]
            if v % piv == 0:
                _row_axpy(rows, cols, i2, i, v // piv)
            else:
                g, x, y = xgcd(piv, v)
                _row_combine2(rows, cols, i, i2, x, y, -(v // g), piv // g)
        # drop the pivot row and column from the active submatrix
        for j2 in list(rows.get(i, {})):
            _sparse_set(rows, cols, i, j2, 0)
        rank += 1
    return rank


_DENSIFY_MIN = 48
_DENSIFY_FILL = 0.25


def sparse_rank_mod_p(triplets, p):
    """Rank over F_p; switches to the dense kernel once fill-in grows."""
    from posethom import kernels
    rows, cols = _sparse_build(((i, j, v % p) for i, j, v in triplets))
    rank = 0
    while cols:
        nr, nc = len(rows), len(cols)
        if min(nr, nc) >= _DENSIFY_MIN:
            nnz = sum(len(r) for r in rows.values())
            if nnz > _DENSIFY_FILL * nr * nc:
                row_ids = sorted(rows)
                col_ids = {j: k for k, j in enumerate(sorted(cols))}
                dense = [[0] * len(col_ids) for _ in row_ids]
                for a, i in enumerate(row_ids):
                    for j, v in rows[i].items():
                        dense[a][col_ids[j]] = v
                return rank + kernels.rank_mod_dense(dense, p)
        i, j = _pick_sparse_pivot(rows, cols, units_first=False)
        inv = pow(rows[i][j], -1, p)
        src_items = list(rows[i].items())
        for i2 in list(cols[j]):
            if i2 == i:
                continue
            f = rows[i2][j] * inv % p
            drow = rows[i2]
            for j2, v in src_items:
                nv = (drow.get(j2, 0) - f * v) % p
                _sparse_set(rows, cols, i2, j2, nv)
        for j2 in list(rows.get(i, {})):
            _sparse_set(rows, cols, i, j2, 0)
        rank += 1
    return rank


def _divisibility_chain(values):
    """Normalize a multiset of nonzero diagonal entries into the chain."""
    vals = [abs(v) for v in values]
    changed = True
    while changed:
        changed = False
        for a in range(len(vals)):
            for b in range(a + 1, len(vals)):
                x, y = vals[a], vals[b]
                if x % y and y % x:
                    g = gcd(x, y)
                    vals[a], vals[b] = g, x * y // g
                    changed = True
    # every pair is now comparable, so the ascending sort is the chain
    vals.sort()
    return vals


def sparse_invariant_factors(triplets):
    """(rank, invariant factor chain) of a sparse integer matrix.

    Full Smith reduction without transforms; unit pivots (the common
    case for the lattice differentials) clear in a single pass.
    """
    rows, cols = _sparse_build(triplets)
    diagonal = []
    while cols:
        i, j = _pick_sparse_pivot(rows, cols)
        while True:
            for i2 in list(cols.get(j, ())):
                if i2 == i:
                    continue
                piv = rows[i][j]
                v = rows[i2][j]
                if v % piv == 0:
                    _row_axpy(rows, cols, i2, i, v // piv)
                else:
                    g, x, y = xgcd(piv, v)
                    _row_combine2(rows, cols, i, i2, x, y,
                                  -(v // g), piv // g)
            row_rest = [j2 for j2 in rows.get(i, {}) if j2 != j]
            if not row_rest:
                break
            for j2 in row_rest:
                piv = rows[i][j]
                v = rows[i][j2]
                if v % piv == 0:
                    _col_axpy(rows, cols, j2, j, v // piv)
                else:
                    g, x, y = xgcd(piv, v)
                    _col_combine2(rows, cols, j, j2, x, y,
                                  -(v // g), piv // g)
            if all(i2 == i for i2 in cols.get(j, ())):
                break
        diagonal.append(abs(rows[i][j]))
        _sparse_set(rows, cols, i, j, 0)
    chain = _divisibility_chain(diagonal)
    return len(diagonal), chain


def invariant_factors(A):
    """Invariant factor chain of an IntMatrix (1s included)."""
    _, chain = sparse_invariant_factors(A.triplets())
    return chain


def rank_int(A):
    """Rank of an IntMatrix over the rationals."""
    return sparse_rank_over_Q(A.triplets())


RATIONALS = "Q"


def rank_mod(A, field=RATIONALS):
    """Rank of an integer matrix over Q or over F_p for a prime p."""
    if field in (RATIONALS, None, "rationals"):
        return rank_int(A)
    p = int(field)
    if not _is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    if p >= 1 << 31:
        raise ValueError("prime moduli supported up to 2^31")
    return sparse_rank_mod_p(A.triplets(), p)


class CompositionError(ValueError):
    """Raised when consecutive differentials do not compose to zero."""


def cohomology_at(d_in, d_out, check=True):
    """ker(d_out) / im(d_in) for integer matrices with d_out @ d_in = 0.

    The middle module is Z^n with n = d_in.rows = d_out.cols.  The free
    rank is dim ker(d_out) - rank(d_in); the torsion is the invariant
    factors of d_in exceeding 1 (valid because the kernel is a saturated
    sublattice containing the image).
    """
    n = d_in.rows
    if d_out.cols != n:
        raise ValueError(
            f"shape mismatch: d_in maps into Z^{n}, d_out out of Z^{d_out.cols}")
    if check and not (d_out @ d_in).is_zero():
        raise CompositionError("d_out @ d_in != 0")
    rank_in, chain = sparse_invariant_factors(d_in.triplets())
    rank_out = sparse_rank_over_Q(d_out.triplets())
    free = n - rank_out - rank_in
    return AbelianGroup(free, [f for f in chain if f > 1])


def solve_integer(A, b):
    """Some integer solution x of A x = b, or None when none exists."""
    X = solve_integer_matrix(A, IntMatrix.from_rows([[v] for v in b], 1))
    return None if X is None else [row[0] for row in X.data]


def solve_integer_matrix(A, B, snf=None):
    """Integer X with A X = B, or None.  ``snf`` may pass a cached
    smith(A) decomposition."""
    if A.rows != B.rows:
        raise ValueError("row count mismatch")
    S = snf or smith(A)
    Y = S.U @ B
    Z = IntMatrix.zeros(A.cols, B.cols)
    for i in range(A.rows):
        d = S.D[i, i] if i < min(A.rows, A.cols) else 0
        for j in range(B.cols):
            y = Y[i, j]
            if d == 0:
                if y != 0:
                    return None
            else:
                if y % d:
                    return None
                Z[i, j] = y // d
    return S.V @ Z


def kernel_basis(A, snf=None):
    """Columns spanning ker(A) over Z (a saturated sublattice basis)."""
    S = snf or smith(A)
    k = A.cols - S.rank
    data = [[S.V[i, S.rank + j] for j in range(k)] for i in range(A.cols)]
    return IntMatrix(A.cols, k, data)


def det_int(A):
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = A.rows
    if n != A.cols:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    a = [row[:] for row in A.data]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
