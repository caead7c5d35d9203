"""Chain complexes of full subcomplexes, homology with explicit cycle
representatives, and maps induced by inclusions K_J -> K_L.

Faces keep their ambient labels, so the chain inclusion of K_J into K_L
is literally the identity on faces.  Degree 0 and -1 homology is pinned
combinatorially: unreduced H_0 is based by the minimal vertex of each
connected component (components ordered by minimal vertex), reduced
H~_0 by the differences (min of c_i) - (min of c_0) for i >= 1, and
H~_{-1} by the empty face.  Higher degrees go through Smith normal form.
"""

from threading import Lock

from posethom import fields
from posethom.linalg import (
    AbelianGroup, IntMatrix, cohomology_at, smith, solve_integer_matrix,
)
from posethom.simplicial import as_mask, vertices_of


class ChainComplexZ:
    """Integer chain complex of K_J; ``reduced`` adds the empty face in
    degree -1 (the augmentation)."""

    __slots__ = ("reduced", "basis", "boundary")

    def __init__(self, reduced, basis, boundary):
        self.reduced = reduced
        self.basis = basis
        self.boundary = boundary

    def space_dim(self, q):
        return len(self.basis.get(q, ()))

    def basis_of(self, q):
        return self.basis.get(q, [])

    def boundary_matrix(self, q):
        """The map C_q -> C_{q-1}; correctly shaped zeros off the range."""
        M = self.boundary.get(q)
        if M is None:
            M = IntMatrix.zeros(self.space_dim(q - 1), self.space_dim(q))
        return M

    def degrees(self):
        return sorted(self.basis)


def chain_complex(K, J=None, reduced=False):
    """Chain complex of the full subcomplex K_J, bases sorted by bitmask.

    The boundary uses the alternating-sign rule on vertex-increasing
    orderings; the reduced variant includes the empty face in degree -1,
    so its degree-0 boundary is the augmentation row of ones.
    """
    J = (1 << K.m) - 1 if J is None else as_mask(K.m, J)
    basis = {}
    for f in K.faces:
        if f & ~J == 0:
            q = f.bit_count() - 1
            if q >= 0 or reduced:
                basis.setdefault(q, []).append(f)
    for fs in basis.values():
        fs.sort()
    index = {q: {f: i for i, f in enumerate(fs)} for q, fs in basis.items()}
    boundary = {}
    for q, fs in basis.items():
        if q - 1 not in basis:
            continue  # boundary_matrix() supplies the zero-row shape
        low = index[q - 1]
        M = IntMatrix.zeros(len(basis[q - 1]), len(fs))
        for col, f in enumerate(fs):
            sign = 1
            for v in vertices_of(f):
                M[low[f ^ (1 << (v - 1))], col] = sign
                sign = -sign
        boundary[q] = M
    return ChainComplexZ(reduced, basis, boundary)


def reduced_cohomology(K):
    """Reduced simplicial cohomology of K over Z, degrees -1..dim(K).

    Computed directly from transposed boundary (i.e. coboundary)
    matrices; independent of the subset-lattice machinery, which is the
    point: it serves as the oracle for the face-functor comparison.
    """
    C = chain_complex(K, None, reduced=True)
    out = {}
    for l in range(-1, max(K.dim, -1) + 1):
        delta_in = C.boundary_matrix(l).transpose()
        delta_out = C.boundary_matrix(l + 1).transpose()
        out[l] = cohomology_at(delta_in, delta_out, check=False)
    return out


class BasedHomology:
    """H_q(K_J) (or reduced) with explicit cycle representatives.

    ``representatives`` lists one degree-q cycle per generator, free
    generators first, then torsion generators aligned with
    ``group.torsion``; each vector is written in ``basis_faces``.
    """

    __slots__ = ("J", "q", "reduced", "group", "representatives",
                 "basis_faces", "_boundary", "_stacked")

    def __init__(self, J, q, reduced, group, representatives, basis_faces,
                 boundary_out=None):
        self.J = J
        self.q = q
        self.reduced = reduced
        self.group = group
        self.representatives = representatives
        self.basis_faces = basis_faces
        self._boundary = boundary_out
        self._stacked = None

    def presentation_smith(self):
        """Cached Smith data of the stacked (cycles | boundaries) matrix,
        used to express arbitrary cycles in this basis."""
        if self._stacked is None:
            n = len(self.basis_faces)
            C = IntMatrix(n, len(self.representatives),
                          [[rep[i] for rep in self.representatives]
                           for i in range(n)])
            stacked = C.hstack(self._boundary)
            self._stacked = (stacked, smith(stacked))
        return self._stacked

    def reduce_coords(self, coords):
        """Canonicalize generator coordinates: torsion entries mod d."""
        free = self.group.free_rank
        out = list(coords)
        for t, d in enumerate(self.group.torsion):
            out[free + t] %= d
        return out


class InducedMap:
    """Matrix of H_q(K_J) -> H_q(K_L) in the pinned bases.

    Rows follow the target generator order (free, then torsion with
    entries canonicalized mod the invariant factor)."""

    __slots__ = ("J", "L", "q", "reduced", "matrix", "target")

    def __init__(self, J, L, q, reduced, matrix, target):
        self.J = J
        self.L = L
        self.q = q
        self.reduced = reduced
        self.matrix = matrix
        self.target = target

    def then(self, other):
        """Composite J -> L -> N from self (J->L) and other (L->N)."""
        if other.J != self.L:
            raise ValueError("maps do not compose")
        prod = other.matrix @ self.matrix
        data = [other.target.reduce_coords([prod[i, j] for i in range(prod.rows)])
                for j in range(prod.cols)]
        M = IntMatrix(prod.rows, prod.cols,
                      [[data[j][i] for j in range(prod.cols)]
                       for i in range(prod.rows)])
        return InducedMap(self.J, other.L, self.q, self.reduced, M,
                          other.target)

    def __eq__(self, other):
        if not isinstance(other, InducedMap):
            return NotImplemented
        return ((self.J, self.L, self.q, self.reduced) ==
                (other.J, other.L, other.q, other.reduced)
                and self.matrix == other.matrix)


class HomologyEngine:
    """Lazy, cached homology of all full subcomplexes of one complex.

    Cache keys are (bitmask J, q, reduced); the cache is guarded by a
    lock so concurrent readers see consistent insert-or-get behaviour.
    """

    def __init__(self, K):
        self.K = K
        self.full = (1 << K.m) - 1
        self.support = K.vertex_support  # ghost vertices never count
        self._edges = list(K.faces_of_card(2))
        self._hom = {}
        self._comp = {}
        self._chains = {}
        self._lock = Lock()

    # -- connected components ------------------------------------------

    def components(self, J):
        """(tuple of component minimal vertices, vertex -> slot map).

        Only vertices that are faces of K count; for a complex without
        ghost vertices that is every element of J."""
        J = as_mask(self.K.m, J) & self.support
        hit = self._comp.get(J)
        if hit is not None:
            return hit
        verts = vertices_of(J)
        parent = {v: v for v in verts}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for e in self._edges:
            if e & ~J == 0:
                a, b = vertices_of(e)
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        mins = sorted({find(v) for v in verts})
        slot_of_root = {r: i for i, r in enumerate(mins)}
        slot = {v: slot_of_root[find(v)] for v in verts}
        result = (tuple(mins), slot)
        with self._lock:
            self._comp.setdefault(J, result)
        return self._comp[J]

    def _chain(self, J, reduced):
        key = (J, reduced)
        C = self._chains.get(key)
        if C is None:
            C = chain_complex(self.K, J, reduced)
            with self._lock:
                self._chains.setdefault(key, C)
            C = self._chains[key]
        return C

    # -- based homology --------------------------------------------------

    def homology(self, J, q, reduced=False):
        J = as_mask(self.K.m, J)
        if q < -1:
            raise ValueError("homological degree must be >= -1")
        if q == -1 and not reduced:
            raise ValueError("degree -1 requires the reduced complex")
        key = (J, q, reduced)
        hit = self._hom.get(key)
        if hit is not None:
            return hit
        if q == -1:
            H = self._degree_minus_one(J)
        elif q == 0:
            H = self._degree_zero(J, reduced)
        else:
            H = self._general(J, q, reduced)
        with self._lock:
            self._hom.setdefault(key, H)
        return self._hom[key]

    def _degree_minus_one(self, J):
        if J & self.support == 0:
            # K_J is the complex {∅}: only the augmentation survives
            return BasedHomology(J, -1, True, AbelianGroup(1), [[1]], [0],
                                 self._chain(J, True).boundary_matrix(0))
        return BasedHomology(J, -1, True, AbelianGroup(0), [], [0],
                             self._chain(J, True).boundary_matrix(0))

    def _degree_zero(self, J, reduced):
        verts = vertices_of(J & self.support)
        faces = [1 << (v - 1) for v in verts]
        pos = {v: i for i, v in enumerate(verts)}
        mins, slot = self.components(J)
        c = len(mins)
        boundary_out = self._chain(J, reduced).boundary_matrix(1)
        if not reduced:
            reps = []
            for v in mins:
                vec = [0] * len(verts)
                vec[pos[v]] = 1
                reps.append(vec)
            return BasedHomology(J, 0, reduced, AbelianGroup(c), reps,
                                 faces, boundary_out)
        reps = []
        for v in mins[1:]:
            vec = [0] * len(verts)
            vec[pos[v]] = 1
            vec[pos[mins[0]]] = -1
            reps.append(vec)
        return BasedHomology(J, 0, reduced, AbelianGroup(max(c - 1, 0)),
                             reps, faces, boundary_out)

    def _general(self, J, q, reduced):
        C = self._chain(J, reduced)
        n = C.space_dim(q)
        basis = C.basis_of(q)
        dq = C.boundary_matrix(q)
        dq1 = C.boundary_matrix(q + 1)
        S1 = smith(dq)
        k = n - S1.rank
        kerb = IntMatrix(n, k, [[S1.V[i, S1.rank + j] for j in range(k)]
                                for i in range(n)])
        proj = IntMatrix(k, n, [S1.Vinv.data[S1.rank + t][:] for t in range(k)])
        S2 = smith(proj @ dq1)
        s = S2.rank
        divisors = S2.invariant_factors
        gen_cols = list(range(s, k)) + [i for i in range(s) if divisors[i] > 1]
        torsion = [d for d in divisors if d > 1]
        reps = [kerb @ S2.Uinv.column(c) for c in gen_cols]
        group = AbelianGroup(k - s, torsion)
        return BasedHomology(J, q, reduced, group, reps, basis, dq1)

    # -- induced maps ----------------------------------------------------

    def induced_matrix(self, J, L, q, reduced=False):
        J = as_mask(self.K.m, J)
        L = as_mask(self.K.m, L)
        if J & ~L:
            raise ValueError("need J contained in L")
        src = self.homology(J, q, reduced)
        tgt = self.homology(L, q, reduced)
        g_s = len(src.representatives)
        g_t = len(tgt.representatives)
        if q == -1:
            # nonzero exactly between subsets whose subcomplex is {∅},
            # where the inclusion is the identity on the empty face
            return IntMatrix.identity(1) if g_s == g_t == 1 else \
                IntMatrix.zeros(g_t, g_s)
        if q == 0:
            return self._degree_zero_induced(J, L, reduced, g_s, g_t)
        if g_s == 0:
            return IntMatrix.zeros(g_t, 0)
        tgt_index = {f: i for i, f in enumerate(tgt.basis_faces)}
        W = IntMatrix.zeros(len(tgt.basis_faces), g_s)
        for col, rep in enumerate(src.representatives):
            for fi, v in enumerate(rep):
                if v:
                    W[tgt_index[src.basis_faces[fi]], col] = v
        stacked, snf = tgt.presentation_smith()
        X = solve_integer_matrix(stacked, W, snf=snf)
        if X is None:
            raise RuntimeError(
                "cycle not expressible in target homology: invariant violated")
        cols = [tgt.reduce_coords([X[i, j] for i in range(g_t)])
                for j in range(g_s)]
        return IntMatrix(g_t, g_s, [[cols[j][i] for j in range(g_s)]
                                    for i in range(g_t)])

    def _degree_zero_induced(self, J, L, reduced, g_s, g_t):
        mins_s, _ = self.components(J)
        mins_t, slot_t = self.components(L)
        M = IntMatrix.zeros(g_t, g_s)
        if not reduced:
            for col, v in enumerate(mins_s):
                M[slot_t[v], col] = 1
            return M
        if not mins_s:
            return M
        base = slot_t[mins_s[0]]
        for col, v in enumerate(mins_s[1:]):
            a = slot_t[v]
            if a:
                M[a - 1, col] += 1
            if base:
                M[base - 1, col] -= 1
        return M

    def induced(self, J, L, q, reduced=False):
        M = self.induced_matrix(J, L, q, reduced)
        return InducedMap(as_mask(self.K.m, J), as_mask(self.K.m, L), q,
                          reduced, M, self.homology(L, q, reduced))


class FieldHomologyEngine:
    """Homology of full subcomplexes with F_p coefficients.

    Degrees -1 and 0 reuse the combinatorial bases (they are valid over
    any field); higher degrees pick representatives through echelon
    form.  Values are dimensions, maps are matrices over the field.
    """

    def __init__(self, K, field):
        self.K = K
        self.field = field
        self._int = HomologyEngine(K)
        self._hom = {}

    def homology(self, J, q, reduced=False):
        """(dimension, representative vectors, basis faces) over F_p."""
        J = as_mask(self.K.m, J)
        key = (J, q, reduced)
        hit = self._hom.get(key)
        if hit is not None:
            return hit
        if q <= 0:
            H = self._int.homology(J, q, reduced)
            reps = [[self.field.reduce(v) for v in rep]
                    for rep in H.representatives]
            out = (len(reps), reps, H.basis_faces)
        else:
            out = self._general(J, q, reduced)
        self._hom[key] = out
        return out

    def _general(self, J, q, reduced):
        C = self._int._chain(J, reduced)
        basis = C.basis_of(q)
        n = len(basis)
        dq = C.boundary_matrix(q)
        dq1 = C.boundary_matrix(q + 1)
        cycles = fields.kernel_basis(dq.data, n, self.field)
        bcols = [dq1.column(j) for j in range(dq1.cols)]
        stacked_rows = [[self.field.reduce(b[i]) for b in bcols] +
                        [z[i] for z in cycles] for i in range(n)]
        nb = len(bcols)
        _, pivots, _ = self.field.rref(stacked_rows, nb + len(cycles))
        reps = [cycles[pc - nb] for pc in pivots if pc >= nb]
        return (len(reps), reps, basis)

    def induced_matrix(self, J, L, q, reduced=False):
        """Columns: coordinates of pushed source representatives."""
        J = as_mask(self.K.m, J)
        L = as_mask(self.K.m, L)
        if J & ~L:
            raise ValueError("need J contained in L")
        if q == -1:
            gs = self.homology(J, q, reduced)[0]
            gt = self.homology(L, q, reduced)[0]
            return [[self.field.reduce(1 if gs == gt == 1 and i == j else 0)
                     for j in range(gs)] for i in range(gt)]
        if q == 0:
            M = self._int._degree_zero_induced(
                J, L, reduced, self.homology(J, 0, reduced)[0],
                self.homology(L, 0, reduced)[0])
            return [[self.field.reduce(v) for v in row] for row in M.data]
        g_s, src_reps, src_basis = self.homology(J, q, reduced)
        g_t, tgt_reps, tgt_basis = self.homology(L, q, reduced)
        if g_s == 0 or g_t == 0:
            return [[self.field.reduce(0)] * g_s for _ in range(g_t)]
        tgt_index = {f: i for i, f in enumerate(tgt_basis)}
        n = len(tgt_basis)
        W_cols = []
        for rep in src_reps:
            w = [self.field.reduce(0)] * n
            for fi, v in enumerate(rep):
                if v:
                    w[tgt_index[src_basis[fi]]] = v
            W_cols.append(w)
        dq1 = self._int._chain(L, reduced).boundary_matrix(q + 1)
        A_rows = [[tgt_reps[g][i] for g in range(g_t)] +
                  [self.field.reduce(dq1[i, j]) for j in range(dq1.cols)]
                  for i in range(n)]
        X = fields.solve_matrix(A_rows, g_t + dq1.cols, W_cols, self.field)
        if X is None:
            raise RuntimeError(
                "cycle not expressible in target homology: invariant violated")
        return [[X[j][i] for j in range(g_s)] for i in range(g_t)]
