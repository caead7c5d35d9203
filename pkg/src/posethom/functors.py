"""The functor library: based functors from the subset lattice to
free modules, given by per-subset dimensions and cover-relation maps.

A functor stores, for every subset J of {1..m}, a value dimension (zero
dimensions are simply absent) and, for every cover J < J + {x}, an
integer matrix.  The commuting-square condition

    map(J+{x} < J+{x,y}) @ map(J < J+{x}) == map(J+{y} < J+{x,y}) @ map(J < J+{y})

is what makes the data a functor; ``check_commuting`` verifies it and
assembly reports the offending square on failure.

Coefficient regimes: integer values ("Z") are available exactly where
the homology values are genuinely free, i.e. degrees q <= 0 of the
subcomplex homology functors; over the rationals any degree works (the
values are the free parts, by universal coefficients); over F_p any
degree works through the mod-p homology engine.
"""

from posethom.fields import GF
from posethom.homology import FieldHomologyEngine, HomologyEngine
from posethom.simplicial import vertices_of


class RegimeError(ValueError):
    """A coefficient/degree combination outside the supported regime."""


class NonFunctorialError(ValueError):
    """Input maps fail the commuting-square condition."""

    def __init__(self, J, x, y):
        self.square = (J, x, y)
        super().__init__(
            f"square at J={vertices_of(J)} with x={x}, y={y} does not commute")


def _matmul_rows(A, B, cols_b=None):
    """Product of list-of-rows matrices (integer or field entries).

    ``cols_b`` supplies the width when B has no rows (a zero-row matrix
    cannot carry its own column count)."""
    if not A:
        return []
    nb = len(B[0]) if B else (cols_b or 0)
    out = []
    for row in A:
        acc = [0] * nb
        for k, a in enumerate(row):
            if a:
                brow = B[k]
                for j in range(nb):
                    if brow[j]:
                        acc[j] += a * brow[j]
        out.append(acc)
    return out


class BasedFunctor:
    """Free-module valued functor on the subset lattice of {1..m}."""

    __slots__ = ("m", "ring", "dims", "maps", "labels", "name")

    def __init__(self, m, dims, maps, ring="Z", labels=None, name=""):
        self.m = m
        self.ring = ring
        self.dims = {J: n for J, n in dims.items() if n}
        self.maps = maps
        self.labels = labels or {}
        self.name = name

    def dim(self, J):
        return self.dims.get(J, 0)

    def map_rows(self, J, x):
        """Matrix of the cover J < J+{x} as a list of rows."""
        bit = 1 << (x - 1)
        if J & bit:
            raise ValueError(f"{x} already in J")
        rows = self.dim(J | bit)
        cols = self.dim(J)
        M = self.maps.get((J, x))
        if M is None:
            return [[0] * cols for _ in range(rows)]
        return M

    def _reduce_entry(self, v):
        return self.ring.reduce(v) if isinstance(self.ring, GF) else v

    def check_commuting(self):
        """Return None, or the first non-commuting (J, x, y)."""
        full = (1 << self.m) - 1
        for J in range(full + 1):
            free = [x for x in range(1, self.m + 1) if not J >> (x - 1) & 1]
            for a, x in enumerate(free):
                for y in free[a + 1:]:
                    bx, by = 1 << (x - 1), 1 << (y - 1)
                    n_J = self.dim(J)
                    via_x = _matmul_rows(self.map_rows(J | bx, y),
                                         self.map_rows(J, x), n_J)
                    via_y = _matmul_rows(self.map_rows(J | by, x),
                                         self.map_rows(J, y), n_J)
                    if isinstance(self.ring, GF):
                        p = self.ring.p
                        via_x = [[v % p for v in r] for r in via_x]
                        via_y = [[v % p for v in r] for r in via_y]
                    if via_x != via_y:
                        return (J, x, y)
        return None


def constant_functor(m, rank=1):
    """The constant functor with value Z^rank and identity cover maps."""
    ident = [[int(i == j) for j in range(rank)] for i in range(rank)]
    dims = {J: rank for J in range(1 << m)}
    maps = {}
    for J in range(1 << m):
        for x in range(1, m + 1):
            if not J >> (x - 1) & 1:
                maps[(J, x)] = ident
    return BasedFunctor(m, dims, maps, name=f"constant(Z^{rank})")


def functor_A(m):
    """Z at every nonempty subset, 0 at the empty set, identities between
    nonempty subsets.  Its cohomology is Z concentrated in degree 1."""
    if m < 1:
        raise ValueError("m must be >= 1")
    dims = {J: 1 for J in range(1, 1 << m)}
    maps = {}
    for J in range(1, 1 << m):
        for x in range(1, m + 1):
            if not J >> (x - 1) & 1:
                maps[(J, x)] = [[1]]
    return BasedFunctor(m, dims, maps, name="A")


def functor_face(K):
    """Rank one at each face of K, zero elsewhere; cover maps between
    faces send indicator to indicator.  Its cochain complex is the
    reduced simplicial cochain complex of K, shifted one degree."""
    dims = {J: 1 for J in K.faces}
    maps = {}
    for J in K.faces:
        for x in range(1, K.m + 1):
            bit = 1 << (x - 1)
            if not J & bit and (J | bit) in K.faces:
                maps[(J, x)] = [[1]]
    return BasedFunctor(K.m, dims, maps, name="face")


def functor_H(K, q, reduced, coeffs="Z", engine=None):
    """The subcomplex homology functor J -> H_q(K_J) (or reduced).

    coeffs "Z" needs the free regime (q <= 0); "Q" takes free parts of
    the integer homology (universal coefficients); a GF instance uses
    the mod-p engine.  Unreduced degree -1 is the zero functor.
    """
    if q < -1:
        raise ValueError("homological degree must be >= -1")
    tag = "H~" if reduced else "H"
    name = f"{tag}_{q}(K_-)"
    if isinstance(coeffs, GF):
        return _functor_H_modp(K, q, reduced, coeffs, engine, name)
    if coeffs not in ("Z", "Q"):
        raise ValueError(f"unsupported coefficients {coeffs!r}")
    if coeffs == "Z" and q > 0:
        raise RegimeError(
            f"H_{q} may have torsion: integer functor values are only "
            "available for q <= 0 (use field coefficients)")
    if q == -1 and not reduced:
        return BasedFunctor(K.m, {}, {}, ring=coeffs, name=name)
    eng = engine or HomologyEngine(K)
    full = (1 << K.m) - 1
    dims = {}
    labels = {}
    free_rank = {}
    for J in range(full + 1):
        H = eng.homology(J, q, reduced)
        free_rank[J] = H.group.free_rank
        n = H.group.free_rank if coeffs == "Q" else \
            H.group.free_rank + len(H.group.torsion)
        if n:
            dims[J] = n
            if q == 0:
                mins = eng.components(J)[0]
                labels[J] = mins[1:] if reduced else mins
    maps = {}
    for J in range(full + 1):
        if not dims.get(J):
            continue
        for x in range(1, K.m + 1):
            bit = 1 << (x - 1)
            if J & bit or not dims.get(J | bit):
                continue
            M = eng.induced_matrix(J, J | bit, q, reduced)
            rows = M.data
            if coeffs == "Q":
                rows = [row[:free_rank[J]] for row in rows[:free_rank[J | bit]]]
            maps[(J, x)] = rows
    return BasedFunctor(K.m, dims, maps, ring=coeffs, labels=labels,
                        name=name)


def _functor_H_modp(K, q, reduced, field, engine, name):
    if q == -1 and not reduced:
        return BasedFunctor(K.m, {}, {}, ring=field, name=name)
    eng = engine or FieldHomologyEngine(K, field)
    full = (1 << K.m) - 1
    dims = {}
    for J in range(full + 1):
        n = eng.homology(J, q, reduced)[0]
        if n:
            dims[J] = n
    maps = {}
    for J in range(full + 1):
        if not dims.get(J):
            continue
        for x in range(1, K.m + 1):
            bit = 1 << (x - 1)
            if J & bit or not dims.get(J | bit):
                continue
            maps[(J, x)] = eng.induced_matrix(J, J | bit, q, reduced)
    return BasedFunctor(K.m, dims, maps, ring=field, name=name)
