"""Assembly of the lattice cochain complex of a based functor and its
cohomology over Z, over Q, or over a prime field.

The degree-l cochain group is the direct sum of the functor values over
all l-element subsets, blocks ordered by subset bitmask value.  The
differential out of the block of J has one block per cover J < J+{x},

    (-1)^{eps(J;x)} * map(J < J+{x}),   eps(J;x) = #{j in J : j < x},

and the sign identity (for x < y not in J, eps(J;x) + eps(J+{x};y) and
eps(J;y) + eps(J+{y};x) have opposite parities) makes d compose to zero
exactly when the functor squares commute.
"""

from posethom.fields import GF
from posethom.functors import NonFunctorialError, _matmul_rows
from posethom.linalg import (
    AbelianGroup, IntMatrix, sparse_invariant_factors, sparse_rank_mod_p,
    sparse_rank_over_Q,
)


def epsilon(J, x):
    """Number of elements of J strictly below x; x must not lie in J."""
    bit = 1 << (x - 1)
    if J & bit:
        raise ValueError(f"{x} lies in J")
    return (J & (bit - 1)).bit_count()


class CochainComplex:
    """Assembled cochain complex: block layout plus sparse differentials."""

    __slots__ = ("m", "ring", "level_dims", "blocks", "offsets", "d")

    def __init__(self, m, ring, level_dims, blocks, offsets, d):
        self.m = m
        self.ring = ring
        self.level_dims = level_dims   # list, length m+1
        self.blocks = blocks           # level -> [(J, dim), ...] mask-sorted
        self.offsets = offsets         # J -> offset inside its level
        self.d = d                     # level -> list of (row, col, value)

    def d_triplets(self, l):
        return self.d[l] if 0 <= l < self.m else []

    def d_matrix(self, l):
        """Dense IntMatrix of d^l: C^l -> C^{l+1}."""
        rows = self.level_dims[l + 1] if l + 1 <= self.m else 0
        cols = self.level_dims[l] if 0 <= l <= self.m else 0
        return IntMatrix.from_triplets(rows, cols, self.d_triplets(l))

    def dd_offender(self):
        """First (l, row, col) where d^{l+1} d^l has a nonzero entry, or
        None when every composite vanishes exactly."""
        modulus = self.ring.p if isinstance(self.ring, GF) else None
        for l in range(self.m - 1):
            by_row = {}
            for r2, c2, v2 in self.d[l + 1]:
                by_row.setdefault(c2, []).append((r2, v2))
            acc = {}
            for r1, c1, v1 in self.d[l]:
                for r2, v2 in by_row.get(r1, ()):
                    acc[(r2, c1)] = acc.get((r2, c1), 0) + v2 * v1
            for (i, j), v in sorted(acc.items()):
                if (v % modulus) if modulus else v:
                    return (l, i, j)
        return None


def assemble(F, check=True):
    """Build the cochain complex of a based functor.

    With ``check`` on, every 2-face of the lattice is verified to
    commute before signs are applied; the first bad square is reported,
    which is exactly a d∘d failure certificate.
    """
    m = F.m
    blocks = {l: [] for l in range(m + 1)}
    offsets = {}
    level_dims = [0] * (m + 1)
    for J in sorted(F.dims):
        l = J.bit_count()
        offsets[J] = level_dims[l]
        blocks[l].append((J, F.dims[J]))
        level_dims[l] += F.dims[J]
    if check:
        bad = F.check_commuting()
        if bad is not None:
            raise NonFunctorialError(*bad)
    d = {}
    modulus = F.ring.p if isinstance(F.ring, GF) else None
    for l in range(m):
        triplets = []
        for J, ncols in blocks[l]:
            for x in range(1, m + 1):
                bit = 1 << (x - 1)
                if J & bit:
                    continue
                T = J | bit
                if T not in offsets:
                    continue
                sign = -1 if epsilon(J, x) & 1 else 1
                roff = offsets[T]
                coff = offsets[J]
                for r, row in enumerate(F.map_rows(J, x)):
                    for c, v in enumerate(row):
                        if v:
                            val = sign * v
                            if modulus:
                                val %= modulus
                            if val:
                                triplets.append((roff + r, coff + c, val))
        d[l] = triplets
    return CochainComplex(m, F.ring, level_dims, blocks, offsets, d)


def poset_cohomology(F, coeffs=None, check=True, cochain=None):
    """Cohomology of the assembled complex, degrees 0..m.

    Integer coefficients return AbelianGroups; "Q" or a GF instance
    return dimensions.  For an integer-valued functor, field
    coefficients mean the scalar extension of its cochain complex.
    """
    C = cochain or assemble(F, check)
    if coeffs is None:
        coeffs = C.ring
    m = C.m
    if isinstance(coeffs, GF):
        p = coeffs.p
        ranks = [sparse_rank_mod_p(C.d_triplets(l), p) for l in range(m)]
    elif coeffs == "Q" or (coeffs == "Z" and C.ring == "Q"):
        ranks = [sparse_rank_over_Q(C.d_triplets(l)) for l in range(m)]
        coeffs = "Q"
    elif coeffs == "Z":
        if C.ring != "Z":
            raise ValueError("integer cohomology needs an integer functor")
        data = [sparse_invariant_factors(C.d_triplets(l)) for l in range(m)]
        out = []
        for l in range(m + 1):
            rank_out = data[l][0] if l < m else 0
            rank_in, chain = data[l - 1] if l > 0 else (0, [])
            free = C.level_dims[l] - rank_out - rank_in
            out.append(AbelianGroup(free, [f for f in chain if f > 1]))
        return out
    else:
        raise ValueError(f"unsupported coefficients {coeffs!r}")
    return [C.level_dims[l]
            - (ranks[l] if l < m else 0)
            - (ranks[l - 1] if l > 0 else 0)
            for l in range(m + 1)]


class ConeCertificate:
    """Result of the iso-direction acyclicity test."""

    __slots__ = ("certified", "direction")

    def __init__(self, certified, direction=None):
        self.certified = certified
        self.direction = direction

    def __bool__(self):
        return self.certified

    def __repr__(self):
        return (f"ConeCertificate(acyclic-certified, x={self.direction})"
                if self.certified else "ConeCertificate(not-applicable)")


def cone_acyclicity_check(F):
    """Certify acyclicity when some direction x makes every cover map
    J < J+{x} an isomorphism; otherwise make no claim."""
    from posethom.linalg import det_int
    m = F.m
    modulus = F.ring.p if isinstance(F.ring, GF) else None
    for x in range(1, m + 1):
        bit = 1 << (x - 1)
        ok = True
        for J in range(1 << m):
            if J & bit:
                continue
            n_s, n_t = F.dim(J), F.dim(J | bit)
            if n_s != n_t:
                ok = False
                break
            if n_s == 0:
                continue
            det = det_int(IntMatrix.from_rows(F.map_rows(J, x), n_s))
            if modulus:
                if det % modulus == 0:
                    ok = False
                    break
            elif F.ring == "Z":
                if det not in (1, -1):
                    ok = False
                    break
            elif det == 0:
                ok = False
                break
        if ok:
            return ConeCertificate(True, x)
    return ConeCertificate(False)
