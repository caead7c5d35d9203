"""Finite simplicial complexes on the vertex set {1, .., m}.

Faces are stored as width-m bitmasks (vertex i is bit i-1), kept in a
frozenset for O(1) membership, with the maximal faces cached.  The empty
face is always a member and has dimension -1.  Full-subcomplex loops
over all 2^m vertex subsets dominate the runtime of everything built on
top of this module, hence the bitmask encoding throughout.

>>> K = cycle(4)
>>> sorted(vertices_of(f) for f in K.facets)
[[1, 2], [1, 4], [2, 3], [3, 4]]
>>> K.is_neighbourly()
False
"""

import json
import random

MAX_VERTICES = 24


def mask_of(vertices):
    """Bitmask of an iterable of 1-based vertex labels."""
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def vertices_of(mask):
    """Sorted 1-based vertex labels of a bitmask."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def as_mask(m, subset):
    """Normalize a vertex subset (bitmask or iterable) to a bitmask."""
    mask = subset if isinstance(subset, int) else mask_of(subset)
    if mask < 0 or mask >= (1 << m):
        raise ValueError(f"vertex subset {subset!r} out of range for m={m}")
    return mask


def subsets_below(mask):
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class SimplicialComplex:
    """A downward-closed family of bitmask faces on {1, .., m}.

    Instances are immutable after construction and safe to share across
    threads.  ``full_subcomplex`` keeps ambient vertex labels, so chain
    inclusions of subcomplexes are literal coordinate inclusions.
    """

    __slots__ = ("m", "faces", "_facets", "_by_card")

    def __init__(self, m, faces):
        if not 1 <= m <= MAX_VERTICES:
            raise ValueError(f"m={m} outside 1..{MAX_VERTICES}")
        self.m = m
        self.faces = frozenset(faces)
        if 0 not in self.faces:
            raise ValueError("the empty face must be a member")
        full = (1 << m) - 1
        by_card = {}
        for f in self.faces:
            if f & ~full:
                raise ValueError(f"face {f:b} out of range for m={m}")
            by_card.setdefault(f.bit_count(), []).append(f)
        for fs in by_card.values():
            fs.sort()
        self._by_card = by_card
        self._facets = None

    def validate(self):
        """Check downward closure; raises ValueError on violation."""
        for f in self.faces:
            for v in range(self.m):
                bit = 1 << v
                if f & bit and (f ^ bit) not in self.faces:
                    raise ValueError(
                        f"not downward closed: {vertices_of(f)} present, "
                        f"{vertices_of(f ^ bit)} missing")
        return self

    @property
    def facets(self):
        """Maximal faces, sorted by bitmask value."""
        if self._facets is None:
            maximal = []
            for f in self.faces:
                if not any(f != g and f & g == f for g in self.faces):
                    maximal.append(f)
            self._facets = tuple(sorted(maximal))
        return self._facets

    @property
    def dim(self):
        """Largest face dimension; -1 for the complex {∅}."""
        return max(f.bit_count() for f in self.faces) - 1

    @property
    def vertex_support(self):
        """Bitmask of vertices that actually appear as singleton faces."""
        mask = 0
        for f in self._by_card.get(1, ()):
            mask |= f
        return mask

    def has_face(self, subset):
        return as_mask(self.m, subset) in self.faces

    def faces_of_card(self, k):
        """Faces with exactly k vertices (dimension k-1), mask-sorted."""
        return self._by_card.get(k, [])

    def full_subcomplex(self, subset):
        """Faces contained in the given vertex subset, labels unchanged."""
        J = as_mask(self.m, subset)
        return SimplicialComplex(
            self.m, [f for f in self.faces if f & ~J == 0])

    def is_p_neighbourly(self, p):
        """True iff every (p+1)-subset of {1..m} is a face."""
        if p < 0:
            raise ValueError("p must be >= 0")
        from math import comb
        for k in range(1, p + 2):
            if len(self._by_card.get(k, ())) != comb(self.m, k):
                return False
        return True

    def is_neighbourly(self):
        """True iff the 1-skeleton is the complete graph on {1..m}."""
        return self.is_p_neighbourly(1)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.m == other.m and self.faces == other.faces

    def __hash__(self):
        return hash((self.m, self.faces))

    def __repr__(self):
        return (f"SimplicialComplex(m={self.m}, "
                f"facets={[vertices_of(f) for f in self.facets]})")

    def to_json(self, facets=None):
        """Compact JSON {"m":..,"facets":[[..],..]} with 1-based vertices."""
        masks = self.facets if facets is None else facets
        payload = {"m": self.m, "facets": [vertices_of(f) for f in masks]}
        return json.dumps(payload, separators=(",", ":"))


def downward_closure(m, facet_masks):
    faces = {0}
    for f in facet_masks:
        faces.update(subsets_below(f))
    return faces


def from_facets(m, facets):
    """Downward closure of the given facets, plus ∅ and all singletons.

    Every vertex of {1..m} must appear in some facet (no ghost
    vertices); list isolated vertices as singleton facets.
    """
    masks = [as_mask(m, f) for f in facets]
    support = 0
    for f in masks:
        support |= f
    if support != (1 << m) - 1:
        missing = vertices_of(((1 << m) - 1) ^ support)
        raise ValueError(f"vertices {missing} appear in no facet; "
                         "list them as singleton facets")
    faces = downward_closure(m, masks)
    faces.update(1 << v for v in range(m))
    return SimplicialComplex(m, faces)


def cycle(m):
    """The m-cycle: maximal faces {a, a+1} and {1, m}."""
    if m < 3:
        raise ValueError("cycle requires m >= 3")
    edges = [mask_of((i, i + 1)) for i in range(1, m)] + [mask_of((1, m))]
    return from_facets(m, edges)


def simplex(m):
    """The full simplex on {1..m}: every subset is a face."""
    return SimplicialComplex(m, range(1 << m))


def skeleton(m, k):
    """All faces of the (m-1)-simplex of dimension at most k, -1 <= k."""
    if not -1 <= k <= m - 1:
        raise ValueError(f"skeleton dimension {k} outside -1..{m - 1}")
    faces = [f for f in range(1 << m) if f.bit_count() <= k + 1]
    return SimplicialComplex(m, faces)


def random_complex(m, dim, p, seed):
    """Downward closure of i.i.d.-kept faces of the given dimension.

    Each candidate (dim+1)-subset is kept with probability p, candidates
    visited in bitmask order; singletons are always added.  Deterministic
    for a fixed seed.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError("probability must lie in [0, 1]")
    if not 0 <= dim <= m - 1:
        raise ValueError(f"face dimension {dim} outside 0..{m - 1}")
    rng = random.Random(seed)
    kept = [f for f in range(1 << m)
            if f.bit_count() == dim + 1 and rng.random() < p]
    facet_list = kept + [1 << v for v in range(m)
                         if not any(f >> v & 1 for f in kept)]
    faces = downward_closure(m, kept)
    faces.update(1 << v for v in range(m))
    K = SimplicialComplex(m, faces)
    return K, facet_list


def generate(spec):
    """Build a complex from a generator spec string.

    Accepted forms: ``cycle:M``, ``simplex:M``, ``skeleton:M,K``,
    ``random:M,DIM,P,seed=S`` (``seed=`` may be omitted).  Returns
    (complex, facet list in construction order) for byte-stable output.
    """
    name, _, rest = spec.partition(":")
    args = [a for a in rest.split(",") if a] if rest else []
    try:
        if name == "cycle":
            (m,) = map(int, args)
            K = cycle(m)
            return K, [mask_of((i, i + 1)) for i in range(1, m)] + [mask_of((1, m))]
        if name == "simplex":
            (m,) = map(int, args)
            return simplex(m), [(1 << m) - 1]
        if name == "skeleton":
            m, k = map(int, args)
            K = skeleton(m, k)
            return K, list(K.facets)
        if name == "random":
            if len(args) != 4:
                raise ValueError("random takes m,dim,p,seed")
            m, dim = int(args[0]), int(args[1])
            p = float(args[2])
            seed = int(args[3].removeprefix("seed="))
            return random_complex(m, dim, p, seed)
    except ValueError as exc:
        raise ValueError(f"bad generator spec {spec!r}: {exc}") from None
    raise ValueError(f"unknown generator family {name!r}")


def from_json(text):
    """Parse the {"m":..,"facets":..} JSON format."""
    try:
        payload = json.loads(text)
        m = payload["m"]
        facets = payload["facets"]
    except (json.JSONDecodeError, TypeError, KeyError) as exc:
        raise ValueError(f"malformed complex JSON: {exc}") from None
    if not isinstance(m, int) or not isinstance(facets, list):
        raise ValueError("complex JSON needs integer 'm' and list 'facets'")
    return from_facets(m, [mask_of(map(int, f)) for f in facets])


def from_text(text):
    """Parse the plain-text format: one facet per line, space-separated
    1-based vertices; m is the largest vertex mentioned."""
    facets = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        facets.append([int(tok) for tok in line.split()])
    if not facets:
        raise ValueError("no facets in input")
    m = max(max(f) for f in facets)
    return from_facets(m, facets)


def load_path(path):
    """Load a complex from a JSON or plain-text file ('-' for stdin)."""
    import sys
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return from_json(text)
    return from_text(text)


def _perm_tables(m):
    """Mask-relabeling lookup tables, one per permutation of {1..m}."""
    from itertools import permutations
    tables = []
    for perm in permutations(range(m)):
        table = [0] * (1 << m)
        for f in range(1 << m):
            table[f] = sum(1 << perm[v] for v in range(m) if f >> v & 1)
        tables.append(table)
    return tables


def _canonical_form(faces, tables):
    """Lexicographically least relabeling of the face set, for dedup."""
    return min(tuple(sorted(map(table.__getitem__, faces)))
               for table in tables)


def enumerate_complexes(m, up_to_iso=True):
    """All simplicial complexes on exactly {1..m} (no ghost vertices).

    Enumerates downward-closed families containing every singleton, as
    isomorphism-class representatives by default.  Intended for m <= 5;
    the count explodes beyond that.
    """
    if m > 5:
        raise ValueError("exhaustive enumeration supported for m <= 5 only")
    base = [f for f in range(1 << m) if f.bit_count() <= 1]
    levels = [[f for f in range(1 << m) if f.bit_count() == k]
              for k in range(2, m + 1)]
    results = []

    def extend(level_idx, faces):
        if level_idx == len(levels):
            results.append(frozenset(faces))
            return
        candidates = [f for f in levels[level_idx]
                      if all((f ^ (1 << v)) in faces
                             for v in range(m) if f >> v & 1)]
        for pick in range(1 << len(candidates)):
            chosen = [candidates[i] for i in range(len(candidates))
                      if pick >> i & 1]
            extend(level_idx + 1, faces | set(chosen))

    extend(0, set(base))
    if not up_to_iso:
        return [SimplicialComplex(m, fs) for fs in sorted(results, key=sorted)]
    tables = _perm_tables(m)
    seen = set()
    for fs in results:
        seen.add(_canonical_form(fs, tables))
    return [SimplicialComplex(m, key) for key in sorted(seen)]
