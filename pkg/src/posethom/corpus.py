"""The standard verification corpus and a deterministic parallel map.

The corpus is the fixed family every batch verifier runs over: cycles
C^3..C^8, simplexes and proper skeleta on up to 6 vertices, 200 seeded
random complexes with m <= 8, and every isomorphism class on up to 4
vertices.  Construction is deterministic, so reports are byte-stable.
"""

import os

from posethom.simplicial import (
    cycle, enumerate_complexes, random_complex, simplex, skeleton,
)


def standard_corpus(randoms=200):
    """List of (name, complex), deduplicated, in a fixed order."""
    out = []
    for m in range(3, 9):
        out.append((f"cycle:{m}", cycle(m)))
    for m in range(1, 7):
        out.append((f"simplex:{m}", simplex(m)))
    for m in range(2, 7):
        for k in range(0, m - 1):
            out.append((f"skeleton:{m},{k}", skeleton(m, k)))
    for i in range(randoms):
        m = 4 + i % 5
        dim = 1 + i % min(3, m - 1)
        p = (0.25, 0.45, 0.65)[i % 3]
        K, _ = random_complex(m, dim, p, seed=i)
        out.append((f"random:{m},{dim},{p},seed={i}", K))
    for m in range(1, 5):
        for idx, K in enumerate(enumerate_complexes(m)):
            out.append((f"all-complexes:{m}#{idx}", K))
    seen = set()
    unique = []
    for name, K in out:
        key = (K.m, K.faces)
        if key not in seen:
            seen.add(key)
            unique.append((name, K))
    return unique


def corpus_from_spec(spec):
    """Corpus selector for the CLI: ``standard``, ``standard:<n>``
    (n random complexes), or ``all-complexes:<m>``."""
    if spec == "standard":
        return standard_corpus()
    if spec.startswith("standard:"):
        return standard_corpus(randoms=int(spec.split(":", 1)[1]))
    if spec.startswith("all-complexes:"):
        m = int(spec.split(":", 1)[1])
        if not 1 <= m <= 5:
            raise ValueError(
                "exhaustive corpus supported for 1 <= m <= 5")
        return [(f"all-complexes:{m}#{i}", K)
                for i, K in enumerate(enumerate_complexes(m))]
    raise ValueError(f"unknown corpus spec {spec!r}")


def default_jobs():
    env = os.environ.get("POSET_HOM_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def pmap(fn, items, jobs=None):
    """Map preserving input order; forks worker processes when jobs > 1.

    Results are aggregated in input order regardless of scheduling, so
    output is identical for every jobs value.
    """
    jobs = default_jobs() if jobs is None else max(1, jobs)
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    from concurrent.futures import ProcessPoolExecutor
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))
