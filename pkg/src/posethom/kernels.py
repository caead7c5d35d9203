"""Backend selection for the dense mod-p elimination kernels.

The compiled extension is preferred when it imported cleanly; otherwise
the numpy fallback is used.  ``BACKEND`` names the active choice and
``available_backends`` lists every importable implementation so tests
and benchmarks can compare them.
"""

import numpy as np

try:
    from posethom import _fastkernels as _impl
except ImportError:
    from posethom import _purekernels as _impl

BACKEND = _impl.BACKEND


def available_backends():
    """List of (name, module) pairs for every importable backend."""
    backends = []
    try:
        from posethom import _fastkernels
        backends.append(("compiled", _fastkernels))
    except ImportError:
        pass
    from posethom import _purekernels
    backends.append(("python", _purekernels))
    return backends


def _as_modp_array(rows, p):
    if not rows:
        return np.zeros((0, 0), dtype=np.int64)
    # Reduce in Python first: entries may exceed the int64 range.
    reduced = [[e % p for e in row] for row in rows]
    if not reduced[0]:
        return np.zeros((len(reduced), 0), dtype=np.int64)
    return np.ascontiguousarray(np.array(reduced, dtype=np.int64))


def rank_mod_dense(rows, p, impl=None):
    """Rank over F_p of a dense matrix given as a list of int rows."""
    a = _as_modp_array(rows, p)
    return int((impl or _impl).rank_mod(a, p))


def rref_mod_dense(rows, p, impl=None):
    """(rank, pivot columns, RREF array) over F_p of a list of int rows."""
    a = _as_modp_array(rows, p)
    rank, pivots = (impl or _impl).rref_mod(a, p)
    return int(rank), pivots, a
