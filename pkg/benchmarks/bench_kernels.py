"""Benchmark: compiled elimination kernels vs the pure Python fallback.

Times mod-p rank and RREF on random dense matrices and on a real
workload (the densified level differentials of the degree-0 functor of
a random complex), printing one table per operation.

    python3 benchmarks/bench_kernels.py [--p 1999] [--repeat 3]
"""

import argparse
import time

import numpy as np

from posethom import kernels
from posethom.cochain import assemble
from posethom.functors import functor_H
from posethom.simplicial import random_complex


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def random_cases(rng, p):
    for rows, cols in [(100, 150), (300, 400), (600, 800)]:
        yield (f"random {rows}x{cols}",
               rng.integers(0, p, size=(rows, cols)).tolist())


def workload_cases():
    K, _ = random_complex(10, 1, 0.3, seed=5)
    C = assemble(functor_H(K, 0, False), check=False)
    for l in (4, 5):
        M = C.d_matrix(l)
        yield (f"H_0 differential m=10 l={l} ({M.rows}x{M.cols})", M.data)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--p", type=int, default=1999)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = kernels.available_backends()
    if len(backends) < 2:
        print("note: only one backend importable:",
              [n for n, _ in backends])

    rng = np.random.default_rng(0)
    cases = list(random_cases(rng, args.p)) + list(workload_cases())

    for op in ("rank_mod", "rref_mod"):
        print(f"\n== {op} over F_{args.p} "
              f"(best of {args.repeat}, seconds) ==")
        header = f"{'case':>42}" + "".join(
            f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}"
        print(header)
        for label, rows in cases:
            times = []
            result = None
            for _, impl in backends:
                if op == "rank_mod":
                    out = None

                    def call(impl=impl):
                        nonlocal out
                        out = kernels.rank_mod_dense(rows, args.p, impl=impl)
                else:
                    def call(impl=impl):
                        nonlocal out
                        out = kernels.rref_mod_dense(rows, args.p,
                                                     impl=impl)[0]
                out = None
                times.append(_time(call, args.repeat))
                if result is None:
                    result = out
                elif out != result:
                    raise SystemExit(f"backend mismatch on {label}: "
                                     f"{out} != {result}")
            speed = times[-1] / times[0] if len(times) > 1 else float("nan")
            print(f"{label:>42}" + "".join(f"{t:>12.4f}" for t in times)
                  + f"{speed:>9.1f}x")
    print("\nresults agree across backends")


if __name__ == "__main__":
    main()
