"""Compare the compiled and pure-Python walk kernels on the same workload.

    python3 benchmarks/bench_kernels.py [--n-max 400] [--repeat 3]

Workload: the LPP of every valid root (sqrt(N)+p)/q with N <= n-max, and
the continued fraction of each root up to its first repeated quotient.
"""

import argparse
import math
import time

from surdpath import _kernels_py
from surdpath.sweep import valid_triples

try:
    from surdpath import _kernels_c
except ImportError:
    _kernels_c = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def lpp_workload(kernel, triples):
    def run():
        for N, p, q in triples:
            kernel.lpp_walk(N, p, q, 10**7)
    return run


def cf_workload(kernel, triples):
    def run():
        for N, p, q in triples:
            kernel.cf_walk(N, math.isqrt(N), 1, p, q, 4 * N + 64)
    return run


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=400)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    triples = list(valid_triples(args.n_max))
    steps = sum(len(_kernels_py.lpp_walk(N, p, q, 10**7)[2]) for N, p, q in triples)
    print(f"{len(triples)} roots with N <= {args.n_max}, {steps} LPP steps in total")
    if _kernels_c is None:
        print("compiled kernel not built; only the Python timings are shown")

    for name, make in (("lpp_walk", lpp_workload), ("cf_walk", cf_workload)):
        t_py = best_of(make(_kernels_py, triples), args.repeat)
        line = f"{name:9s} python {t_py:8.3f} s"
        if _kernels_c is not None:
            t_c = best_of(make(_kernels_c, triples), args.repeat)
            line += f"   cython {t_c:8.3f} s   speedup {t_py / t_c:5.2f}x"
        print(line)


if __name__ == "__main__":
    main()
