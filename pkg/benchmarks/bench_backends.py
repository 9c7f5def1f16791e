"""Timing comparison: compiled Cython core vs the pure-Python fallback.

Runs the two hot kernels (the O(N) matvec and the O(N) quadratic form)
through both backends across a range of problem sizes and prints one table
per kernel. Run from the repository root:

    python3 benchmarks/bench_backends.py [--sizes 1000,10000,...] [--repeats 5]
"""

import argparse
import time

import numpy as np

from hardy_embed import _core_py
from hardy_embed.kernel import kernel_tables

try:
    from hardy_embed import _core
except ImportError:
    _core = None


def best_of(repeats, fn, *args):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def bench_kernel(name, compiled_fn, python_fn, make_args, sizes, repeats):
    print(f"\n{name}")
    print(f"{'N':>10} {'python (ms)':>14} {'compiled (ms)':>14} {'speedup':>9}")
    for n in sizes:
        args = make_args(n)
        t_py = best_of(repeats, python_fn, *args)
        if compiled_fn is None:
            print(f"{n:>10} {t_py * 1e3:>14.3f} {'n/a':>14} {'n/a':>9}")
            continue
        t_c = best_of(repeats, compiled_fn, *args)
        print(f"{n:>10} {t_py * 1e3:>14.3f} {t_c * 1e3:>14.3f} {t_py / t_c:>8.1f}x")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="1000,10000,100000,1000000")
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",") if s]

    if _core is None:
        print("compiled core not available; timing the Python fallback only")

    rng = np.random.default_rng(0)
    tables = {n: kernel_tables(n) for n in sizes}

    def matvec_args(n):
        sqrt_n, inv_n32 = tables[n]
        return rng.standard_normal(n), sqrt_n, inv_n32

    def quadform_args(n):
        sqrt_n, inv_n32 = tables[n]
        return rng.standard_normal(n), rng.standard_normal(n), sqrt_n, inv_n32

    bench_kernel(
        "kernel_matvec (prefix + suffix sweep)",
        None if _core is None else _core.kernel_matvec,
        _core_py.kernel_matvec,
        matvec_args,
        sizes,
        args.repeats,
    )
    bench_kernel(
        "quadratic_form (real + imaginary sweeps)",
        None if _core is None else _core.quadratic_form,
        _core_py.quadratic_form,
        quadform_args,
        sizes,
        args.repeats,
    )


if __name__ == "__main__":
    main()
