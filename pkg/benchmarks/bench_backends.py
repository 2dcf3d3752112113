"""Compare the compiled kernels against the pure-python fallback.

Times the three hot kernels on representative workloads: the Mobius sieve
at sweep scale, cyclic Jacobi at oracle scale, and power iteration on the
largest matrix the standard sweep produces.

Usage: python benchmarks/bench_backends.py [--repeat N] [--quick]
"""

import argparse
import time

import numpy as np

from mertmat import ClassStructure, build_M_direct, build_mertens_table
from mertmat import _pure

try:
    from mertmat import _kernels
except ImportError:
    _kernels = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_sieve(backend, limit, repeat):
    return best_of(lambda: backend.mobius_sieve(limit), repeat)


def bench_jacobi(backend, a, repeat):
    return best_of(lambda: backend.jacobi_eigenvalues(np.array(a), 1e-12, 64), repeat)


def bench_power(backend, a, x0, repeat):
    def run():
        x = x0.copy()
        backend.power_iteration(a, x, 1e-10, 100_000, 250)

    return best_of(run, repeat)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()

    if _kernels is None:
        print("compiled backend unavailable; nothing to compare")
        return

    sieve_limit = 10**6 if args.quick else 10**7
    jacobi_n = 2000 if args.quick else 10**4
    power_n = 10**5 if args.quick else 10**6

    mt = build_mertens_table(power_n)
    jac = build_M_direct(ClassStructure(jacobi_n), mt).entries.astype(np.float64)
    pow_m = np.ascontiguousarray(
        build_M_direct(ClassStructure(power_n), mt).entries.astype(np.float64)
    )
    x0 = np.random.default_rng(42).standard_normal(pow_m.shape[0])

    rows = [
        (f"mobius_sieve({sieve_limit:.0e})", lambda b: bench_sieve(b, sieve_limit, args.repeat)),
        (f"jacobi(s={jac.shape[0]})", lambda b: bench_jacobi(b, jac, args.repeat)),
        (f"power(s={pow_m.shape[0]})", lambda b: bench_power(b, pow_m, x0, args.repeat)),
    ]

    print(f"{'kernel':<24} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, runner in rows:
        t_pure = runner(_pure)
        t_comp = runner(_kernels)
        print(f"{name:<24} {t_pure:>9.3f}s {t_comp:>9.3f}s {t_pure / t_comp:>7.1f}x")


if __name__ == "__main__":
    main()
