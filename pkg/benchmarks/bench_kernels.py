"""Compare the numba and pure-numpy kernel paths on Rees matrix semigroup tables.

    python benchmarks/bench_kernels.py [--orders 128 512 1024] [--repeat 3]

Both paths are called directly, so the PARAGROUP_DISABLE_JIT flag does not
matter here.  The numba path is warmed up once before timing.
"""
import argparse
import time

import numpy as np

from paragroup import _kernels
from paragroup.rees import ReesMatrixSemigroup, rees_table
from paragroup.zoo import cyclic_certified_group


def paragroup_table(order_hint, seed=0):
    rng = np.random.default_rng(seed)
    g = 8
    side = max(1, int(round((order_hint / g) ** 0.5)))
    R = ReesMatrixSemigroup(cyclic_certified_group(g), side, side,
                            rng.integers(0, g, (side, side)))
    return np.ascontiguousarray(rees_table(R), dtype=np.int64)


def best_of(f, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        f()
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--orders", type=int, nargs="+", default=[128, 512, 1024])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if not _kernels.HAVE_NUMBA:
        print("numba is not installed; only the numpy path is timed")
    impls = {"numpy": _kernels.numpy_impl}
    if _kernels.HAVE_NUMBA:
        impls["numba"] = _kernels.numba_impl
        warm = paragroup_table(8)
        _kernels.numba_impl.associativity_failure(warm)
        _kernels.numba_impl.first_proper_ideal(warm)
        _kernels.numba_impl.homomorphism_failure(warm, warm, np.arange(len(warm)))
        _kernels.numba_impl.bicyclic_chain(np.arange(4))

    print(f"{'kernel':<24}{'order':>8}" + "".join(f"{name:>12}" for name in impls) + f"{'speedup':>10}")
    for order in args.orders:
        table = paragroup_table(order)
        n = len(table)
        ident = np.arange(n)
        cases = {
            "associativity": lambda impl: impl.associativity_failure(table),
            "first_proper_ideal": lambda impl: impl.first_proper_ideal(table),
            "homomorphism": lambda impl: impl.homomorphism_failure(table, table, ident),
        }
        for name, call in cases.items():
            t = {k: best_of(lambda: call(impl), args.repeat) for k, impl in impls.items()}
            speedup = f"{t['numpy'] / t['numba']:.1f}x" if "numba" in t else "-"
            print(f"{name:<24}{n:>8}" + "".join(f"{v * 1e3:>10.2f}ms" for v in t.values()) + f"{speedup:>10}")

    lower = np.arange(10 ** 6, dtype=np.int64)
    t = {k: best_of(lambda: impl.bicyclic_chain(lower), args.repeat) for k, impl in impls.items()}
    speedup = f"{t['numpy'] / t['numba']:.1f}x" if "numba" in t else "-"
    print(f"{'bicyclic_chain':<24}{10 ** 6:>8}" + "".join(f"{v * 1e3:>10.2f}ms" for v in t.values()) + f"{speedup:>10}")


if __name__ == "__main__":
    main()
