"""Compare the compiled and pure-Python elimination kernels.

Runs rank_mod and rref_mod over dense random matrices and over the real
workload (the block ranks behind the genus-12 surface row), printing a
throughput table for both backends.

Usage: python benchmarks/bench_rank.py [--sizes 200,400,800] [--seed 0]
"""

import argparse
import importlib
import time

import numpy as np

PRIME = 2147483647


def _load_backends():
    backends = {}
    try:
        backends["cython"] = importlib.import_module("syzlab._kernels")
    except ImportError:
        pass
    backends["python"] = importlib.import_module("syzlab._kernels_py")
    return backends


def bench_dense(backends, sizes, seed):
    rng = np.random.default_rng(seed)
    print(f"{'kernel':<10} {'backend':<8} {'size':>10} {'time (s)':>10} "
          f"{'rank':>6}")
    for n in sizes:
        a = rng.integers(0, PRIME, size=(n, n), dtype=np.int64)
        a[:, -1] = (a[:, 0] + a[:, 1]) % PRIME  # force one dependency
        for name, mod in backends.items():
            t0 = time.perf_counter()
            r = mod.rank_mod(a.copy(), PRIME)
            dt = time.perf_counter() - t0
            print(f"{'rank_mod':<10} {name:<8} {n:>6}x{n:<4} {dt:>10.3f} "
                  f"{r:>6}")
        for name, mod in backends.items():
            t0 = time.perf_counter()
            r, _ = mod.rref_mod(a.copy(), PRIME)
            dt = time.perf_counter() - t0
            print(f"{'rref_mod':<10} {name:<8} {n:>6}x{n:<4} {dt:>10.3f} "
                  f"{r:>6}")


def bench_koszul(backends):
    from syzlab import LatticePolygon, interior_hull
    from syzlab.koszul import SurfaceContext
    from syzlab.linalg import split_blocks

    delta = LatticePolygon([(0, 2), (6, 0), (2, 6)])
    ctx = SurfaceContext(interior_hull(delta))
    mat = ctx.differential(5, "D1", "2D1", PRIME)
    dec = split_blocks(mat)
    blocks = [d for _, _, d in dec.blocks if min(d.shape) >= 4]
    total = sum(d.shape[0] * d.shape[1] for d in blocks)
    print(f"\ngenus-12 workload: d_5 on Delta^(1), {len(blocks)} blocks, "
          f"{total} cells")
    for name, mod in backends.items():
        t0 = time.perf_counter()
        r = sum(mod.rank_mod(d.copy(), PRIME) for d in blocks)
        dt = time.perf_counter() - t0
        print(f"{'blocks':<10} {name:<8} {'':>10} {dt:>10.3f} {r:>6}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="200,400,800")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    backends = _load_backends()
    if "cython" not in backends:
        print("compiled kernel not built; benchmarking python only")
    bench_dense(backends, sizes, args.seed)
    bench_koszul(backends)


if __name__ == "__main__":
    main()
