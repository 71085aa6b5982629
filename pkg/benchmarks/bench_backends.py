"""Time the numba and numpy variants of each kernel, plus an end-to-end corpus run.

    python benchmarks/bench_backends.py [--repeat 5] [--skip-end-to-end]
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from mdgirth import kernels
from mdgirth._accel import BACKEND_ENV, HAVE_NUMBA
from mdgirth.generators import complete_graph, cycle_graph, petersen_graph


def best_of(fn, repeat):
    fn()  # warm-up, includes JIT compilation
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def random_adjacency(rng, n, p):
    upper = np.triu(rng.random((n, n)) < p, 1)
    return np.ascontiguousarray((upper | upper.T).astype(np.uint8))


def workloads(rng):
    a60 = random_adjacency(rng, 60, 0.08)
    a8 = random_adjacency(rng, 8, 0.5)
    perms8 = kernels.permutation_table(8)
    pi8, pj8 = kernels.pair_order(8)

    def solver_args(g, k):
        dist = np.ascontiguousarray(g.distances.matrix)
        labels = np.arange(g.n, dtype=np.int64)
        sizes = np.ones(g.n, dtype=np.int64)
        return dist, k, labels, sizes, False

    pet = solver_args(petersen_graph(), 3)
    k9 = solver_args(complete_graph(9), 8)
    c20 = solver_args(cycle_graph(20), 2)
    return [
        ("apsp n=60", kernels.apsp_loops, kernels.apsp_numpy, (a60,)),
        ("canonical scan n=8", kernels.canonical_scan_loops, kernels.canonical_scan_numpy, (a8, perms8, pi8, pj8)),
        ("first resolving Petersen k=3", kernels.first_resolving_loops, kernels.first_resolving_numpy, pet),
        ("first resolving K9 k=8", kernels.first_resolving_loops, kernels.first_resolving_numpy, k9),
        ("first resolving C20 k=2", kernels.first_resolving_loops, kernels.first_resolving_numpy, c20),
    ]


def end_to_end(backend):
    env = dict(os.environ, **{BACKEND_ENV: backend})
    t0 = time.perf_counter()
    subprocess.run(
        [sys.executable, "-m", "mdgirth", "verify", "--n", "3..7"],
        env=env, check=True, capture_output=True,
    )
    return time.perf_counter() - t0


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--skip-end-to-end", action="store_true")
    args = ap.parse_args(argv)
    if not HAVE_NUMBA:
        print("numba is not installed; the loop kernels run as plain Python")
    rng = np.random.default_rng(0)
    print(f"{'kernel':<32}{'numba [ms]':>12}{'numpy [ms]':>12}{'speedup':>10}")
    for name, loops, vec, fn_args in workloads(rng):
        t_loop = best_of(lambda: loops(*fn_args), args.repeat)
        t_vec = best_of(lambda: vec(*fn_args), args.repeat)
        print(f"{name:<32}{t_loop * 1e3:>12.3f}{t_vec * 1e3:>12.3f}{t_vec / t_loop:>9.1f}x")
    if not args.skip_end_to_end:
        t_nb = end_to_end("numba")
        t_np = end_to_end("numpy")
        print(f"{'verify --n 3..7 (wall, s)':<32}{t_nb:>12.2f}{t_np:>12.2f}{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
