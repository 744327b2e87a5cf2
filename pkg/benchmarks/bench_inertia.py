"""Benchmark the inertia kernel: numba fast path vs pure-numpy fallback.

Usage: python benchmarks/bench_inertia.py [--sizes 2,4,8,16,32] [--reps 200]

Times (a) raw cyclic-Jacobi eigenvalue calls on random Hermitian matrices and
(b) a whole interior signature sweep of the built-in brunnian link, under
both backends.  The backend can also be forced globally for any run of the
package with LINKSIG_BACKEND=numba|numpy.
"""

from __future__ import annotations

import argparse
from timeit import default_timer as timer

import numpy as np

from linksig import grid, sample_map
from linksig._kernels import available_backends, jacobi_eigenvalues
from linksig.catalog import get


def random_hermitian(rng: np.random.Generator, n: int) -> np.ndarray:
    a = rng.uniform(-2, 2, (n, n)) + 1j * rng.uniform(-2, 2, (n, n))
    return (a + a.conj().T) / 2


def bench_kernel(sizes: list[int], reps: int) -> None:
    rng = np.random.default_rng(7)
    print(f"{'size':>6} {'reps':>6} " + " ".join(f"{b:>12}" for b in available_backends()))
    for n in sizes:
        mats = [random_hermitian(rng, n) for _ in range(reps)]
        row = [f"{n:>6} {reps:>6}"]
        for backend in available_backends():
            jacobi_eigenvalues(mats[0], backend=backend)  # warm up / compile
            t0 = timer()
            for m in mats:
                jacobi_eigenvalues(m, backend=backend)
            dt = timer() - t0
            row.append(f"{1e6 * dt / reps:>10.1f}us")
        print(" ".join(row))


def bench_sweep(n: int) -> None:
    entry = get("l(1)")
    points = list(grid(n, 3))
    print(f"\ninterior sweep, {len(points)} points (N={n}):")
    for backend in available_backends():
        import os

        os.environ["LINKSIG_BACKEND"] = backend
        sample_map(entry.link, points[:50])  # warm up
        t0 = timer()
        sample_map(entry.link, points)
        dt = timer() - t0
        print(f"  {backend:>6}: {dt:.2f}s ({1e6 * dt / len(points):.0f}us/point)")
    os.environ.pop("LINKSIG_BACKEND", None)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="2,4,8,16,32")
    parser.add_argument("--reps", type=int, default=200)
    parser.add_argument("--grid", type=int, default=16)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    print("backends available:", ", ".join(available_backends()))
    bench_kernel(sizes, args.reps)
    bench_sweep(args.grid)


if __name__ == "__main__":
    main()
