"""Benchmark the two Jacobi eigensolver paths (numba kernel vs pure numpy).

Times repeated Hermitian eigendecompositions at several sizes and a short
verification campaign, then prints a table with the speedup.  If numba is
not importable only the numpy path is measured.

Run:

    python benchmarks/bench_eig.py [--sizes 8,32,128] [--repeats 5]
"""

import argparse
import statistics
import time

import numpy as np

from gateqsl import _kernels
from gateqsl.harness import run_random_campaign


def random_hermitian(n, rng):
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (z + z.conj().T) / 2


def time_eigs(matrices, use_numba, repeats):
    durations = []
    for _ in range(repeats):
        start = time.perf_counter()
        for h in matrices:
            scale = 1.0 + np.max(np.abs(h))
            _kernels.jacobi_eigh(h.copy(), stop_off=1e-11 * scale, use_numba=use_numba)
        durations.append(time.perf_counter() - start)
    return durations


def bench_size(n, repeats, rng):
    count = max(1, 2048 // n)
    matrices = [random_hermitian(n, rng) for _ in range(count)]
    rows = {}
    if _kernels.HAVE_NUMBA:
        time_eigs(matrices[:1], use_numba=True, repeats=1)  # JIT warm-up
        rows["numba"] = time_eigs(matrices, use_numba=True, repeats=repeats)
    rows["numpy"] = time_eigs(matrices, use_numba=False, repeats=repeats)
    return count, rows


def main():
    parser = argparse.ArgumentParser(description="Jacobi eigensolver path benchmark")
    parser.add_argument("--sizes", default="8,32,128",
                        help="comma-separated matrix sizes (default 8,32,128)")
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    rng = np.random.default_rng(0)

    if not _kernels.HAVE_NUMBA:
        print("[info] numba not importable; timing the numpy path only")
    print(f"{'size':>6} {'batch':>6} {'path':>6} {'mean (s)':>10} {'std (s)':>9}  speedup")
    for n in sizes:
        count, rows = bench_size(n, args.repeats, rng)
        base = statistics.mean(rows["numpy"])
        for path, durations in rows.items():
            mean = statistics.mean(durations)
            std = statistics.pstdev(durations)
            speedup = f"{base / mean:8.2f}x" if path == "numba" else "   1.00x"
            print(f"{n:>6} {count:>6} {path:>6} {mean:>10.4f} {std:>9.4f} {speedup}")

    if _kernels.HAVE_NUMBA:
        print("\ncampaign (dims 2..6, 100 samples/dim):")
        for label, flag in (("numba", True), ("numpy", False)):
            _kernels.USE_NUMBA = flag
            start = time.perf_counter()
            report = run_random_campaign(list(range(2, 7)), 100, seed=1)
            elapsed = time.perf_counter() - start
            print(f"  {label:>6}: {elapsed:.3f} s  (failures={report.failures})")
        _kernels.USE_NUMBA = _kernels.HAVE_NUMBA and not _kernels._numba_disabled()


if __name__ == "__main__":
    main()
