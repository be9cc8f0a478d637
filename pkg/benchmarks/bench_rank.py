"""Compare the compiled and pure-Python rank kernels on multiplication matrices.

    python benchmarks/bench_rank.py [d ...]
"""

import sys
import time

from monowlp import fp_linalg
from monowlp._rank_py import rank_mod_p as python_rank
from monowlp.graded_algebra import multiplication_matrix


def time_kernel(kernel, mats, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        ranks = [kernel(m.entries, m.rows, m.cols, m.modulus.p) for m in mats]
        best = min(best, time.perf_counter() - t0)
    return best, ranks


def main(ds):
    if fp_linalg.BACKEND != "compiled":
        print("compiled kernel not built; run `pip install -e .` first")
        return 1
    print(f"{'d':>4} {'p':>4} {'mats':>5} {'largest':>9} {'compiled s':>11} "
          f"{'python s':>9} {'speedup':>8}")
    for d in ds:
        p = 101
        mats = [multiplication_matrix(d, p, m) for m in range(3 * d - 3)]
        largest = max(mats, key=lambda m: m.rows * m.cols)
        tc, rc = time_kernel(fp_linalg._rank_kernel, mats)
        tp, rp = time_kernel(python_rank, mats, repeat=1)
        assert rc == rp
        print(f"{d:>4} {p:>4} {len(mats):>5} {largest.rows:>4}x{largest.cols:<4} "
              f"{tc:>11.4f} {tp:>9.3f} {tp / tc:>7.0f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main([int(a) for a in sys.argv[1:]] or [5, 10, 15, 20, 25]))
