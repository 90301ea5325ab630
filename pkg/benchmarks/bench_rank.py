"""Benchmark: compiled elimination kernel vs the numpy fallback.

Times GF(p) rank computation on the Koszul differentials of scroll
models (the package's real workload) plus dense random matrices, once
per backend.  Both backends implement identical pivoting, so the ranks
must agree; the table reports the speedup.

Usage:  python benchmarks/bench_rank.py [--quick]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from syzlab import _core_py
from syzlab.fieldmath import DEFAULT_PRIME
from syzlab.koszul import delta2_matrix
from syzlab.models import scroll_mul_table
from syzlab.rng import XorShift64Star

try:
    from syzlab import _core
except ImportError:
    _core = None


def workloads(quick: bool):
    rng = XorShift64Star(1)
    sizes = [(300, 200)] if quick else [(300, 200), (800, 600)]
    for m, n in sizes:
        a = np.array(
            [[rng.rand_mod(DEFAULT_PRIME) for _ in range(n)] for _ in range(m)],
            dtype=np.int64,
        )
        yield f"random {m}x{n}", a
    ks = (4,) if quick else (4, 5)
    for k in ks:
        table = scroll_mul_table(k)
        p_mid = k - 1
        d2 = delta2_matrix(table, p_mid)
        yield f"scroll k={k} outer differential p={p_mid} {d2.shape}", d2.to_dense()


def time_backend(impl, a: np.ndarray, p: int) -> tuple[int, float]:
    w = a.copy()
    start = time.perf_counter()
    r = impl.rank_mod_p(w, p)
    return int(r), time.perf_counter() - start


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="small cases only")
    args = parser.parse_args()

    if _core is None:
        print("compiled kernel unavailable; timing the fallback only")
    print(f"{'case':<50} {'fallback':>10} {'compiled':>10} {'speedup':>8}")
    for label, a in workloads(args.quick):
        rank_py, t_py = time_backend(_core_py, a, DEFAULT_PRIME)
        if _core is not None:
            rank_c, t_c = time_backend(_core, a, DEFAULT_PRIME)
            assert rank_c == rank_py, (label, rank_c, rank_py)
            print(f"{label:<50} {t_py:>9.3f}s {t_c:>9.3f}s {t_py / t_c:>7.1f}x")
        else:
            print(f"{label:<50} {t_py:>9.3f}s {'-':>10} {'-':>8}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
