"""Timing comparison of the numpy and numba backends on the hot primitives.

Run from the repository root:

    python3 benchmarks/bench_kernels.py [--repeats N]

Each workload is timed per backend with the best of N repeats reported;
the numba column excludes JIT compilation (one warmup call per workload,
so a cold cache pays the compile before timing starts).
"""

import argparse
import time

import numpy as np

from lerchzeta import backend
from lerchzeta.differintegral import _lerch_coef_tables
from lerchzeta.fracrep import lerch_theorem1
from lerchzeta.lerch_ref import EvaluationPoint


def _series_sum():
    return backend.series_sum(1.0 + 0.0j, 3.0 + 0.0j, 0.0 + 0.0j, 0, 1_000_000)


_U = (0.4 + 0.55j) - np.linspace(1e-3, 12.0, 20_000) * np.exp(-0.35j)
_COEFS, _PCOEFS = _lerch_coef_tables(0.6 + 0.2j, 3)


def _lattice_kernel():
    return backend.lerch_kernel_values(_U, 0.6 + 0.2j, _COEFS, _PCOEFS)


_KS = 2j * np.pi * (0.35 + np.arange(41))
_CS = np.ones(41, dtype=np.complex128)


def _exp_sum():
    return backend.exp_sum_values(_U, _KS, _CS)


_POINT = EvaluationPoint(0.2 + 0.6j, 0.7 - 0.4j, 2.5)


def _end_to_end():
    return lerch_theorem1(_POINT)[0]


WORKLOADS = [
    ("series_sum, 1e6 terms", _series_sum),
    ("lattice kernel m=3, 2e4 points", _lattice_kernel),
    ("exp_sum 41 modes, 2e4 points", _exp_sum),
    ("lerch_theorem1, one point", _end_to_end),
]


def best_ms(fn, repeats):
    fn()  # warmup: JIT compile and caches
    best = float("inf")
    for _ in range(repeats):
        began = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - began)
    return 1e3 * best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    results = {}
    saved = backend.current()
    try:
        for name in ("numpy", "numba"):
            backend.use(name)
            results[name] = [best_ms(fn, args.repeats) for _, fn in WORKLOADS]
    finally:
        backend.use(saved)

    width = max(len(label) for label, _ in WORKLOADS)
    print(f"{'workload':<{width}}  {'numpy ms':>10}  {'numba ms':>10}  {'speedup':>8}")
    for i, (label, _) in enumerate(WORKLOADS):
        np_ms, nb_ms = results["numpy"][i], results["numba"][i]
        print(f"{label:<{width}}  {np_ms:>10.2f}  {nb_ms:>10.2f}  {np_ms / nb_ms:>7.1f}x")


if __name__ == "__main__":
    main()
