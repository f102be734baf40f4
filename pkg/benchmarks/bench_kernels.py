#!/usr/bin/env python3
"""Benchmark the JIT kernels against their pure-numpy fallbacks.

The two hot kernels are the pair-orbit partition (union-find over the n*n
pair set) and mod-p row reduction of dense systems.  Run with numba
installed; the script times both paths on the same inputs and prints a JSON
summary.  PERMSYM_PURE only affects the dispatcher, not this script, which
calls both implementations explicitly.
"""

import argparse
import json
import time

import numpy as np

from permsym import _kernels

RNG_SEED = 20240817


def _random_perms(rng, k, n):
    out = np.empty((k, n), dtype=np.int64)
    for i in range(k):
        out[i] = rng.permutation(n)
    return out


def _time(fn, reps):
    best = float("inf")
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_pair_orbits(n, gens, reps):
    rng = np.random.default_rng(RNG_SEED)
    images = _random_perms(rng, gens, n)
    result = {"n": n, "generators": gens, "pairs": n * n}
    if _kernels.JIT_ENABLED:
        _kernels.pair_orbit_labels_jit(images, n)  # compile
        result["jit_s"] = _time(lambda: _kernels.pair_orbit_labels_jit(images, n), reps)
    result["numpy_s"] = _time(lambda: _kernels.pair_orbit_labels_numpy(images), reps)
    if _kernels.JIT_ENABLED:
        a = _kernels.pair_orbit_labels_jit(images, n)
        b = _kernels.pair_orbit_labels_numpy(images)
        assert np.array_equal(a, b), "kernel paths disagree"
        result["speedup"] = round(result["numpy_s"] / result["jit_s"], 2)
    return result


def bench_rank(rows, cols, p, reps):
    rng = np.random.default_rng(RNG_SEED)
    mat = rng.integers(0, p, size=(rows, cols)).astype(np.int64)
    result = {"rows": rows, "cols": cols, "p": p}
    if _kernels.JIT_ENABLED:
        _kernels.rank_mod_p_jit_path(mat, p)  # compile
        result["jit_s"] = _time(lambda: _kernels.rank_mod_p_jit_path(mat, p), reps)
    result["numpy_s"] = _time(lambda: _kernels.rank_mod_p_numpy(mat, p), reps)
    if _kernels.JIT_ENABLED:
        assert _kernels.rank_mod_p_jit_path(mat, p) == _kernels.rank_mod_p_numpy(mat, p)
        result["speedup"] = round(result["numpy_s"] / result["jit_s"], 2)
    return result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--reps", type=int, default=3)
    parser.add_argument("--degree", type=int, default=496,
                        help="degree for the pair-orbit benchmark")
    parser.add_argument("--rows", type=int, default=2178)
    parser.add_argument("--cols", type=int, default=1089)
    args = parser.parse_args()

    report = {
        "jit_enabled": _kernels.JIT_ENABLED,
        "pair_orbit_labels": bench_pair_orbits(args.degree, 3, args.reps),
        "rank_mod_p": bench_rank(args.rows, args.cols, 7, args.reps),
    }
    print(json.dumps(report, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
