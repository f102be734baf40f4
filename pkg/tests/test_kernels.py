"""Both kernel paths (JIT scalar loops and pure-numpy) must agree bit-exactly."""

import random

import numpy as np
import pytest

from permsym import _kernels


def _random_perms(rng, k, n):
    out = []
    for _ in range(k):
        imgs = list(range(n))
        rng.shuffle(imgs)
        out.append(imgs)
    return np.array(out, dtype=np.int64)


@pytest.mark.parametrize("seed", range(5))
def test_pair_orbit_labels_paths_agree(seed):
    rng = random.Random(seed)
    n = rng.randrange(3, 25)
    gens = _random_perms(rng, rng.randrange(1, 4), n)
    numpy_labels = _kernels.pair_orbit_labels_numpy(gens)
    dispatch = _kernels.pair_orbit_labels(gens)
    assert np.array_equal(numpy_labels, dispatch)
    if _kernels.JIT_ENABLED:
        jit_labels = _kernels.pair_orbit_labels_jit(gens, n)
        assert np.array_equal(numpy_labels, jit_labels)


def test_pair_orbit_labels_are_orbit_minima():
    rng = random.Random(7)
    n = 8
    gens = _random_perms(rng, 2, n)
    labels = _kernels.pair_orbit_labels(gens)
    # closure by explicit BFS
    size = n * n
    seen = [False] * size
    for start in range(size):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        qpos = 0
        while qpos < len(comp):
            e = comp[qpos]
            qpos += 1
            i, j = divmod(e, n)
            for g in gens:
                e2 = g[i] * n + g[j]
                if not seen[e2]:
                    seen[e2] = True
                    comp.append(e2)
        lo = min(comp)
        assert all(labels[e] == lo for e in comp)


@pytest.mark.parametrize("seed", range(6))
def test_rref_and_rank_paths_agree(seed):
    rng = np.random.default_rng(seed)
    p = [2, 3, 5, 7, 11][seed % 5]
    a = rng.integers(0, p, size=(rng.integers(1, 12), rng.integers(1, 12))).astype(np.int64)
    rref_np, rank_np = _kernels.rref_mod_p_numpy(a.copy(), p)
    rref_d, rank_d = _kernels.rref_mod_p(a.copy(), p)
    assert rank_np == rank_d
    assert np.array_equal(rref_np, rref_d)
    assert _kernels.rank_mod_p_numpy(a.copy(), p) == rank_np
    assert _kernels.rank_mod_p(a.copy(), p) == rank_np


def test_rref_is_reduced_echelon():
    rng = np.random.default_rng(3)
    p = 5
    a = rng.integers(0, p, size=(8, 6)).astype(np.int64)
    rref, rank = _kernels.rref_mod_p(a, p)
    pivots = []
    for i in range(rank):
        nz = np.nonzero(rref[i])[0]
        assert nz.size > 0
        c = nz[0]
        assert rref[i, c] == 1
        assert np.count_nonzero(rref[:, c]) == 1  # pivot column cleared
        pivots.append(c)
    assert pivots == sorted(pivots)
    assert not rref[rank:].any()
