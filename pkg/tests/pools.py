"""Planted candidate pools with known group structure."""

import numpy as np

from texcurate.features import FeatureVector


def two_group_pool(rng, per_group=10, jitter=0.01):
    hi = np.r_[np.full(9, 0.9), np.full(9, 0.05)]
    lo = hi[::-1].copy()
    vecs, groups = [], []
    for g, base in enumerate((hi, lo)):
        for i in range(per_group):
            v = np.clip(base + rng.uniform(-jitter, jitter, 18), 0, 1)
            vecs.append(FeatureVector(v, f"g{g}_{i}"))
            groups.append(g)
    return vecs, groups


def multi_group_pool(rng, n_groups=4, per_group=8, jitter=0.01):
    bases = rng.uniform(0.1, 0.9, (n_groups, 18))
    vecs, groups = [], []
    for g in range(n_groups):
        for i in range(per_group):
            v = np.clip(bases[g] + rng.uniform(-jitter, jitter, 18), 0, 1)
            vecs.append(FeatureVector(v, f"g{g}_{i}"))
            groups.append(g)
    return vecs, groups
