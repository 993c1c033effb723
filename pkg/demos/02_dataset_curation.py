"""Curate a small diverse dataset out of a redundant candidate pool.

The pool mixes many near-duplicate windows from a handful of textures.
Selection by K-means over Soergel distance should return one window per
texture family. Its Fisher score sits far above a set of near-duplicates;
a random draw that happens to hit every family can score about the same,
so Fisher alone does not separate those two.
"""
# %%
import numpy as np

from texcurate import curate, extract_features, fisher, normalize_pool
from texcurate.synthetic import checkerboard, grating, uniform_noise

rng = np.random.default_rng(1)
candidates = []
for i in range(12):
    candidates.append(("coarse", grating(48, 16.0, rng.uniform(0, 6.28), rng=rng, noise=0.02)))
    candidates.append(("fine", grating(48, 5.0, rng.uniform(0, 6.28), rng=rng, noise=0.02)))
    candidates.append(("check", checkerboard(48, 6, tuple(rng.integers(0, 6, 2)), rng=rng, noise=0.02)))
    candidates.append(("noise", uniform_noise(48, rng=rng)))

pool = [extract_features(img, source_id=f"{fam}-{i:02d}") for i, (fam, img) in enumerate(candidates)]
normed, bounds = normalize_pool(pool)

# %%
result = curate(normed, N=4, seed=7)
print("selected:", result.selected)
print(f"iterations: {result.iterations}  converged: {result.converged}")
print(f"Fisher of curated set: {result.fisher:.3f}")

# %%
random_pick = rng.choice(len(normed), 4, replace=False)
print(f"Fisher of a random set: {fisher([normed[i] for i in random_pick]):.3f}")
print(f"Fisher of four coarse gratings: {fisher([v for v in normed if v.source_id.startswith('coarse')][:4]):.3f}")

# %%
print(result.to_json()[:300], "...")
