"""Repeated 40/60 split KNN classification, the way texture benchmarks are scored.

Four synthetic classes, 48 windows each. A real dataset goes through the
same steps: crop 512x512 images into 128x128 windows with stride 64, extract,
normalise over all windows, evaluate.
"""
# %%
from texcurate import LabeledVector, evaluate, extract_features, normalize_pool
from texcurate.classify import format_table
from texcurate.synthetic import texture_corpus

corpus = texture_corpus(per_class=48, size=64, seed=3)
vectors = [extract_features(img, source_id=f"{name}-{i}") for i, (name, img) in enumerate(corpus)]
normed, _ = normalize_pool(vectors)
data = [LabeledVector(v, name) for v, (name, _) in zip(normed, corpus)]

# %%
reports = [evaluate(data, k=k, trials=10, train_fraction=0.4, base_seed=0) for k in (1, 3, 5)]
print(format_table(reports, method="GTDM+hist+LBP"))

# %%
soergel_reports = [evaluate(data, k=k, metric="soergel") for k in (1, 3, 5)]
print(format_table(soergel_reports, method="GTDM+hist+LBP"))
