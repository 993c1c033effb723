"""Stratified train/test splitting, KNN classification and repeated-trial accuracy."""

from __future__ import annotations

import json
import math
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Hashable, Sequence

import numpy as np

from .features import FeatureVector, soergel_matrix

METRICS = ("euclidean", "soergel")


@dataclass(frozen=True)
class LabeledVector:
    vector: FeatureVector
    class_label: Hashable


@dataclass(frozen=True)
class AccuracyReport:
    accuracies: list[float]
    k: int
    metric: str = "euclidean"
    trials: int = field(init=False)
    mean: float = field(init=False)
    stddev: float = field(init=False)

    def __post_init__(self):
        acc = np.asarray(self.accuracies, dtype=np.float64)
        object.__setattr__(self, "trials", len(acc))
        object.__setattr__(self, "mean", float(acc.mean()) if len(acc) else float("nan"))
        # population standard deviation over trials
        object.__setattr__(self, "stddev", float(acc.std()) if len(acc) else float("nan"))

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "metric": self.metric,
            "trials": self.trials,
            "accuracies": [float(a) for a in self.accuracies],
            "mean": self.mean,
            "stddev": self.stddev,
        }


def split(data: Sequence[LabeledVector], train_fraction: float = 0.4, seed: int = 0):
    """Per-class seeded shuffle; ``ceil(train_fraction * size)`` go to train.

    Class order follows first appearance in ``data``, which keeps the result
    deterministic for a given input order and seed.
    """
    if not 0 < train_fraction < 1:
        raise ValueError("train_fraction must lie strictly between 0 and 1")
    by_class: dict = defaultdict(list)
    for item in data:
        by_class[item.class_label].append(item)
    rng = np.random.default_rng(seed)
    train, test = [], []
    for label, items in by_class.items():
        if len(items) < 2:
            raise ValueError(f"class {label!r} has fewer than 2 members")
        order = rng.permutation(len(items))
        n_train = math.ceil(train_fraction * len(items))
        # keep at least one test member per class
        n_train = min(n_train, len(items) - 1)
        train += [items[i] for i in order[:n_train]]
        test += [items[i] for i in order[n_train:]]
    return train, test


def distances(train: np.ndarray, queries: np.ndarray, metric: str) -> np.ndarray:
    if metric == "euclidean":
        return np.sqrt(((queries[:, None, :] - train[None, :, :]) ** 2).sum(axis=-1))
    if metric == "soergel":
        return soergel_matrix(queries, train)
    raise ValueError(f"unknown metric {metric!r}; choose from {METRICS}")


def _vote(labels: Sequence, order: np.ndarray, k: int):
    nearest = [labels[i] for i in order[:k]]
    tally: dict = {}
    for lab in nearest:
        tally[lab] = tally.get(lab, 0) + 1
    best = max(tally.values())
    # dict keeps first-seen order, i.e. by distance rank
    for lab in tally:
        if tally[lab] == best:
            return lab


def predict_many(train: Sequence[LabeledVector], queries: np.ndarray, k: int = 3, metric: str = "euclidean") -> list:
    if not train:
        raise ValueError("empty training set")
    if not 1 <= k <= len(train):
        raise ValueError(f"k must lie in [1, {len(train)}], got {k}")
    T = np.array([t.vector.values for t in train])
    labels = [t.class_label for t in train]
    D = distances(T, np.atleast_2d(queries), metric)
    return [_vote(labels, np.argsort(row, kind="stable"), k) for row in D]


def knn_predict(train: Sequence[LabeledVector], query: FeatureVector, k: int = 3, metric: str = "euclidean"):
    """Majority label among the ``k`` nearest training vectors.

    Equal distances keep training-set order; a tied vote goes to the label
    of the nearest member among the tied classes.
    """
    q = query.values if isinstance(query, FeatureVector) else np.asarray(query, dtype=np.float64)
    return predict_many(train, q[None, :], k, metric)[0]


def evaluate(
    data: Sequence[LabeledVector],
    k: int = 3,
    trials: int = 10,
    train_fraction: float = 0.4,
    base_seed: int = 0,
    metric: str = "euclidean",
) -> AccuracyReport:
    """Trial ``t`` splits with seed ``base_seed + t`` and scores the test part."""
    accs = []
    for t in range(trials):
        train, test = split(data, train_fraction, base_seed + t)
        Q = np.array([q.vector.values for q in test])
        pred = predict_many(train, Q, k, metric)
        hits = sum(p == q.class_label for p, q in zip(pred, test))
        accs.append(hits / len(test))
    return AccuracyReport(accs, k, metric)


def format_table(reports: Sequence[AccuracyReport], method: str = "texcurate") -> str:
    """Plain-text accuracy table, one block per ``k`` (values in percent)."""
    lines = []
    width = max(len(method), 14)
    for r in reports:
        lines.append(f"{r.k}NN ({r.metric})")
        lines.append(f"{'Method':<15}{method:>{width}}")
        cell = f"{100 * r.mean:.2f}±{100 * r.stddev:.2f}"
        lines.append(f"{'Accuracy rate':<15}{cell:>{width}}")
    lines.append("(± is the standard deviation over trials)")
    return "\n".join(lines)


def reports_to_json(reports: Sequence[AccuracyReport]) -> str:
    return json.dumps({"reports": [r.to_dict() for r in reports]}, indent=2, sort_keys=True) + "\n"
