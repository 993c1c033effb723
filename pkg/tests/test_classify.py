import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from texcurate.classify import (
    AccuracyReport,
    LabeledVector,
    evaluate,
    format_table,
    knn_predict,
    reports_to_json,
    split,
)
from texcurate.features import FeatureVector


def lv(values, label):
    v = np.zeros(18)
    v[: len(values)] = values
    return LabeledVector(FeatureVector(v), label)


def make_data(per_class, classes=("a", "b", "c"), seed=0):
    rng = np.random.default_rng(seed)
    return [lv(rng.random(3) + 10 * ci, c) for ci, c in enumerate(classes) for _ in range(per_class)]


def test_split_counts_ceiling():
    train, test = split(make_data(48), 0.4, seed=1)
    for c in "abc":
        assert sum(t.class_label == c for t in train) == 20
        assert sum(t.class_label == c for t in test) == 28


def test_split_small_and_deterministic():
    data = make_data(2)
    train, test = split(data, 0.5, 0)
    assert len(train) == len(test) == 3
    a = split(make_data(10), 0.4, 7)
    b = split(make_data(10), 0.4, 7)
    assert [x.vector.values.tobytes() for x in a[0]] == [x.vector.values.tobytes() for x in b[0]]


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 20), st.floats(0.05, 0.95), st.integers(0, 1000))
def test_split_partitions(per_class, frac, seed):
    data = make_data(per_class)
    train, test = split(data, frac, seed)
    ids = sorted(map(id, train + test))
    assert ids == sorted(map(id, data))
    assert not set(map(id, train)) & set(map(id, test))


def test_split_errors():
    with pytest.raises(ValueError):
        split(make_data(1), 0.4, 0)
    with pytest.raises(ValueError):
        split(make_data(4), 1.0, 0)


@pytest.mark.parametrize("metric", ["euclidean", "soergel"])
def test_knn_trivial_cases(metric):
    train = make_data(4)
    assert knn_predict(train, train[5].vector, 1, metric) == train[5].class_label
    one = [t for t in train if t.class_label == "b"]
    assert knn_predict(one, train[0].vector, len(one), metric) == "b"


def test_knn_planted_majority():
    train = [lv([0.0], "x"), lv([1.0], "y"), lv([1.5], "y"), lv([3.0], "x"), lv([10.0], "x")]
    q = FeatureVector(np.r_[1.2, np.zeros(17)])
    # exhaustive sort oracle
    order = sorted(range(5), key=lambda i: (abs(train[i].vector.values[0] - 1.2), i))
    votes = [train[i].class_label for i in order[:3]]
    expected = max(set(votes), key=votes.count)
    assert knn_predict(train, q, 3, "euclidean") == expected == "y"


def test_knn_vote_tie_goes_to_nearest():
    train = [lv([0.0], "far"), lv([2.0], "near")]
    q = FeatureVector(np.r_[1.5, np.zeros(17)])
    assert knn_predict(train, q, 2) == "near"


def test_knn_distance_tie_uses_training_order():
    train = [lv([0.0], "first"), lv([2.0], "second")]
    q = FeatureVector(np.r_[1.0, np.zeros(17)])
    assert knn_predict(train, q, 1) == "first"


def test_knn_errors():
    with pytest.raises(ValueError):
        knn_predict([], FeatureVector(np.zeros(18)), 1)
    with pytest.raises(ValueError):
        knn_predict(make_data(2), FeatureVector(np.zeros(18)), 7)
    with pytest.raises(ValueError):
        knn_predict(make_data(2), FeatureVector(np.zeros(18)), 1, "cosine")


def test_evaluate_separable_and_single_class():
    r = evaluate(make_data(12), k=3, trials=10)
    assert r.accuracies == [1.0] * 10 and r.trials == 10
    assert r.mean == 1.0 and r.stddev == 0.0
    r = evaluate(make_data(6, classes=("only",)), k=1, trials=3)
    assert r.mean == 1.0


def test_report_consistency_and_output():
    r = AccuracyReport([0.9, 1.0, 0.8], k=3)
    assert r.mean == pytest.approx(0.9)
    assert r.stddev == pytest.approx(np.std([0.9, 1.0, 0.8]))
    assert min(r.accuracies) <= r.mean <= max(r.accuracies)
    doc = json.loads(reports_to_json([r]))
    assert doc["reports"][0]["accuracies"] == [0.9, 1.0, 0.8]
    table = format_table([r])
    assert "3NN" in table and "90.00±8.16" in table
