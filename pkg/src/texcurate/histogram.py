"""First-order statistics of the intensity histogram."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .image import GrayImage


@dataclass(frozen=True)
class Histogram:
    p: np.ndarray
    mean: float
    variance: float

    @classmethod
    def from_probabilities(cls, p) -> Histogram:
        p = np.asarray(p, dtype=np.float64)
        total = p.sum()
        if total <= 0 or np.any(p < 0):
            raise ValueError("probabilities must be non-negative with positive mass")
        p = p / total
        lv = np.arange(len(p))
        mean = float(np.dot(lv, p))
        variance = float(np.dot((lv - mean) ** 2, p))
        return cls(p, mean, variance)


class HistFeatures(NamedTuple):
    mean: float
    skewness: float
    kurtosis: float
    energy: float
    entropy: float


def histogram(img: GrayImage) -> Histogram:
    counts = np.bincount(img.pixels.ravel(), minlength=img.levels)
    return Histogram.from_probabilities(counts / img.pixels.size)


def hist_features(h: Histogram) -> HistFeatures:
    """Mean, skewness, excess kurtosis, energy and entropy (bits).

    Moments are central moments about the histogram mean. A zero-variance
    histogram has skewness 0 and kurtosis -3 by convention.
    """
    p = h.p
    dev = np.arange(len(p)) - h.mean
    if h.variance > 0:
        sigma = np.sqrt(h.variance)
        skew = float(np.dot(dev ** 3, p) / sigma ** 3)
        kurt = float(np.dot(dev ** 4, p) / h.variance ** 2 - 3.0)
    else:
        skew, kurt = 0.0, -3.0
    energy = float(np.dot(p, p))
    nz = p[p > 0]
    entropy = float(-np.sum(nz * np.log2(nz)))
    # -0.0 for a single mass point
    return HistFeatures(h.mean, skew, kurt, energy, entropy + 0.0)
