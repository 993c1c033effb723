"""The 18-dimensional texture descriptor, pool normalisation and Soergel distance.

Layout of the descriptor::

    f1  coarseness      f5  skewness     f9..f18  probability of LBP
    f2  complexity      f6  kurtosis              labels 0..9
    f3  strength        f7  energy
    f4  mean            f8  entropy
"""

from __future__ import annotations

import csv
import json
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .gtdm import DEFAULT_EPS, gtdm_features
from .histogram import hist_features, histogram
from .image import GrayImage
from .lbp import LbpConfig, lbp_histogram

N_FEATURES = 18
FEATURE_NAMES = (
    "coarseness", "complexity", "strength",
    "mean", "skewness", "kurtosis", "energy", "entropy",
) + tuple(f"lbp_{k}" for k in range(10))
COLUMNS = tuple(f"f{k}" for k in range(1, N_FEATURES + 1))


@dataclass(frozen=True)
class FeatureVector:
    values: np.ndarray
    source_id: str = ""

    def __post_init__(self):
        v = np.array(self.values, dtype=np.float64)
        if v.shape != (N_FEATURES,):
            raise ValueError(f"feature vector must have {N_FEATURES} entries, got {v.shape}")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def __len__(self):
        return N_FEATURES


@dataclass(frozen=True)
class FeatureConfig:
    """Extraction settings.

    ``gtdm_levels`` caps the number of gray levels on the GTDM path; images
    with more levels are rebinned before the matrix is built. ``None``
    keeps the native levels.
    """

    gtdm_K: int = 1
    eps: float = DEFAULT_EPS
    gtdm_levels: int | None = 32
    lbp: LbpConfig = field(default_factory=LbpConfig)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> FeatureConfig:
        d = dict(d)
        lbp = d.pop("lbp", None) or {}
        return cls(lbp=LbpConfig(**lbp), **d)


@dataclass(frozen=True)
class NormalizationBounds:
    min: np.ndarray
    max: np.ndarray

    def __post_init__(self):
        lo = np.array(self.min, dtype=np.float64)
        hi = np.array(self.max, dtype=np.float64)
        if lo.shape != (N_FEATURES,) or hi.shape != (N_FEATURES,):
            raise ValueError("bounds must have one entry per feature")
        if np.any(lo > hi):
            raise ValueError("min exceeds max in some dimension")
        object.__setattr__(self, "min", lo)
        object.__setattr__(self, "max", hi)

    def to_dict(self) -> dict:
        return {"min": [float(x) for x in self.min], "max": [float(x) for x in self.max]}

    @classmethod
    def from_dict(cls, d: dict) -> NormalizationBounds:
        return cls(np.array(d["min"]), np.array(d["max"]))


def extract_features(
    img: GrayImage,
    gtdm_K: int = 1,
    eps: float = DEFAULT_EPS,
    lbp: LbpConfig | None = None,
    gtdm_levels: int | None = 32,
    source_id: str = "",
) -> FeatureVector:
    lbp = lbp or LbpConfig()
    if lbp.n_labels != 10:
        raise ValueError("the 18-dim descriptor needs a 10-label LBP (P=8)")
    gimg = img
    if gtdm_levels is not None and img.levels > gtdm_levels:
        gimg = img.requantize(gtdm_levels)
    g = gtdm_features(gimg, gtdm_K, eps)
    h = hist_features(histogram(img))
    probs = lbp_histogram(img, lbp)
    return FeatureVector(np.concatenate([g, h, probs]), source_id)


def extract_with(img: GrayImage, cfg: FeatureConfig, source_id: str = "") -> FeatureVector:
    return extract_features(img, cfg.gtdm_K, cfg.eps, cfg.lbp, cfg.gtdm_levels, source_id)


def as_matrix(vectors: Iterable[FeatureVector] | np.ndarray) -> np.ndarray:
    if isinstance(vectors, np.ndarray):
        return np.atleast_2d(vectors).astype(np.float64)
    rows = [v.values if isinstance(v, FeatureVector) else v for v in vectors]
    return np.array(rows, dtype=np.float64).reshape(len(rows), -1)


def fit_bounds(pool: Sequence[FeatureVector]) -> NormalizationBounds:
    X = as_matrix(pool)
    if len(X) == 0:
        raise ValueError("cannot fit bounds on an empty pool")
    return NormalizationBounds(X.min(axis=0), X.max(axis=0))


def normalize_values(X: np.ndarray, b: NormalizationBounds) -> np.ndarray:
    span = b.max - b.min
    safe = np.where(span > 0, span, 1.0)
    return np.where(span > 0, (X - b.min) / safe, 0.0)


def normalize(v: FeatureVector, b: NormalizationBounds) -> FeatureVector:
    """Min-max map each dimension into ``[0, 1]`` using pool bounds.

    Degenerate dimensions (min == max) map to 0. Values from outside the
    pool are not clamped and may leave the unit interval.
    """
    return FeatureVector(normalize_values(v.values, b), v.source_id)


def normalize_pool(pool: Sequence[FeatureVector]) -> tuple[list[FeatureVector], NormalizationBounds]:
    b = fit_bounds(pool)
    return [normalize(v, b) for v in pool], b


def _values(x) -> np.ndarray:
    return x.values if isinstance(x, FeatureVector) else np.asarray(x, dtype=np.float64)


def soergel(a, b) -> float:
    """``sum |a - b| / sum max(a, b)``; 0 when the denominator vanishes."""
    a, b = _values(a), _values(b)
    den = np.sum(np.maximum(a, b))
    if den == 0:
        return 0.0
    return float(np.sum(np.abs(a - b)) / den)


def soergel_matrix(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Pairwise Soergel distances between the rows of ``A`` and ``B``."""
    A = np.atleast_2d(A)
    B = np.atleast_2d(B)
    num = np.abs(A[:, None, :] - B[None, :, :]).sum(axis=-1)
    den = np.maximum(A[:, None, :], B[None, :, :]).sum(axis=-1)
    with np.errstate(invalid="ignore", divide="ignore"):
        d = num / den
    return np.where(den == 0, 0.0, d)


# -- persistence ---------------------------------------------------------

def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def write_csv(path, vectors: Sequence[FeatureVector], labels: Sequence[str] | None = None) -> None:
    header = ["id", *COLUMNS] + (["label"] if labels is not None else [])
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for i, v in enumerate(vectors):
            row = [v.source_id, *(_fmt(x) for x in v.values)]
            if labels is not None:
                row.append(labels[i])
            w.writerow(row)


def read_csv(path) -> tuple[list[FeatureVector], list[str] | None]:
    """Read a features CSV; returns vectors and labels (``None`` if absent)."""
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise ValueError(f"{path}: empty CSV")
    header = rows[0]
    if header[:N_FEATURES + 1] != ["id", *COLUMNS]:
        raise ValueError(f"{path}: header must start with id,f1..f18")
    has_label = len(header) > N_FEATURES + 1 and header[N_FEATURES + 1] == "label"
    vectors, labels = [], []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        if len(row) != len(header):
            raise ValueError(f"{path}:{lineno}: expected {len(header)} fields, got {len(row)}")
        try:
            vals = [float(x) for x in row[1:N_FEATURES + 1]]
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: {exc}") from exc
        vectors.append(FeatureVector(vals, row[0]))
        if has_label:
            labels.append(row[N_FEATURES + 1])
    return vectors, (labels if has_label else None)


def write_manifest(path, bounds: NormalizationBounds, config: FeatureConfig, levels: int) -> None:
    doc = {"bounds": bounds.to_dict(), "config": config.to_dict(), "levels": levels}
    Path(path).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def read_manifest(path) -> tuple[NormalizationBounds, FeatureConfig, int]:
    doc = json.loads(Path(path).read_text(encoding="utf-8"))
    return (
        NormalizationBounds.from_dict(doc["bounds"]),
        FeatureConfig.from_dict(doc["config"]),
        int(doc["levels"]),
    )
