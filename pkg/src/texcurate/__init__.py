"""Texture descriptors, diverse dataset curation and KNN evaluation.

Modules
-------
image       grayscale loading, quantization, window cropping
gtdm        gray-tone difference matrix: coarseness, complexity, strength
histogram   first-order histogram moments, energy, entropy
lbp         rotation-invariant uniform local binary patterns
features    18-dim descriptor, min-max normalisation, Soergel distance, CSV I/O
curation    K-means subset selection and the Fisher diversity score
classify    stratified splits and KNN accuracy
synthetic   seeded synthetic textures
"""

from .classify import AccuracyReport, LabeledVector, evaluate, knn_predict, split
from .curation import CurationResult, cluster_mean, curate, fisher
from .features import (
    FEATURE_NAMES,
    FeatureConfig,
    FeatureVector,
    NormalizationBounds,
    extract_features,
    fit_bounds,
    normalize,
    normalize_pool,
    soergel,
)
from .gtdm import GtdmTable, coarseness, complexity, compute_gtdm, strength
from .histogram import Histogram, hist_features, histogram
from .image import CropSpec, GrayImage, ImageError, crop_windows, load_gray
from .lbp import LbpConfig, lbp_histogram, lbp_label, uniformity

__version__ = "0.1.0"
