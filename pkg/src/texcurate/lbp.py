"""Rotation-invariant uniform local binary patterns.

Each pixel is labelled by thresholding ``P`` neighbours at radius ``R``
against the centre (``neighbour >= centre`` gives bit 1). A pattern whose
circular 0/1 transition count ``U`` is at most ``U_T`` gets its bit count
as label (``0..P``); every other pattern gets ``P + 1``.

With the default ``P = 8`` the neighbours are the 8 pixels of the square
ring at Chebyshev distance ``R`` (no interpolation), visited
counter-clockwise starting east: E, NE, N, NW, W, SW, S, SE. Other values
of ``P`` sample a circle with bilinear interpolation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .image import GrayImage, ImageError


@dataclass(frozen=True)
class LbpConfig:
    P: int = 8
    R: int = 1
    U_T: int = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.U_T is None:
            object.__setattr__(self, "U_T", self.P // 4)
        if self.P < 4:
            raise ValueError(f"P must be >= 4, got {self.P}")
        if self.R < 1:
            raise ValueError(f"R must be >= 1, got {self.R}")
        if self.P == 8 and int(self.R) != self.R:
            raise ValueError("square 8-neighbourhood needs an integer radius")
        if not 0 <= self.U_T <= self.P:
            raise ValueError(f"U_T must lie in [0, P], got {self.U_T}")

    @property
    def n_labels(self) -> int:
        return self.P + 2

    @property
    def margin(self) -> int:
        return int(math.ceil(self.R))


def neighbour_offsets(cfg: LbpConfig) -> np.ndarray:
    """``(P, 2)`` array of ``(drow, dcol)`` offsets in labelling order."""
    if cfg.P == 8:
        r = int(cfg.R)
        return np.array(
            [(0, r), (-r, r), (-r, 0), (-r, -r), (0, -r), (r, -r), (r, 0), (r, r)],
            dtype=np.float64,
        )
    ang = 2 * np.pi * np.arange(cfg.P) / cfg.P
    off = np.stack([-cfg.R * np.sin(ang), cfg.R * np.cos(ang)], axis=1)
    # snap floating noise so on-grid points skip interpolation
    snapped = np.round(off)
    return np.where(np.abs(off - snapped) < 1e-9, snapped, off)


def pattern_bits(centre, neighbours) -> np.ndarray:
    return (np.asarray(neighbours) >= centre).astype(np.int64)


def uniformity(bits) -> int:
    """Number of circular 0/1 transitions, including the wrap-around pair."""
    b = np.asarray(bits, dtype=np.int64)
    return int(np.sum(np.abs(b - np.roll(b, 1))))


def label_from_bits(bits, cfg: LbpConfig) -> int:
    b = np.asarray(bits, dtype=np.int64)
    if len(b) != cfg.P:
        raise ValueError(f"expected {cfg.P} bits, got {len(b)}")
    if uniformity(b) <= cfg.U_T:
        return int(b.sum())
    return cfg.P + 1


def lbp_label(centre, neighbours, cfg: LbpConfig | None = None) -> int:
    """Label of one neighbourhood; ``neighbours`` in circular order."""
    cfg = cfg or LbpConfig()
    return label_from_bits(pattern_bits(centre, neighbours), cfg)


def _sample(px: np.ndarray, m: int, dr: float, dc: float) -> np.ndarray:
    h, w = px.shape
    rows = np.arange(m, h - m)[:, None] + dr
    cols = np.arange(m, w - m)[None, :] + dc
    if float(dr).is_integer() and float(dc).is_integer():
        return px[int(dr) + m:h - m + int(dr), int(dc) + m:w - m + int(dc)].astype(np.float64)
    r0 = np.floor(rows).astype(int)
    c0 = np.floor(cols).astype(int)
    fr = rows - r0
    fc = cols - c0
    r1 = np.minimum(r0 + 1, h - 1)
    c1 = np.minimum(c0 + 1, w - 1)
    return (
        px[r0, c0] * (1 - fr) * (1 - fc)
        + px[r0, c1] * (1 - fr) * fc
        + px[r1, c0] * fr * (1 - fc)
        + px[r1, c1] * fr * fc
    )


def lbp_label_image(img: GrayImage, cfg: LbpConfig | None = None) -> np.ndarray:
    """Labels for every pixel whose whole neighbourhood is inside the image."""
    cfg = cfg or LbpConfig()
    m = cfg.margin
    if img.height < 2 * m + 1 or img.width < 2 * m + 1:
        raise ImageError(
            f"image {img.width}x{img.height} too small for LBP radius {cfg.R}"
        )
    px = img.pixels
    centre = px[m:img.height - m, m:img.width - m]
    bits = np.stack(
        [_sample(px, m, dr, dc) >= centre for dr, dc in neighbour_offsets(cfg)]
    ).astype(np.int64)
    trans = np.abs(bits - np.roll(bits, 1, axis=0)).sum(axis=0)
    return np.where(trans <= cfg.U_T, bits.sum(axis=0), cfg.P + 1)


def lbp_histogram(img: GrayImage, cfg: LbpConfig | None = None) -> np.ndarray:
    """Probability of each label ``0..P+1`` over the labelled pixels.

    Normalised by the number of labelled (interior) pixels, so the vector
    always sums to one.
    """
    cfg = cfg or LbpConfig()
    labels = lbp_label_image(img, cfg)
    counts = np.bincount(labels.ravel(), minlength=cfg.n_labels)
    return counts / labels.size
