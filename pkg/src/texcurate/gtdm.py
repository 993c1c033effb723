"""Gray-tone difference matrix and the coarseness, complexity and strength features.

For every interior pixel (one whose full ``(2K+1) x (2K+1)`` window lies
inside the image) the mean of its ``W - 1`` neighbours is taken, with
``W = (2K+1)**2`` and the centre pixel excluded. ``s[i]`` accumulates
``|i - mean|`` over the interior pixels at level ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .image import GrayImage, ImageError

DEFAULT_EPS = 1e-6


@dataclass(frozen=True)
class GtdmTable:
    """Per-level difference sums ``s``, occurrence probabilities ``p``.

    ``counts`` holds the interior pixel count per level, ``n`` their total
    and ``K`` the window half-size used.
    """

    s: np.ndarray
    p: np.ndarray
    counts: np.ndarray
    n: int
    K: int

    @property
    def levels(self) -> int:
        return len(self.s)


def compute_gtdm(img: GrayImage, K: int = 1) -> GtdmTable:
    if K < 1:
        raise ValueError(f"K must be >= 1, got {K}")
    if img.width <= 2 * K or img.height <= 2 * K:
        raise ImageError(
            f"image {img.width}x{img.height} too small for GTDM half-size K={K}"
        )
    side = 2 * K + 1
    n_neigh = side * side - 1
    px = img.pixels
    window_sum = sliding_window_view(px, (side, side)).sum(axis=(-2, -1))
    centre = px[K:px.shape[0] - K, K:px.shape[1] - K]
    neigh_sum = window_sum - centre

    # |i - sum/(W-1)| * (W-1) is an exact integer; divide once at the end
    scaled = np.abs(centre * n_neigh - neigh_sum).ravel()
    levels = centre.ravel()
    G = img.levels
    s_scaled = np.bincount(levels, weights=scaled, minlength=G)
    counts = np.bincount(levels, minlength=G)
    n = int(centre.size)
    return GtdmTable(
        s=s_scaled / n_neigh,
        p=counts / n,
        counts=counts,
        n=n,
        K=K,
    )


def coarseness(t: GtdmTable, eps: float = DEFAULT_EPS) -> float:
    """``1 / (eps + sum_i p_i s_i)``; always strictly positive."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    return float(1.0 / (eps + np.dot(t.p, t.s)))


def _occupied(t: GtdmTable):
    idx = np.flatnonzero(t.p)
    return idx.astype(np.float64), t.p[idx], t.s[idx]


def complexity(t: GtdmTable) -> float:
    """Sum over ordered pairs of occupied levels ``(i, j)`` of

    ``|i - j| / (n (p_i + p_j)) * (p_i s_i + p_j s_j)``.

    The divisor is ``n (p_i + p_j)``, not the ``n**2`` form found in some
    other GTDM implementations.
    """
    if t.n <= 0:
        raise ValueError("empty GTDM table")
    lv, p, s = _occupied(t)
    ps = p * s
    dist = np.abs(lv[:, None] - lv[None, :])
    return float(np.sum(dist / (t.n * (p[:, None] + p[None, :])) * (ps[:, None] + ps[None, :])))


def strength(t: GtdmTable, eps: float = DEFAULT_EPS) -> float:
    if eps <= 0:
        raise ValueError("eps must be positive")
    lv, p, _ = _occupied(t)
    num = np.sum((p[:, None] + p[None, :]) * (lv[:, None] - lv[None, :]) ** 2)
    return float(num / (eps + np.sum(t.s)))


def gtdm_features(img: GrayImage, K: int = 1, eps: float = DEFAULT_EPS) -> tuple[float, float, float]:
    """Coarseness, complexity and strength of ``img``."""
    t = compute_gtdm(img, K)
    return coarseness(t, eps), complexity(t), strength(t, eps)
