"""Seeded synthetic textures for demos and sanity checks."""

from __future__ import annotations

import numpy as np

from .image import GrayImage

TEXTURES = ("grating_low", "grating_high", "checkerboard", "noise")


def grating(size: int, period: float, phase: float, angle: float = 0.0, levels: int = 256, rng=None, noise: float = 0.0) -> GrayImage:
    yy, xx = np.mgrid[0:size, 0:size]
    t = xx * np.cos(angle) + yy * np.sin(angle)
    v = 0.5 + 0.5 * np.sin(2 * np.pi * t / period + phase)
    if noise and rng is not None:
        v = v + rng.normal(0, noise, v.shape)
    return _to_levels(v, levels)


def checkerboard(size: int, cell: int, offset: tuple[int, int] = (0, 0), levels: int = 256, rng=None, noise: float = 0.0) -> GrayImage:
    yy, xx = np.mgrid[0:size, 0:size]
    v = (((yy + offset[0]) // cell + (xx + offset[1]) // cell) % 2).astype(np.float64)
    v = 0.15 + 0.7 * v
    if noise and rng is not None:
        v = v + rng.normal(0, noise, v.shape)
    return _to_levels(v, levels)


def uniform_noise(size: int, levels: int = 256, rng=None) -> GrayImage:
    rng = rng if rng is not None else np.random.default_rng()
    return GrayImage(rng.integers(0, levels, (size, size)), levels)


def _to_levels(v: np.ndarray, levels: int) -> GrayImage:
    q = np.floor(np.clip(v, 0.0, 1.0) * levels)
    return GrayImage(np.minimum(q, levels - 1).astype(np.int64), levels)


def texture_corpus(per_class: int = 48, size: int = 64, seed: int = 0, levels: int = 256):
    """Four texture classes with random phase/offset and mild noise.

    Returns a list of ``(class_name, GrayImage)`` pairs, class-major.
    """
    rng = np.random.default_rng(seed)
    out = []
    for name in TEXTURES:
        for _ in range(per_class):
            if name == "grating_low":
                img = grating(size, 16.0, rng.uniform(0, 2 * np.pi), levels=levels, rng=rng, noise=0.03)
            elif name == "grating_high":
                img = grating(size, 5.0, rng.uniform(0, 2 * np.pi), levels=levels, rng=rng, noise=0.03)
            elif name == "checkerboard":
                off = tuple(int(x) for x in rng.integers(0, 8, 2))
                img = checkerboard(size, 8, off, levels=levels, rng=rng, noise=0.03)
            else:
                img = uniform_noise(size, levels, rng)
            out.append((name, img))
    return out
