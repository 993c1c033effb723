"""Grayscale image ingestion, quantization and overlapping-window cropping."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError

SUPPORTED_SUFFIXES = (".png", ".pgm")

# Rec. 601 luma weights
_LUMA = np.array([0.299, 0.587, 0.114])


class ImageError(ValueError):
    """Raised when an image cannot be read or does not fit an operation."""


@dataclass(frozen=True)
class GrayImage:
    """A 2-D grid of quantized intensity levels in ``[0, levels - 1]``.

    ``pixels`` is indexed ``[row, col]``; ``height`` is the row count.
    """

    pixels: np.ndarray
    levels: int

    def __post_init__(self):
        px = np.asarray(self.pixels)
        if px.ndim != 2 or px.shape[0] < 1 or px.shape[1] < 1:
            raise ImageError(f"expected a non-empty 2-D grid, got shape {px.shape}")
        if self.levels < 2:
            raise ImageError(f"levels must be >= 2, got {self.levels}")
        if not np.issubdtype(px.dtype, np.integer):
            if not np.all(px == np.floor(px)):
                raise ImageError("pixel values must be integral level indices")
        px = px.astype(np.int64)
        if px.min() < 0 or px.max() >= self.levels:
            raise ImageError(
                f"pixel values must lie in [0, {self.levels - 1}], "
                f"got [{px.min()}, {px.max()}]"
            )
        px.setflags(write=False)
        object.__setattr__(self, "pixels", px)

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    def requantize(self, levels: int) -> GrayImage:
        """Uniformly rebin to a coarser (or equal) number of levels."""
        if levels == self.levels:
            return self
        return GrayImage(quantize(self.pixels, self.levels, levels), levels)


@dataclass(frozen=True)
class CropSpec:
    window: int = 128
    stride: int = 64

    def __post_init__(self):
        if not 1 <= self.stride <= self.window:
            raise ImageError(
                f"need 1 <= stride <= window, got stride={self.stride}, window={self.window}"
            )

    def grid_shape(self, img: GrayImage) -> tuple[int, int]:
        """Number of window rows and columns that fit in ``img``."""
        if self.window > min(img.width, img.height):
            raise ImageError(
                f"window {self.window} larger than image {img.width}x{img.height}"
            )
        rows = (img.height - self.window) // self.stride + 1
        cols = (img.width - self.window) // self.stride + 1
        return rows, cols


def quantize(values, source_levels: int, levels: int) -> np.ndarray:
    """Map integers in ``[0, source_levels)`` onto ``levels`` uniform bins.

    ``level = floor(value * levels / source_levels)``, clamped to ``levels - 1``.
    The map is monotone non-decreasing.
    """
    if levels < 2:
        raise ImageError(f"levels must be >= 2, got {levels}")
    v = np.asarray(values, dtype=np.int64)
    out = (v * levels) // source_levels
    return np.clip(out, 0, levels - 1)


def luminance(rgb: np.ndarray) -> np.ndarray:
    """Integer-rounded Rec. 601 luma of an ``(..., 3)`` array."""
    return np.rint(np.asarray(rgb, dtype=np.float64)[..., :3] @ _LUMA).astype(np.int64)


def _decode(path: Path) -> tuple[np.ndarray, int]:
    # returns raw integer intensities and the number of source levels
    try:
        with Image.open(path) as im:
            im.load()
            mode = im.mode
            if mode in ("I;16", "I;16B", "I;16L", "I;16N", "I"):
                arr = np.asarray(im, dtype=np.int64)
                return np.clip(arr, 0, 65535), 65536
            if mode == "L":
                return np.asarray(im, dtype=np.int64), 256
            if mode in ("RGB", "RGBA", "P", "PA", "CMYK", "YCbCr", "LA", "1"):
                if mode in ("LA", "1"):
                    return np.asarray(im.convert("L"), dtype=np.int64), 256
                rgb = np.asarray(im.convert("RGB"), dtype=np.int64)
                return np.clip(luminance(rgb), 0, 255), 256
            raise ImageError(f"{path}: unsupported pixel mode {mode!r}")
    except (UnidentifiedImageError, OSError, SyntaxError) as exc:
        raise ImageError(f"{path}: cannot decode image ({exc})") from exc


def load_gray(path, levels: int = 256) -> GrayImage:
    """Read a PNG or binary PGM file and quantize it to ``levels`` bins.

    Colour inputs are reduced to Rec. 601 luminance first. 8-bit sources use
    ``floor(p * levels / 256)``; 16-bit sources divide by 65536 instead.
    """
    if levels < 2:
        raise ImageError(f"levels must be >= 2, got {levels}")
    path = Path(path)
    if not path.is_file():
        raise ImageError(f"{path}: no such file")
    if path.suffix.lower() not in SUPPORTED_SUFFIXES:
        raise ImageError(f"{path}: unsupported format (expected PNG or PGM)")
    raw, source_levels = _decode(path)
    return GrayImage(quantize(raw, source_levels, levels), levels)


def save_pgm(img: GrayImage, path) -> None:
    """Write ``img`` as a binary PGM with ``maxval = levels - 1``."""
    maxval = img.levels - 1
    dtype = ">u1" if maxval < 256 else ">u2"
    header = f"P5\n{img.width} {img.height}\n{maxval}\n".encode("ascii")
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(img.pixels.astype(dtype).tobytes())


def crop_windows(img: GrayImage, spec: CropSpec) -> list[GrayImage]:
    """Cut square windows on a regular stride grid, row-major.

    Only windows lying fully inside the image are produced, so a 512x512
    image with window 128 and stride 64 gives a 7x7 grid of 49 windows.
    """
    rows, cols = spec.grid_shape(img)
    w = spec.window
    out = []
    for r in range(rows):
        y = r * spec.stride
        for c in range(cols):
            x = c * spec.stride
            out.append(GrayImage(img.pixels[y:y + w, x:x + w].copy(), img.levels))
    return out


def window_offsets(img: GrayImage, spec: CropSpec) -> list[tuple[int, int]]:
    """Grid indices ``(row, col)`` matching the order of :func:`crop_windows`."""
    rows, cols = spec.grid_shape(img)
    return [(r, c) for r in range(rows) for c in range(cols)]
