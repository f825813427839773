"""Histogram comparison between a key image and its stego image."""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ShapeError
from .image import GrayImage


def histogram(img: GrayImage) -> np.ndarray:
    """Count of pixels at each grey value, as a length-256 integer array."""
    return np.bincount(img.pixels, minlength=256).astype(np.int64)


def psnr(a: GrayImage, b: GrayImage) -> float:
    """Peak signal-to-noise ratio in dB with peak 255; ``inf`` for identical images."""
    if a.shape != b.shape:
        raise ShapeError(f"cannot compare {a.width}x{a.height} with {b.width}x{b.height}")
    diff = a.pixels.astype(np.int64) - b.pixels.astype(np.int64)
    mse = float(np.mean(diff * diff))
    if mse == 0:
        return math.inf
    return 10 * math.log10(255.0**2 / mse)


@dataclass(frozen=True, eq=False)
class DiffReport:
    histogram_a: np.ndarray = field(repr=False)
    histogram_b: np.ndarray = field(repr=False)
    per_bin_delta: np.ndarray = field(repr=False)
    changed_pixels: int
    max_abs_pixel_delta: int
    psnr: float

    @property
    def histogram_l1(self) -> int:
        return int(np.abs(self.per_bin_delta).sum())

    def to_csv(self) -> str:
        lines = ["grey_value,count_key,count_stego,delta"]
        for v in range(256):
            lines.append(
                f"{v},{self.histogram_a[v]},{self.histogram_b[v]},{self.per_bin_delta[v]}"
            )
        lines.append(f"changed_pixels,{self.changed_pixels}")
        lines.append("psnr_db,inf" if math.isinf(self.psnr) else f"psnr_db,{self.psnr:.4f}")
        return "\n".join(lines) + "\n"


def compare(a: GrayImage, b: GrayImage) -> DiffReport:
    if a.shape != b.shape:
        raise ShapeError(f"cannot compare {a.width}x{a.height} with {b.width}x{b.height}")
    ha, hb = histogram(a), histogram(b)
    diff = np.abs(a.pixels.astype(np.int64) - b.pixels.astype(np.int64))
    return DiffReport(
        histogram_a=ha,
        histogram_b=hb,
        per_bin_delta=hb - ha,
        changed_pixels=int(np.count_nonzero(diff)),
        max_abs_pixel_delta=int(diff.max()),
        psnr=psnr(a, b),
    )
