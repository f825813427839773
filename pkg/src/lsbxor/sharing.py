"""Two-way odd/even pixel sharing of a linearized grayscale image.

Position is the 1-based row-major pixel index.  Share 1 holds the pixels
at odd positions (0-based indices 0, 2, 4, ...) and share 2 those at even
positions.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import MalformedSharesError
from .image import GrayImage


@dataclass(frozen=True, eq=False)
class PixelShares:
    share1: np.ndarray = field(repr=False)
    share2: np.ndarray = field(repr=False)
    total_len: int

    def __post_init__(self):
        s1 = np.asarray(self.share1).reshape(-1)
        s2 = np.asarray(self.share2).reshape(-1)
        for s in (s1, s2):
            if s.size and (s.min() < 0 or s.max() > 255):
                raise ValueError("share values must lie in 0..255")
        object.__setattr__(self, "share1", s1.astype(np.uint8))
        object.__setattr__(self, "share2", s2.astype(np.uint8))

    def __eq__(self, other):
        if not isinstance(other, PixelShares):
            return NotImplemented
        return (
            self.total_len == other.total_len
            and np.array_equal(self.share1, other.share1)
            and np.array_equal(self.share2, other.share2)
        )

    __hash__ = None


def split_image(img: GrayImage) -> PixelShares:
    px = img.pixels
    return PixelShares(px[0::2], px[1::2], px.size)


def merge_shares(shares: PixelShares) -> np.ndarray:
    """Interleave two shares back into the linear pixel sequence."""
    n = shares.total_len
    s1, s2 = shares.share1, shares.share2
    if s1.size != (n + 1) // 2 or s2.size != n // 2:
        raise MalformedSharesError(
            f"shares of length {s1.size} and {s2.size} cannot rebuild {n} pixels"
        )
    out = np.empty(n, dtype=np.uint8)
    out[0::2] = s1
    out[1::2] = s2
    return out


def merge_to_image(shares: PixelShares, width: int, height: int) -> GrayImage:
    if shares.total_len != width * height:
        raise MalformedSharesError(
            f"shares hold {shares.total_len} pixels, image needs {width * height}"
        )
    return GrayImage(width, height, merge_shares(shares))
