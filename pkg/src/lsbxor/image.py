from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True, eq=False)
class GrayImage:
    """An 8-bit grayscale image stored as a flat row-major pixel buffer."""

    width: int
    height: int
    pixels: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError(f"invalid image size {self.width}x{self.height}")
        px = np.asarray(self.pixels)
        if px.size != self.width * self.height:
            raise ValueError(
                f"{px.size} pixels do not fill a {self.width}x{self.height} image"
            )
        if px.size and (px.min() < 0 or px.max() > 255):
            raise ValueError("pixel values must lie in 0..255")
        px = px.reshape(-1).astype(np.uint8)
        px.flags.writeable = False
        object.__setattr__(self, "pixels", px)

    @classmethod
    def from_array(cls, arr) -> GrayImage:
        arr = np.asarray(arr)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1)
        if arr.ndim != 2:
            raise ValueError("expected a 2-D array of grey values")
        h, w = arr.shape
        return cls(w, h, arr.reshape(-1))

    @property
    def shape(self) -> tuple[int, int]:
        return self.height, self.width

    @property
    def size(self) -> int:
        return self.width * self.height

    def to_array(self) -> np.ndarray:
        return self.pixels.reshape(self.height, self.width).copy()

    def __eq__(self, other):
        if not isinstance(other, GrayImage):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.pixels, other.pixels)

    __hash__ = None
