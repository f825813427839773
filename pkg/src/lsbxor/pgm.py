"""PGM (portable graymap) reader and canonical writer, P2 and P5, maxval 255."""
from __future__ import annotations

import re
from pathlib import Path

import numpy as np

from .errors import (
    MalformedSampleError,
    TruncatedImageError,
    UnsupportedDepthError,
    UnsupportedFormatError,
)
from .image import GrayImage

_WS = b" \t\r\n\v\f"
_TOKEN = re.compile(rb"\S+")


def _header_tokens(data: bytes, count: int) -> tuple[list[bytes], int]:
    """Read ``count`` whitespace-separated header tokens, skipping comments.

    Returns the tokens and the offset just past the last one.
    """
    tokens = []
    pos = 0
    while len(tokens) < count:
        while pos < len(data) and data[pos] in _WS:
            pos += 1
        if pos >= len(data):
            raise TruncatedImageError("file ends inside the PGM header")
        if data[pos] == ord("#"):
            nl = data.find(b"\n", pos)
            pos = len(data) if nl < 0 else nl + 1
            continue
        m = _TOKEN.match(data, pos)
        tok = m.group()
        if b"#" in tok:
            tok = tok[: tok.index(b"#")]
            pos += len(tok)
        else:
            pos = m.end()
        tokens.append(tok)
    return tokens, pos


def _dimension(tok: bytes, what: str) -> int:
    if not tok.isdigit():
        raise UnsupportedFormatError(f"bad PGM {what}: {tok!r}")
    return int(tok)


def read_pgm(data: bytes) -> GrayImage:
    data = bytes(data)
    if data[:2] not in (b"P2", b"P5"):
        raise UnsupportedFormatError(f"not a P2/P5 graymap (magic {data[:2]!r})")
    if len(data) > 2 and data[2] not in _WS and data[2] != ord("#"):
        raise UnsupportedFormatError(f"not a P2/P5 graymap (magic {data[:3]!r})")
    (magic, w, h, maxval), pos = _header_tokens(data, 4)
    width = _dimension(w, "width")
    height = _dimension(h, "height")
    if width < 1 or height < 1:
        raise UnsupportedFormatError(f"empty image {width}x{height}")
    if not maxval.isdigit() or int(maxval) != 255:
        raise UnsupportedDepthError(f"only maxval 255 is supported, got {maxval!r}")
    n = width * height

    if magic == b"P5":
        # exactly one whitespace byte separates the header from the raster
        if pos >= len(data) or data[pos] not in _WS:
            raise TruncatedImageError("missing raster after P5 header")
        raster = data[pos + 1 :]
        if len(raster) != n:
            raise TruncatedImageError(f"expected {n} pixel bytes, found {len(raster)}")
        pixels = np.frombuffer(raster, dtype=np.uint8)
    else:
        body = re.sub(rb"#[^\n]*", b"", data[pos:])
        samples = body.split()
        if len(samples) != n:
            raise TruncatedImageError(f"expected {n} samples, found {len(samples)}")
        values = []
        for s in samples:
            if not s.isdigit():
                raise MalformedSampleError(f"malformed P2 sample {s!r}")
            values.append(int(s))
        pixels = np.array(values, dtype=np.int64)
        if pixels.max() > 255:
            raise MalformedSampleError(f"sample {pixels.max()} exceeds maxval 255")
    return GrayImage(width, height, pixels)


def write_pgm(img: GrayImage, variant: str = "P5") -> bytes:
    header = f"{variant}\n{img.width} {img.height}\n255\n".encode("ascii")
    if variant == "P5":
        return header + img.pixels.tobytes()
    if variant == "P2":
        rows = img.pixels.reshape(img.height, img.width)
        body = "".join(" ".join(map(str, row.tolist())) + "\n" for row in rows)
        return header + body.encode("ascii")
    raise ValueError(f"unknown PGM variant {variant!r}")


def load(path) -> GrayImage:
    return read_pgm(Path(path).read_bytes())


def save(img: GrayImage, path, variant: str = "P5") -> None:
    Path(path).write_bytes(write_pgm(img, variant))
