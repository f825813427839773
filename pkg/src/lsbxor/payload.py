"""Self-describing frames for text and image secrets.

Wire layout (all integers big-endian)::

    magic  2 bytes   0x53 0x4D ("SM")
    kind   1 byte    1 = text, 2 = image
    length 4 bytes   number of body bytes
    body   length bytes; image bodies are width(2) height(2) then pixels

The frame is embedded as one contiguous bit stream, header first, so the
receiver can read the 56 header bits, learn the total length and then
extract the rest.
"""
from __future__ import annotations

import struct
from dataclasses import dataclass

import numpy as np

from .bitcodec import bits_to_bytes, bytes_to_bits
from .errors import (
    AuthenticationError,
    CapacityError,
    TruncatedFrameError,
    UnknownKindError,
    UnsupportedDimensionsError,
)
from .image import GrayImage
from .stego import capacity_bits, embed_bits, extract_bits

MAGIC = b"SM"
KIND_TEXT = 1
KIND_IMAGE = 2

_HEADER = struct.Struct(">2sBI")
_DIMS = struct.Struct(">HH")
HEADER_SIZE = _HEADER.size
HEADER_BITS = 8 * HEADER_SIZE


@dataclass(frozen=True)
class PayloadFrame:
    kind: int
    body: bytes

    magic = MAGIC

    @property
    def length(self) -> int:
        return len(self.body)

    @property
    def text(self) -> bytes:
        if self.kind != KIND_TEXT:
            raise TypeError("frame does not carry text")
        return self.body

    @property
    def image(self) -> GrayImage:
        if self.kind != KIND_IMAGE:
            raise TypeError("frame does not carry an image")
        w, h = _DIMS.unpack_from(self.body)
        return GrayImage(w, h, np.frombuffer(self.body, dtype=np.uint8, offset=_DIMS.size))

    def to_bytes(self) -> bytes:
        return _HEADER.pack(MAGIC, self.kind, len(self.body)) + self.body


def frame_text(text: bytes | str) -> bytes:
    if isinstance(text, str):
        text = text.encode("utf-8")
    return PayloadFrame(KIND_TEXT, bytes(text)).to_bytes()


def frame_image(img: GrayImage) -> bytes:
    if img.width >= 1 << 16 or img.height >= 1 << 16:
        raise UnsupportedDimensionsError(
            f"{img.width}x{img.height} image does not fit 16-bit dimension fields"
        )
    body = _DIMS.pack(img.width, img.height) + img.pixels.tobytes()
    return PayloadFrame(KIND_IMAGE, body).to_bytes()


def _parse_header(data: bytes) -> tuple[int, int]:
    if len(data) >= 2 and data[:2] != MAGIC:
        raise AuthenticationError(
            f"bad frame magic {data[:2].hex()}: wrong key image or not a stego image"
        )
    if len(data) < HEADER_SIZE:
        raise TruncatedFrameError(f"frame header needs {HEADER_SIZE} bytes, got {len(data)}")
    _, kind, length = _HEADER.unpack_from(data)
    if kind not in (KIND_TEXT, KIND_IMAGE):
        raise UnknownKindError(f"unknown payload kind {kind}")
    return kind, length


def parse_frame(data: bytes) -> PayloadFrame:
    data = bytes(data)
    kind, length = _parse_header(data)
    body = data[HEADER_SIZE:]
    if len(body) < length:
        raise TruncatedFrameError(f"frame declares {length} body bytes, got {len(body)}")
    if len(body) > length:
        raise TruncatedFrameError(
            f"frame declares {length} body bytes but {len(body)} follow the header"
        )
    if kind == KIND_IMAGE:
        if length < _DIMS.size:
            raise TruncatedFrameError("image frame is missing its dimensions")
        w, h = _DIMS.unpack_from(body)
        if w == 0 or h == 0 or length != _DIMS.size + w * h:
            raise UnsupportedDimensionsError(
                f"image frame of {length} bytes is inconsistent with {w}x{h} pixels"
            )
    return PayloadFrame(kind, body)


def header_peek_length(key: GrayImage, stego: GrayImage) -> int:
    """Read just the header and return the whole frame's size in bits."""
    if capacity_bits(key) < HEADER_BITS:
        raise CapacityError(HEADER_BITS, capacity_bits(key))
    header = bits_to_bytes(extract_bits(key, stego, HEADER_BITS))
    _, length = _parse_header(header)
    return 8 * (HEADER_SIZE + length)


def embed_frame(key: GrayImage, frame: bytes) -> GrayImage:
    return embed_bits(key, bytes_to_bits(frame))


def hide_text(key: GrayImage, text: bytes | str) -> GrayImage:
    return embed_frame(key, frame_text(text))


def hide_image(key: GrayImage, secret: GrayImage) -> GrayImage:
    return embed_frame(key, frame_image(secret))


def reveal(key: GrayImage, stego: GrayImage) -> PayloadFrame:
    """Detect and decode a framed payload."""
    nbits = header_peek_length(key, stego)
    if nbits > capacity_bits(key):
        # a header this long cannot have been embedded in this carrier
        raise AuthenticationError(
            f"header claims {nbits} bits in a {capacity_bits(key)}-bit carrier: "
            "wrong key image or not a stego image"
        )
    return parse_frame(bits_to_bytes(extract_bits(key, stego, nbits)))
