"""Reversed-bit byte codec and odd/even bit partitioning.

Bits are held in 1-D ``uint8`` arrays of zeros and ones.  Each byte is
written least-significant bit first, so ``73 = 0b01001001`` becomes
``[1, 0, 0, 1, 0, 0, 1, 0]``.  Multi-byte messages are the concatenation
of their bytes' reversed bits in message order.
"""
from __future__ import annotations

from typing import Iterable

import numpy as np
import numpy.typing as npt

from .errors import MalformedBlockError, MalformedSharesError

BitStream = npt.NDArray[np.uint8]


def as_bits(bits: Iterable[int] | np.ndarray) -> BitStream:
    """Coerce a sequence of 0/1 values to a ``BitStream``."""
    arr = np.asarray(list(bits) if not isinstance(bits, np.ndarray) else bits)
    if arr.size == 0:
        return np.zeros(0, dtype=np.uint8)
    if arr.ndim != 1:
        raise ValueError("bit stream must be one-dimensional")
    if not np.isin(arr, (0, 1)).all():
        raise ValueError("bit stream may only contain 0 and 1")
    return arr.astype(np.uint8)


def byte_to_reversed_bits(b: int) -> BitStream:
    if not 0 <= b <= 255:
        raise ValueError(f"byte value out of range: {b}")
    return np.unpackbits(np.array([b], dtype=np.uint8), bitorder="little")


def reversed_bits_to_byte(s) -> int:
    s = as_bits(s)
    if s.size != 8:
        raise MalformedBlockError(f"expected an 8-bit block, got {s.size} bits")
    return int(np.packbits(s, bitorder="little")[0])


def bytes_to_bits(data: bytes) -> BitStream:
    return np.unpackbits(np.frombuffer(bytes(data), dtype=np.uint8), bitorder="little")


def bits_to_bytes(bits) -> bytes:
    """Slice a stream into 8-bit blocks and decode each one."""
    bits = as_bits(bits)
    if bits.size % 8:
        raise MalformedBlockError(
            f"bit stream length {bits.size} is not a whole number of bytes"
        )
    return np.packbits(bits, bitorder="little").tobytes()


def split_odd_even(s) -> tuple[BitStream, BitStream]:
    """Return (bits at 1-based odd positions, bits at 1-based even positions)."""
    s = as_bits(s)
    return s[0::2].copy(), s[1::2].copy()


def interleave(odd, even) -> BitStream:
    odd, even = as_bits(odd), as_bits(even)
    if odd.size - even.size not in (0, 1):
        raise MalformedSharesError(
            f"cannot interleave {odd.size} odd bits with {even.size} even bits"
        )
    out = np.empty(odd.size + even.size, dtype=np.uint8)
    out[0::2] = odd
    out[1::2] = even
    return out
