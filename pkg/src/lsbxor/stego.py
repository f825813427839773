"""LSB-XOR embedding and detection through the odd/even share pipeline.

The message stream is split into odd and even bits, each half is XORed
into the LSBs of the matching key share, and the shares are merged back.
Every other pixel is copied unchanged.  Composed end to end, stream bit
``k`` lands in pixel ``k``: ``stego_lsb[k] = key_lsb[k] ^ msg[k]``.
"""
from __future__ import annotations

import numpy as np

from .bitcodec import BitStream, as_bits, interleave, split_odd_even
from .errors import CapacityError, ShareMismatchError
from .image import GrayImage
from .sharing import PixelShares, merge_shares, split_image


def capacity_bits(img: GrayImage) -> int:
    return img.width * img.height


def lsbs(values) -> BitStream:
    return np.asarray(values, dtype=np.uint8) & 1


def xor_lsbs(share, bits) -> BitStream:
    """XOR ``bits`` with the LSBs of the leading ``len(bits)`` share pixels."""
    bits = as_bits(bits)
    return lsbs(share[: bits.size]) ^ bits


def replace_lsbs(share, new_lsbs) -> np.ndarray:
    """Overwrite the LSBs of the leading share pixels; the rest are copied."""
    new_lsbs = as_bits(new_lsbs)
    out = np.array(share, dtype=np.uint8)
    n = new_lsbs.size
    out[:n] = (out[:n] & 0xFE) | new_lsbs
    return out


def embed_shares(key_shares: PixelShares, msg) -> PixelShares:
    msg1, msg2 = split_odd_even(msg)
    if msg1.size > key_shares.share1.size or msg2.size > key_shares.share2.size:
        raise CapacityError(msg1.size + msg2.size, key_shares.total_len)
    out1 = replace_lsbs(key_shares.share1, xor_lsbs(key_shares.share1, msg1))
    out2 = replace_lsbs(key_shares.share2, xor_lsbs(key_shares.share2, msg2))
    return PixelShares(out1, out2, key_shares.total_len)


def embed_bits(key: GrayImage, msg) -> GrayImage:
    msg = as_bits(msg)
    if msg.size > capacity_bits(key):
        raise CapacityError(msg.size, capacity_bits(key))
    stego_shares = embed_shares(split_image(key), msg)
    return GrayImage(key.width, key.height, merge_shares(stego_shares))


def embed_bits_direct(key: GrayImage, msg) -> GrayImage:
    """Per-pixel form of :func:`embed_bits`, without the share detour."""
    msg = as_bits(msg)
    if msg.size > capacity_bits(key):
        raise CapacityError(msg.size, capacity_bits(key))
    new_lsbs = lsbs(key.pixels[: msg.size]) ^ msg
    return GrayImage(key.width, key.height, replace_lsbs(key.pixels, new_lsbs))


def detect_shares(key_shares: PixelShares, stego_shares: PixelShares, nbits: int):
    """Recover the odd and even halves of the first ``nbits`` message bits."""
    if key_shares.total_len != stego_shares.total_len:
        raise ShareMismatchError(
            f"key shares cover {key_shares.total_len} pixels, "
            f"stego shares {stego_shares.total_len}"
        )
    if nbits < 0:
        raise ValueError("nbits must be non-negative")
    if nbits > key_shares.total_len:
        raise CapacityError(nbits, key_shares.total_len)
    n1, n2 = (nbits + 1) // 2, nbits // 2
    m1 = lsbs(key_shares.share1[:n1]) ^ lsbs(stego_shares.share1[:n1])
    m2 = lsbs(key_shares.share2[:n2]) ^ lsbs(stego_shares.share2[:n2])
    return m1, m2


def extract_bits(key: GrayImage, stego: GrayImage, nbits: int) -> BitStream:
    if key.shape != stego.shape:
        raise ShareMismatchError(
            f"key is {key.width}x{key.height} but stego is {stego.width}x{stego.height}"
        )
    m1, m2 = detect_shares(split_image(key), split_image(stego), nbits)
    return interleave(m1, m2)
