"""Share-based LSB-XOR steganography for 8-bit grayscale images."""
from .analysis import DiffReport, compare, histogram, psnr
from .bitcodec import (
    BitStream,
    bits_to_bytes,
    byte_to_reversed_bits,
    bytes_to_bits,
    interleave,
    reversed_bits_to_byte,
    split_odd_even,
)
from .errors import *  # noqa: F401,F403
from .image import GrayImage
from .payload import (
    PayloadFrame,
    frame_image,
    frame_text,
    header_peek_length,
    hide_image,
    hide_text,
    parse_frame,
    reveal,
)
from .pgm import read_pgm, write_pgm
from .sharing import PixelShares, merge_shares, split_image
from .stego import capacity_bits, embed_bits, embed_bits_direct, extract_bits

__version__ = "0.1.0"
