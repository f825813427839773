"""
Hiding the letter "I" in ten key pixels
=======================================

Step through the scheme by hand on the first ten pixels of a key image,
printing every intermediate value.
"""

import numpy as np

import lsbxor
from lsbxor.sharing import split_image
from lsbxor.stego import detect_shares, replace_lsbs, xor_lsbs

key = lsbxor.GrayImage(10, 1, [162, 161, 158, 156, 156, 153, 154, 161, 168, 173])

# The key is split into two shares by odd and even pixel position.
shares = split_image(key)
print("share 1:", shares.share1, [format(v, "08b") for v in shares.share1])
print("share 2:", shares.share2, [format(v, "08b") for v in shares.share2])

# 'I' is 73 = 01001001; its bits are taken least significant first, then
# split into the odd-position and even-position halves.
msg = lsbxor.byte_to_reversed_bits(ord("I"))
msg1, msg2 = lsbxor.split_odd_even(msg)
print("\nmessage bits:", msg, " odd half:", msg1, " even half:", msg2)

# Each half is XORed with the LSBs of its share and written back as the new LSB.
i1 = xor_lsbs(shares.share1, msg1)
i2 = xor_lsbs(shares.share2, msg2)
print("key LSBs 1:", shares.share1[:4] & 1, "xor ->", i1)
print("key LSBs 2:", shares.share2[:4] & 1, "xor ->", i2)
print("stego share 1:", replace_lsbs(shares.share1, i1))
print("stego share 2:", replace_lsbs(shares.share2, i2))

stego = lsbxor.embed_bits(key, msg)
print("\nkey  :", key.pixels)
print("stego:", stego.pixels)
print("delta:", stego.pixels.astype(int) - key.pixels.astype(int))

# Detection repeats the split on the stego image and XORs the LSBs again.
m1, m2 = detect_shares(split_image(key), split_image(stego), 8)
bits = lsbxor.interleave(m1, m2)
byte = lsbxor.reversed_bits_to_byte(bits)
print(f"\nrecovered bits {bits} -> {byte} -> {chr(byte)!r}")
assert np.array_equal(bits, msg)
