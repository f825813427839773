"""
Both key shares are needed
==========================

The receiver can hold the key as two share files.  With the right pair
the payload comes back; a key that is wrong in the header region is
rejected instead of producing garbage.
"""

import numpy as np

import lsbxor
from lsbxor.sharing import PixelShares, merge_to_image, split_image

rng = np.random.default_rng(3)
key = lsbxor.GrayImage.from_array(rng.integers(0, 256, (32, 32)))
stego = lsbxor.hide_text(key, "Computer")

shares = split_image(key)
print("share sizes:", shares.share1.size, shares.share2.size)

rebuilt = merge_to_image(shares, key.width, key.height)
print("with both shares:", lsbxor.reveal(rebuilt, stego).text)

attempts = {
    "shares swapped": PixelShares(shares.share2, shares.share1, shares.total_len),
    "share 2 replaced by noise": PixelShares(
        shares.share1, rng.integers(0, 256, shares.share2.size), shares.total_len
    ),
}
for label, bad in attempts.items():
    try:
        lsbxor.reveal(merge_to_image(bad, key.width, key.height), stego)
    except lsbxor.AuthenticationError as e:
        print(f"{label}: rejected ({e})")

# Flip a single LSB inside the frame magic.
px = key.pixels.copy()
px[3] ^= 1
try:
    lsbxor.reveal(lsbxor.GrayImage(key.width, key.height, px), stego)
except lsbxor.AuthenticationError:
    print("one flipped header LSB: rejected")
