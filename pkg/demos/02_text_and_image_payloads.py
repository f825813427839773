"""
Framed text and image payloads
==============================

Hide the four secrets used in the original evaluation (three strings
and a small logo) in a 100x100 key, then recover them without knowing
their length in advance.  Stego images are written as PGM files.
"""

import sys
from pathlib import Path

import numpy as np

import lsbxor
from lsbxor import pgm

out_dir = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
out_dir.mkdir(exist_ok=True)

# A smooth synthetic key with some texture.
rng = np.random.default_rng(4)
y, x = np.mgrid[0:100, 0:100]
key = lsbxor.GrayImage.from_array(
    np.clip(80 + x + 0.5 * y + rng.normal(0, 6, (100, 100)), 0, 255).astype(np.uint8)
)
pgm.save(key, out_dir / "key.pgm")

texts = [
    "I",
    "Computer",
    "Department of Computer Science and Engineering - University of Kalyani",
]
for i, text in enumerate(texts):
    stego = lsbxor.hide_text(key, text)
    pgm.save(stego, out_dir / f"stego_text{i}.pgm")
    frame = lsbxor.reveal(key, stego)
    bits = lsbxor.header_peek_length(key, stego)
    print(f"{bits:4d} of {lsbxor.capacity_bits(key)} bits -> {frame.text.decode()!r}")

# 10x10 checkerboard "logo"
logo = lsbxor.GrayImage.from_array(255 * (np.indices((10, 10)).sum(axis=0) % 2))
stego = lsbxor.hide_image(key, logo)
pgm.save(stego, out_dir / "stego_logo.pgm")
recovered = lsbxor.reveal(key, stego).image
print("logo recovered intact:", recovered == logo)
print(recovered.to_array())
