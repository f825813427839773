"""
Comparing key and stego histograms
==================================

Measure how much embedding changes an image: changed pixels, the
largest per-pixel change, histogram deltas and PSNR, for growing
payloads on the same key.
"""

import numpy as np

import lsbxor

rng = np.random.default_rng(11)
key = lsbxor.GrayImage.from_array(rng.integers(40, 220, (100, 100)))
msg = rng.integers(0, 2, key.size)

print(" bits  changed  max|d|  hist L1   PSNR dB")
for n in (8, 64, 632, 2500, 10000):
    report = lsbxor.compare(key, lsbxor.embed_bits(key, msg[:n]))
    print(
        f"{n:5d}  {report.changed_pixels:7d}  {report.max_abs_pixel_delta:6d}"
        f"  {report.histogram_l1:7d}  {report.psnr:8.2f}"
    )

# The CSV report feeds any external plotting tool.
report = lsbxor.compare(key, lsbxor.hide_text(key, "Computer"))
csv = report.to_csv()
print("\n".join(csv.splitlines()[:4]), "\n...\n" + "\n".join(csv.splitlines()[-2:]))

try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None
if plt is not None:
    grey = np.arange(256)
    plt.plot(grey, report.histogram_a, "-", label="key")
    plt.plot(grey, report.histogram_b, "--", label="stego")
    plt.xlabel("grey value")
    plt.ylabel("pixels")
    plt.legend()
    plt.savefig("histograms.png")
    print("wrote histograms.png")
