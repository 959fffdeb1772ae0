"""Quality levels, divisor tables, and the one place the codec loses data.

Every coefficient is divided by a table entry and rounded. The table is the
quality-50 baseline scaled up or down; this script prints the tables at a
few levels, checks the error bound rounding guarantees, and shows what each
quality does to an actual coefficient block.

Run:  python3 demos/02_quantization.py
"""

import numpy as np

from blockdct import Q50, dct_forward, dequantize, quant_matrix, quantize


def show(title, array, fmt="{:5d}"):
    print(f"\n{title}")
    for row in np.atleast_2d(array):
        print(" ".join(fmt.format(int(v)) for v in row))


def main():
    show("Baseline divisors (quality 50):", Q50)
    show("Quality 90 (divisors shrink, more detail survives):", quant_matrix(90))
    show("Quality 10 (divisors grow, blocks get crushed):", quant_matrix(10))
    print("\nQuality 100 divides by", set(quant_matrix(100).ravel().tolist()),
          "- barely lossy (rounding only).")
    print("Quality 25 doubles the baseline:",
          bool((quant_matrix(25) == 2 * Q50).all()))

    # Quantize a real coefficient block at several qualities.
    x = np.arange(8)
    block = 60.0 * np.cos(np.add.outer(x, x) / 3.0)  # smooth, mid-contrast
    coeffs = dct_forward(block)
    print("\nSurviving (nonzero) coefficients out of 64, by quality:")
    for quality in (10, 25, 50, 75, 90, 100):
        divisors = quant_matrix(quality)
        levels = quantize(coeffs, divisors)
        survivors = int(np.count_nonzero(levels))
        error = np.abs(dequantize(levels, divisors) - coeffs).max()
        print(f"  quality {quality:3d}: {survivors:2d} nonzero, "
              f"max coefficient error {error:6.2f}")

    # The guarantee quantization rounds by: never off by more than half a divisor.
    rng = np.random.default_rng(2)
    coeffs = rng.uniform(-1024, 1024, size=(8, 8))
    for quality in (1, 50, 100):
        divisors = quant_matrix(quality)
        error = np.abs(dequantize(quantize(coeffs, divisors), divisors) - coeffs)
        assert (error <= divisors / 2 + 1e-9).all()
    print("\nChecked: |dequantize(quantize(c)) - c| <= divisor/2 at every entry.")


if __name__ == "__main__":
    main()
