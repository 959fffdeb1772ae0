"""A walk through the 8x8 DCT: the basis matrix, its inverse, and why it helps.

The codec never transforms anything larger than an 8x8 block. This script
builds the transform matrix, shows that its transpose undoes it exactly, and
demonstrates the property the whole codec leans on: smooth image content
lands almost entirely in a handful of low-frequency coefficients.

Run:  python3 demos/01_transform.py
"""

import numpy as np

from blockdct import build_dct_matrix, dct_forward, dct_inverse


def show(title, array, fmt="{:8.3f}"):
    print(f"\n{title}")
    for row in np.atleast_2d(array):
        print(" ".join(fmt.format(v) for v in row))


def main():
    matrix = build_dct_matrix(8)
    show("The orthonormal DCT basis matrix C:", matrix, "{:7.4f}")

    gram = matrix @ matrix.T
    print(f"\nmax |C C^T - I| = {np.abs(gram - np.eye(8)).max():.2e}")
    print("The rows are orthonormal, so C.T is an exact inverse: the")
    print("transform loses nothing by itself.")

    # A smooth ramp, the kind of content photographs are full of.
    x = np.arange(8)
    ramp = np.add.outer(x, x) * 8.0 - 56.0
    show("A smooth (level-shifted) ramp block:", ramp, "{:7.1f}")

    coeffs = dct_forward(ramp)
    show("Its DCT coefficients:", coeffs, "{:7.1f}")
    energy = coeffs**2
    top_left = energy[:2, :2].sum() / energy.sum()
    print(f"\nFraction of energy in the 2x2 low-frequency corner: {top_left:.4%}")

    restored = dct_inverse(coeffs)
    print(f"max |inverse(forward(block)) - block| = {np.abs(restored - ramp).max():.2e}")

    # Noise has no such structure: its energy stays spread out.
    rng = np.random.default_rng(1)
    noise = rng.uniform(-128, 127, size=(8, 8))
    noise_energy = dct_forward(noise) ** 2
    spread = noise_energy[:2, :2].sum() / noise_energy.sum()
    print(f"\nSame measurement for a noise block: {spread:.4%}")
    print("Smooth content compacts; noise does not. Quantization exploits that.")


if __name__ == "__main__":
    main()
