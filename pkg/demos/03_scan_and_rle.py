"""From a quantized block to a short symbol list: zigzag scan plus RLE.

Quantization leaves nonzero levels huddled in the top-left corner of each
block. Reading the block along anti-diagonals strings those together and
pushes the zeros into long runs; run-length coding then folds every run
into a (0, count) pair. This script walks one block through both steps.

Run:  python3 demos/03_scan_and_rle.py
"""

import numpy as np

from blockdct import (
    ZIGZAG_ORDER,
    dct_forward,
    inverse_zigzag,
    level_shift_forward,
    quant_matrix,
    quantize,
    rle_decode,
    rle_encode,
    zigzag,
)


def main():
    print("Scan order (each cell is its position in the output vector):")
    position = np.empty(64, dtype=int)
    position[ZIGZAG_ORDER] = np.arange(64)
    for row in position.reshape(8, 8):
        print(" ".join(f"{v:3d}" for v in row))

    # A soft diagonal edge, quantized at the default quality.
    x = np.arange(8)
    samples = np.clip(128 + 14 * (x[None, :] - x[:, None]), 0, 255).astype(np.uint8)
    levels = quantize(dct_forward(level_shift_forward(samples)), quant_matrix(50))
    print("\nQuantized levels of a soft-edge block:")
    for row in levels:
        print(" ".join(f"{v:4d}" for v in row))

    vector = zigzag(levels)
    print(f"\nZigzag vector ({np.count_nonzero(vector)} nonzero of 64):")
    print(vector.tolist())

    symbols = rle_encode(vector)
    print(f"\nRLE symbols ({len(symbols)} instead of 64):")
    print(symbols)
    print("Every 0 announces a run; the next symbol is the run length.")

    # And back again, losslessly.
    recovered = inverse_zigzag(np.array(rle_decode(symbols)))
    print("\nScan + RLE round-trip exact:", bool(np.array_equal(recovered, levels)))

    # The scheme is honest about its one weakness: isolated zeros cost a pair.
    tricky = [1, 0, 1, 0, 1]
    print(f"\nIsolated zeros are the worst case: {tricky} -> {rle_encode(tricky)}")
    print("Real quantized blocks end in long zero tails, where the pairs win big:")
    tail = [9, 4, 1] + [0] * 61
    print(f"  3 nonzeros + 61-zero tail -> {rle_encode(tail)}")


if __name__ == "__main__":
    main()
