"""Zigzag scan order for 8x8 blocks.

Quantization leaves the surviving coefficients clustered in the upper left
corner of each block. Scanning anti-diagonals from that corner front-loads
them, so the zeros pool into long runs at the tail of the vector where run
length coding is cheapest.
"""

import numpy as np

from .errors import CorruptStreamError

# Flat row-major indices in scan order: (0,0), (0,1), (1,0), (2,0), (1,1),
# (0,2), ... walking each anti-diagonal in alternating directions.
ZIGZAG_ORDER = np.array(
    [
        0, 1, 8, 16, 9, 2, 3, 10,
        17, 24, 32, 25, 18, 11, 4, 5,
        12, 19, 26, 33, 40, 48, 41, 34,
        27, 20, 13, 6, 7, 14, 21, 28,
        35, 42, 49, 56, 57, 50, 43, 36,
        29, 22, 15, 23, 30, 37, 44, 51,
        58, 59, 52, 45, 38, 31, 39, 46,
        53, 60, 61, 54, 47, 55, 62, 63,
    ]
)

_INVERSE_ORDER = np.argsort(ZIGZAG_ORDER)


def zigzag(block) -> np.ndarray:
    """Flatten an 8x8 block into 64 values in zigzag scan order."""
    block = np.asarray(block)
    if block.shape != (8, 8):
        raise ValueError(f"expected an 8x8 block, got shape {block.shape}")
    return block.reshape(64)[ZIGZAG_ORDER]


def inverse_zigzag(values) -> np.ndarray:
    """Rebuild the 8x8 block from its 64-value zigzag vector."""
    values = np.asarray(values)
    if values.shape != (64,):
        raise CorruptStreamError(
            f"zigzag vector must hold exactly 64 values, got shape {values.shape}"
        )
    return values[_INVERSE_ORDER].reshape(8, 8)
