"""2-D DCT over 8x8 blocks by row-column matrix multiplication.

The forward transform of a block P is C @ P @ C.T with an orthonormal basis
matrix C, so the inverse is simply C.T @ D @ C: no division, no scaling
pass. A direct double-summation form (dct_forward_direct) computes the same
coefficients without matrices and serves as a slow cross-check in tests.
"""

import math

import numpy as np

BLOCK = 8


def build_dct_matrix(size: int = BLOCK) -> np.ndarray:
    """Orthonormal DCT-II basis matrix.

    Row 0 is the constant basis sqrt(1/size); row u holds
    sqrt(2/size) * cos((2*v + 1) * u * pi / (2*size)). The sqrt(1/size)
    first row (not sqrt(2/size)) is what makes C @ C.T the identity, so
    the transpose is an exact inverse.

    Only 8x8 blocks are supported; any other size raises ValueError.
    """
    if size != BLOCK:
        raise ValueError(f"only {BLOCK}x{BLOCK} blocks are supported, got size={size}")
    u = np.arange(size).reshape(-1, 1)
    v = np.arange(size).reshape(1, -1)
    matrix = np.sqrt(2.0 / size) * np.cos((2 * v + 1) * u * np.pi / (2 * size))
    matrix[0, :] = np.sqrt(1.0 / size)
    return matrix


DCT_MATRIX = build_dct_matrix(BLOCK)


def dct_forward(block) -> np.ndarray:
    """Transform an 8x8 spatial block into an 8x8 coefficient block."""
    block = np.asarray(block, dtype=np.float64)
    return DCT_MATRIX @ block @ DCT_MATRIX.T


def dct_inverse(coeffs) -> np.ndarray:
    """Transform an 8x8 coefficient block back into the spatial block."""
    coeffs = np.asarray(coeffs, dtype=np.float64)
    return DCT_MATRIX.T @ coeffs @ DCT_MATRIX


def _alpha(k: int) -> float:
    return math.sqrt(1.0 / BLOCK) if k == 0 else 0.5


def dct_forward_direct(block) -> np.ndarray:
    """Evaluate the DCT as its defining double summation. O(n^4), test use.

    coeff(u, v) = a(u) * a(v) * sum over x, y of
        P(x, y) * cos((2x+1) u pi / 16) * cos((2y+1) v pi / 16)

    with a(0) = sqrt(1/8) and a(k) = 1/2 otherwise. That normalization
    matches the matrix form exactly, so dct_forward and this function agree
    to floating-point error despite sharing no code.
    """
    block = np.asarray(block, dtype=np.float64)
    odd = 2 * np.arange(BLOCK) + 1
    out = np.empty((BLOCK, BLOCK))
    for u in range(BLOCK):
        for v in range(BLOCK):
            basis = np.outer(
                np.cos(odd * u * np.pi / (2 * BLOCK)),
                np.cos(odd * v * np.pi / (2 * BLOCK)),
            )
            out[u, v] = _alpha(u) * _alpha(v) * float(np.sum(block * basis))
    return out
