"""Divisor tables and scalar quantization, the codec's only lossy stage."""

import numpy as np

from .blocks import round_half_away

# Baseline divisor table for quality 50. Low frequencies (upper left) get
# small divisors and survive; high frequencies are divided nearly to zero.
Q50 = np.array(
    [
        [16, 11, 10, 16, 24, 40, 51, 61],
        [12, 12, 14, 19, 26, 58, 60, 55],
        [14, 13, 16, 24, 40, 57, 69, 56],
        [14, 17, 22, 29, 51, 87, 80, 62],
        [18, 22, 37, 56, 68, 109, 103, 77],
        [24, 35, 55, 64, 81, 104, 113, 92],
        [49, 64, 78, 87, 103, 121, 120, 101],
        [72, 92, 95, 98, 112, 100, 103, 99],
    ],
    dtype=np.int64,
)

# Quantized levels are stored as signed 16-bit symbols downstream.
LEVEL_LIMIT = 32767


def quant_matrix(quality) -> np.ndarray:
    """Divisor table for a quality level in [1, 100].

    Quality 50 returns Q50 unchanged. Above 50 the table is scaled by
    (100 - quality) / 50, below 50 by 50 / quality; scaled entries are
    rounded half away from zero and clamped to at least 1, so quality 100
    divides by all ones instead of zeros.
    """
    if isinstance(quality, bool) or not isinstance(quality, (int, np.integer)):
        raise ValueError(f"quality must be an integer, got {quality!r}")
    if not 1 <= quality <= 100:
        raise ValueError(f"quality must be in [1, 100], got {quality}")
    if quality >= 50:
        scale = (100 - quality) / 50.0
    else:
        scale = 50.0 / quality
    divisors = round_half_away(Q50 * scale).astype(np.int64)
    return np.maximum(divisors, 1)


def quantize(coeffs, divisors) -> np.ndarray:
    """Divide coefficients by their divisors and round half away from zero.

    Raises OverflowError if any level falls outside the signed 16-bit
    range; with samples in [0, 255] and divisors >= 1 the largest possible
    coefficient magnitude is 1024, so this cannot happen in the pipeline.
    """
    coeffs = np.asarray(coeffs, dtype=np.float64)
    divisors = np.asarray(divisors, dtype=np.float64)
    levels = round_half_away(coeffs / divisors).astype(np.int64)
    if levels.size and np.abs(levels).max() > LEVEL_LIMIT:
        raise OverflowError("quantized level exceeds the signed 16-bit range")
    return levels


def dequantize(levels, divisors) -> np.ndarray:
    """Multiply levels back by their divisors, recovering coefficients."""
    levels = np.asarray(levels, dtype=np.float64)
    divisors = np.asarray(divisors, dtype=np.float64)
    return levels * divisors
