"""Size and fidelity measures for one compression cycle."""

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class CompressionReport:
    """Byte counts plus the derived ratio and quality numbers for one image."""

    quality: int
    original_bytes: int
    compressed_bytes: int
    compression_ratio: float
    redundancy: float
    mse: float
    psnr: float

    @property
    def reduction_percent(self) -> float:
        return 100.0 * self.redundancy


def compression_ratio(original_bytes, compressed_bytes) -> float:
    """Original size over compressed size."""
    if original_bytes < 1 or compressed_bytes < 1:
        raise ValueError(
            f"byte counts must be positive, got {original_bytes} and {compressed_bytes}"
        )
    return original_bytes / compressed_bytes


def redundancy(ratio) -> float:
    """Fraction of the original data the compressed form did not need.

    1 - 1/ratio: 0.0 at ratio 1 (nothing saved), approaching 1.0 as the
    ratio grows.
    """
    if ratio <= 0:
        raise ValueError(f"compression ratio must be positive, got {ratio}")
    return 1.0 - 1.0 / ratio


def mse_psnr(original, reconstructed) -> tuple:
    """Mean squared error and peak signal-to-noise ratio against peak 255.

    Computed in float64 over every sample of every channel. Identical
    images return (0.0, math.inf); PSNR has no finite value there.
    """
    a = np.asarray(original, dtype=np.float64)
    b = np.asarray(reconstructed, dtype=np.float64)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    if a.size == 0:
        raise ValueError("images must be nonempty")
    mse = float(np.mean((a - b) ** 2))
    if mse == 0.0:
        return 0.0, math.inf
    return mse, 10.0 * math.log10(255.0**2 / mse)
