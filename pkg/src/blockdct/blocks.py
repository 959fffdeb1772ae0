"""8x8 tiling of image planes and the level shift that centers samples at zero.

A plane is a 2-D uint8 array (height, width). Tiling pads it to multiples of
8 by edge replication and yields blocks as an (n, 8, 8) array in row-major
block order, so every downstream stage sees one flat, deterministic sequence.
"""

from dataclasses import dataclass

import numpy as np

from .errors import CorruptStreamError

BLOCK = 8
LEVEL_OFFSET = 128


def round_half_away(values):
    """Round to the nearest integer with ties going away from zero.

    Every rounding site in the pipeline uses this rule so the encoder and
    decoder agree bit for bit; numpy's round() breaks ties toward even and
    would not (round_half_away(-2.5) is -3.0, np.round(-2.5) is -2.0).

    Computed from the exact fractional part rather than by adding 0.5,
    which would misround values one ulp below a half.
    """
    values = np.asarray(values, dtype=np.float64)
    whole = np.trunc(values)
    frac = values - whole
    return whole + np.where(np.abs(frac) >= 0.5, np.sign(frac), 0.0)


@dataclass(frozen=True)
class TileGrid:
    """Original plane dimensions, kept so untiling can crop the padding."""

    width: int
    height: int

    @property
    def blocks_wide(self) -> int:
        return -(-self.width // BLOCK)

    @property
    def blocks_high(self) -> int:
        return -(-self.height // BLOCK)

    @property
    def block_count(self) -> int:
        return self.blocks_wide * self.blocks_high


def tile_plane(plane):
    """Split a plane into 8x8 blocks, padding the far edges by replication.

    Args:
        plane: (height, width) array of samples in [0, 255], height and
            width at least 1.

    Returns:
        (blocks, grid) where blocks is (block_count, 8, 8) uint8 in
        row-major block order and grid is the TileGrid needed to untile.
    """
    plane = np.asarray(plane)
    if plane.ndim != 2:
        raise ValueError(f"plane must be 2-D, got shape {plane.shape}")
    height, width = plane.shape
    if height < 1 or width < 1:
        raise ValueError(f"plane must be at least 1x1, got {height}x{width}")
    if plane.dtype != np.uint8:
        if not np.issubdtype(plane.dtype, np.integer):
            raise ValueError(f"samples must be integers, got dtype {plane.dtype}")
        if plane.min() < 0 or plane.max() > 255:
            raise ValueError("samples must lie in [0, 255]")
        plane = plane.astype(np.uint8)

    grid = TileGrid(width=width, height=height)
    pad_h = grid.blocks_high * BLOCK - height
    pad_w = grid.blocks_wide * BLOCK - width
    padded = np.pad(plane, ((0, pad_h), (0, pad_w)), mode="edge")
    blocks = (
        padded.reshape(grid.blocks_high, BLOCK, grid.blocks_wide, BLOCK)
        .swapaxes(1, 2)
        .reshape(-1, BLOCK, BLOCK)
    )
    return np.ascontiguousarray(blocks), grid


def untile_plane(blocks, grid: TileGrid):
    """Reassemble tile_plane output and crop back to the original size."""
    blocks = np.asarray(blocks)
    expected = (grid.block_count, BLOCK, BLOCK)
    if blocks.shape != expected:
        raise CorruptStreamError(
            f"expected blocks of shape {expected}, got {blocks.shape}"
        )
    padded = (
        blocks.reshape(grid.blocks_high, grid.blocks_wide, BLOCK, BLOCK)
        .swapaxes(1, 2)
        .reshape(grid.blocks_high * BLOCK, grid.blocks_wide * BLOCK)
    )
    return np.ascontiguousarray(padded[: grid.height, : grid.width])


def level_shift_forward(samples):
    """Center uint8 samples at zero: subtract 128, as float64."""
    samples = np.asarray(samples)
    return samples.astype(np.float64) - LEVEL_OFFSET


def level_shift_inverse(values):
    """Undo the level shift: round, add 128 back, clamp into [0, 255].

    Rounding happens before the offset is restored so that negative ties
    still round away from zero.
    """
    shifted = round_half_away(values) + LEVEL_OFFSET
    return np.clip(shifted, 0, 255).astype(np.uint8)
