"""Tiling, untiling, rounding, and the level shift."""

import numpy as np
import pytest

from blockdct.blocks import (
    TileGrid,
    level_shift_forward,
    level_shift_inverse,
    round_half_away,
    tile_plane,
    untile_plane,
)
from blockdct.errors import CorruptStreamError


def test_round_half_away_ties():
    values = np.array([2.5, -2.5, 0.5, -0.5, 1.5, -1.5])
    expected = np.array([3.0, -3.0, 1.0, -1.0, 2.0, -2.0])
    assert np.array_equal(round_half_away(values), expected)


def test_round_half_away_non_ties():
    values = np.array([1.4, -1.4, 1.6, -1.6, 0.0, 7.0])
    expected = np.array([1.0, -1.0, 2.0, -2.0, 0.0, 7.0])
    assert np.array_equal(round_half_away(values), expected)


def test_round_half_away_near_half_below():
    # The float just below 0.5 must not be nudged up to 1 by adding 0.5.
    assert round_half_away(0.49999999999999994) == 0.0
    assert round_half_away(-0.49999999999999994) == 0.0


def test_tile_exact_multiple_has_no_padding():
    plane = np.arange(64, dtype=np.uint8).reshape(8, 8)
    blocks, grid = tile_plane(plane)
    assert blocks.shape == (1, 8, 8)
    assert grid == TileGrid(width=8, height=8)
    assert np.array_equal(blocks[0], plane)


def test_tile_1024x768_block_count():
    plane = np.zeros((768, 1024), dtype=np.uint8)
    blocks, grid = tile_plane(plane)
    assert grid.block_count == 12288
    assert blocks.shape == (12288, 8, 8)


def test_tile_row_major_block_order():
    plane = np.zeros((16, 16), dtype=np.uint8)
    plane[0:8, 8:16] = 1
    plane[8:16, 0:8] = 2
    plane[8:16, 8:16] = 3
    blocks, _ = tile_plane(plane)
    assert [int(b[0, 0]) for b in blocks] == [0, 1, 2, 3]


def test_tile_pads_by_edge_replication():
    plane = np.arange(9, dtype=np.uint8).reshape(3, 3)
    blocks, grid = tile_plane(plane)
    assert grid.block_count == 1
    block = blocks[0]
    # Rightmost original column (2, 5, 8) extends across the padding.
    assert np.array_equal(block[0, 2:], np.full(6, 2))
    assert np.array_equal(block[2, 2:], np.full(6, 8))
    # Bottom original row extends downward, corner fills with the corner.
    assert np.array_equal(block[2:, 0], np.full(6, 6))
    assert np.array_equal(block[2:, 2], np.full(6, 8))
    assert block[7, 7] == 8


def test_tile_rejects_bad_shapes():
    with pytest.raises(ValueError):
        tile_plane(np.zeros((0, 4), dtype=np.uint8))
    with pytest.raises(ValueError):
        tile_plane(np.zeros((4, 4, 3), dtype=np.uint8))
    with pytest.raises(ValueError):
        tile_plane(np.array([[300, 0], [0, 0]]))
    with pytest.raises(ValueError):
        tile_plane(np.array([[-1, 0], [0, 0]]))


def test_untile_rejects_wrong_block_count():
    grid = TileGrid(width=16, height=16)
    with pytest.raises(CorruptStreamError):
        untile_plane(np.zeros((3, 8, 8), dtype=np.uint8), grid)


def test_tile_untile_roundtrip_random_sizes():
    rng = np.random.default_rng(42)
    for _ in range(300):
        h = int(rng.integers(1, 41))
        w = int(rng.integers(1, 41))
        plane = rng.integers(0, 256, size=(h, w), dtype=np.uint8)
        blocks, grid = tile_plane(plane)
        assert np.array_equal(untile_plane(blocks, grid), plane)


def test_grid_block_counts():
    grid = TileGrid(width=9, height=17)
    assert grid.blocks_wide == 2
    assert grid.blocks_high == 3
    assert grid.block_count == 6


def test_level_shift_forward_values():
    block = np.array([[0, 128], [255, 140]], dtype=np.uint8)
    shifted = level_shift_forward(block)
    assert shifted.dtype == np.float64
    assert np.array_equal(shifted, np.array([[-128.0, 0.0], [127.0, 12.0]]))


def test_level_shift_inverse_rounds_then_clamps():
    values = np.array([[0.0, -0.5], [130.2, -130.0]])
    restored = level_shift_inverse(values)
    assert restored.dtype == np.uint8
    assert np.array_equal(restored, np.array([[128, 127], [255, 0]], dtype=np.uint8))


def test_level_shift_roundtrip_exact():
    rng = np.random.default_rng(3)
    for _ in range(50):
        block = rng.integers(0, 256, size=(8, 8), dtype=np.uint8)
        assert np.array_equal(level_shift_inverse(level_shift_forward(block)), block)
