"""Zigzag scan order and its inverse."""

import numpy as np
import pytest

from blockdct.errors import CorruptStreamError
from blockdct.zigzag import ZIGZAG_ORDER, inverse_zigzag, zigzag


def _diagonal_walk_order():
    """Regenerate the scan order by walking the anti-diagonals directly.

    Diagonal s holds the cells with row + col = s; odd diagonals are walked
    top to bottom, even ones bottom to top.
    """
    order = []
    for s in range(15):
        rows = list(range(max(0, s - 7), min(7, s) + 1))
        if s % 2 == 0:
            rows.reverse()
        for row in rows:
            order.append(row * 8 + (s - row))
    return order


def test_order_matches_diagonal_walk():
    assert ZIGZAG_ORDER.tolist() == _diagonal_walk_order()


def test_order_is_a_permutation():
    assert sorted(ZIGZAG_ORDER.tolist()) == list(range(64))


def test_scan_starts_along_the_first_antidiagonals():
    block = np.arange(64).reshape(8, 8)
    scanned = zigzag(block)
    assert scanned[0] == block[0, 0]
    assert scanned[1] == block[0, 1]
    assert scanned[2] == block[1, 0]
    assert scanned[3] == block[2, 0]
    assert scanned[4] == block[1, 1]
    assert scanned[5] == block[0, 2]
    assert scanned[63] == block[7, 7]


def test_dc_only_block_scans_to_leading_value():
    block = np.zeros((8, 8), dtype=np.int64)
    block[0, 0] = 9
    scanned = zigzag(block)
    assert scanned[0] == 9
    assert not scanned[1:].any()


def test_zigzag_rejects_wrong_shape():
    with pytest.raises(ValueError):
        zigzag(np.zeros((4, 4)))
    with pytest.raises(ValueError):
        zigzag(np.zeros(64))


def test_inverse_rejects_wrong_length():
    with pytest.raises(CorruptStreamError):
        inverse_zigzag(np.zeros(63))
    with pytest.raises(CorruptStreamError):
        inverse_zigzag(np.zeros((8, 8)))


def test_roundtrip_both_directions():
    rng = np.random.default_rng(5)
    for _ in range(300):
        block = rng.integers(-1000, 1000, size=(8, 8))
        assert np.array_equal(inverse_zigzag(zigzag(block)), block)
        vector = rng.integers(-1000, 1000, size=64)
        assert np.array_equal(zigzag(inverse_zigzag(vector)), vector)
