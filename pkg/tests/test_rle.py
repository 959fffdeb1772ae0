"""Run-length coding of integer sequences."""

import itertools

import numpy as np
import pytest

from blockdct.errors import CorruptStreamError
from blockdct.rle import rle_decode, rle_encode

REFERENCE_INPUT = [4, 0, 0, 0, 9, 0, 0, 0, 0, 1, 1, 0, 0, 7, 5, 0, 0, 0, 0, 0, 0, 0, 32]
REFERENCE_ENCODED = [4, 0, 3, 9, 0, 4, 1, 1, 0, 2, 7, 5, 0, 7, 32]


def test_reference_sequence_encodes_exactly():
    assert rle_encode(REFERENCE_INPUT) == REFERENCE_ENCODED


def test_reference_sequence_decodes_exactly():
    assert rle_decode(REFERENCE_ENCODED) == REFERENCE_INPUT


def test_all_nonzero_passes_through():
    values = [3, -1, 7, 2, 9]
    assert rle_encode(values) == values
    assert rle_decode(values) == values


def test_all_zeros_collapse_to_one_pair():
    assert rle_encode([0] * 64) == [0, 64]
    assert rle_decode([0, 64]) == [0] * 64


def test_lone_zero_costs_two_symbols():
    assert rle_encode([0]) == [0, 1]
    assert rle_encode([5, 0, 6]) == [5, 0, 1, 6]
    assert rle_decode([5, 0, 1, 6]) == [5, 0, 6]


def test_trailing_run_is_flushed():
    assert rle_encode([7, 0, 0]) == [7, 0, 2]


def test_empty_input_rejected():
    with pytest.raises(ValueError):
        rle_encode([])


def test_decode_rejects_dangling_zero():
    with pytest.raises(CorruptStreamError):
        rle_decode([5, 0])


def test_decode_rejects_nonpositive_run():
    with pytest.raises(CorruptStreamError):
        rle_decode([0, 0, 3])
    with pytest.raises(CorruptStreamError):
        rle_decode([0, -2])


def test_decode_limit_stops_expansion():
    with pytest.raises(CorruptStreamError):
        rle_decode([0, 65], limit=64)
    with pytest.raises(CorruptStreamError):
        rle_decode([0, 64, 1], limit=64)
    assert rle_decode([0, 64], limit=64) == [0] * 64


def test_roundtrip_random_zero_heavy():
    rng = np.random.default_rng(6)
    for _ in range(500):
        density = rng.uniform(0.2, 0.95)
        values = rng.integers(-40, 41, size=64)
        values[rng.random(64) < density] = 0
        values = values.tolist()
        assert rle_decode(rle_encode(values)) == values


def test_encoded_length_counts_runs_and_nonzeros():
    rng = np.random.default_rng(8)
    for _ in range(200):
        values = rng.integers(-5, 6, size=64).tolist()
        encoded = rle_encode(values)
        nonzeros = sum(1 for v in values if v != 0)
        zero_runs = sum(1 for key, _ in itertools.groupby(values) if key == 0)
        assert len(encoded) == nonzeros + 2 * zero_runs


def test_nonzero_prefix_with_zero_tail_encodes_to_prefix_plus_pair():
    for prefix_len in (1, 5, 63):
        values = list(range(1, prefix_len + 1)) + [0] * (64 - prefix_len)
        assert len(rle_encode(values)) == prefix_len + 2


def test_long_runs_always_shrink():
    # When every zero run has length >= 3, pairs always beat the raw zeros.
    values = [1, 0, 0, 0, 2, 0, 0, 0, 0, 0, 3] + [0] * 20
    assert len(rle_encode(values)) < len(values)
