"""The full compression pipeline over whole images.

Forward, per 8x8 block of each channel: level shift, DCT, quantize, zigzag
scan, run-length encode. Inverse: the same stages reversed, then crop to the
original dimensions. Blocks never interact, so both directions can fan out
over a thread pool without changing a single output byte.

Grayscale images are (height, width) uint8 arrays; color images are
(height, width, 3) with channels compressed independently against the same
divisor table.
"""

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .blocks import TileGrid, level_shift_forward, level_shift_inverse, tile_plane, untile_plane
from .container import BLOCK_VALUES, CompressedImage, serialize
from .errors import CorruptStreamError, MalformedBlockError
from .metrics import CompressionReport, compression_ratio, mse_psnr, redundancy
from .quantize import dequantize, quant_matrix, quantize
from .rle import rle_decode, rle_encode
from .transform import dct_forward, dct_inverse
from .zigzag import inverse_zigzag, zigzag


def _split_channels(image):
    image = np.asarray(image)
    if image.ndim == 2:
        return [image]
    if image.ndim == 3 and image.shape[2] == 3:
        return [image[:, :, c] for c in range(3)]
    raise ValueError(
        f"image must be (h, w) grayscale or (h, w, 3) color, got shape {image.shape}"
    )


def _map_blocks(fn, items, workers):
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        # map preserves input order, so the schedule cannot reorder output.
        return list(pool.map(fn, items, chunksize=64))


def _encode_block(block, divisors):
    shifted = level_shift_forward(block)
    levels = quantize(dct_forward(shifted), divisors)
    return rle_encode(zigzag(levels))


def _decode_block(indexed, divisors):
    index, symbols = indexed
    try:
        values = rle_decode(symbols, limit=BLOCK_VALUES)
    except CorruptStreamError as exc:
        raise MalformedBlockError(f"block {index}: {exc}") from exc
    if len(values) != BLOCK_VALUES:
        raise MalformedBlockError(
            f"block {index}: stream expands to {len(values)} values, "
            f"expected {BLOCK_VALUES}"
        )
    levels = inverse_zigzag(np.array(values, dtype=np.int64))
    coeffs = dequantize(levels, divisors)
    return level_shift_inverse(dct_inverse(coeffs))


def encode(image, quality: int = 50, workers: int = 1) -> CompressedImage:
    """Compress an image at the given quality level.

    Args:
        image: (h, w) or (h, w, 3) array of samples in [0, 255].
        quality: divisor-table quality in [1, 100]; 50 is the baseline.
        workers: thread count for per-block work. Any value produces
            byte-identical output; more threads only change the schedule.

    Returns:
        CompressedImage ready for container.serialize.
    """
    planes = _split_channels(image)
    divisors = quant_matrix(quality)
    streams = []
    grid = None
    for plane in planes:
        blocks, grid = tile_plane(plane)
        streams.append(_map_blocks(lambda b: _encode_block(b, divisors), blocks, workers))
    return CompressedImage(
        width=grid.width,
        height=grid.height,
        channels=len(planes),
        quality=quality,
        streams=streams,
    )


def decode(compressed: CompressedImage, workers: int = 1) -> np.ndarray:
    """Reconstruct the image a CompressedImage describes.

    Fails on the first malformed block stream, identifying it by index.
    """
    if compressed.channels not in (1, 3):
        raise CorruptStreamError(f"channels must be 1 or 3, got {compressed.channels}")
    if len(compressed.streams) != compressed.channels:
        raise CorruptStreamError(
            f"{compressed.channels} channels declared but "
            f"{len(compressed.streams)} stream lists present"
        )
    grid = TileGrid(width=compressed.width, height=compressed.height)
    divisors = quant_matrix(compressed.quality)
    planes = []
    for channel in compressed.streams:
        if len(channel) != grid.block_count:
            raise CorruptStreamError(
                f"expected {grid.block_count} blocks per channel, got {len(channel)}"
            )
        blocks = _map_blocks(
            lambda pair: _decode_block(pair, divisors), list(enumerate(channel)), workers
        )
        planes.append(untile_plane(np.stack(blocks), grid))
    if len(planes) == 1:
        return planes[0]
    return np.stack(planes, axis=-1)


def roundtrip_report(image, quality: int = 50) -> CompressionReport:
    """Encode and decode in memory, measuring size and reconstruction quality.

    The original size is the raw sample payload (one byte per sample per
    channel); the compressed size is the full serialized container.
    """
    image = np.asarray(image)
    compressed = encode(image, quality)
    payload = serialize(compressed)
    restored = decode(compressed)
    mse, psnr = mse_psnr(image, restored)
    ratio = compression_ratio(image.size, len(payload))
    return CompressionReport(
        quality=quality,
        original_bytes=int(image.size),
        compressed_bytes=len(payload),
        compression_ratio=ratio,
        redundancy=redundancy(ratio),
        mse=mse,
        psnr=psnr,
    )
