"""The BDC1 container: a bit-exact byte layout for a compressed image.

Layout (all multi-byte integers little-endian):

    offset  size  field
    0       4     magic, the ASCII bytes "BDC1"
    4       1     format version, currently 1
    5       4     image width in pixels, unsigned
    9       4     image height in pixels, unsigned
    13      1     channel count, 1 (grayscale) or 3 (color)
    14      1     quality level, 1..100
    15      ...   channel 0 block streams, then channel 1, ...

Each channel holds ceil(width/8) * ceil(height/8) blocks in row-major
order. Each block is a 2-byte unsigned symbol count followed by that many
2-byte signed symbols, and its symbols must run-length decode to exactly
64 values. Serialization is deterministic, so equal images produce equal
bytes.
"""

import struct
from dataclasses import dataclass

from .errors import (
    BadMagicError,
    CorruptStreamError,
    MalformedBlockError,
    TruncatedFileError,
    UnsupportedVersionError,
)
from .rle import rle_decode

MAGIC = b"BDC1"
VERSION = 1
_HEADER = struct.Struct("<4sBIIBB")
HEADER_SIZE = _HEADER.size
BLOCK_VALUES = 64


@dataclass
class CompressedImage:
    """Header fields plus per-channel, per-block RLE symbol streams.

    streams[c][b] is the symbol list for block b (row-major) of channel c.
    """

    width: int
    height: int
    channels: int
    quality: int
    streams: list

    @property
    def blocks_per_channel(self) -> int:
        return -(-self.width // 8) * -(-self.height // 8)


def _validate_header_fields(image: CompressedImage) -> None:
    if not 1 <= image.width <= 0xFFFFFFFF:
        raise ValueError(f"width must be in [1, 2**32 - 1], got {image.width}")
    if not 1 <= image.height <= 0xFFFFFFFF:
        raise ValueError(f"height must be in [1, 2**32 - 1], got {image.height}")
    if image.channels not in (1, 3):
        raise ValueError(f"channels must be 1 or 3, got {image.channels}")
    if not 1 <= image.quality <= 100:
        raise ValueError(f"quality must be in [1, 100], got {image.quality}")


def serialize(image: CompressedImage) -> bytes:
    """Pack a CompressedImage into container bytes."""
    _validate_header_fields(image)
    if len(image.streams) != image.channels:
        raise ValueError(
            f"expected {image.channels} channel stream lists, got {len(image.streams)}"
        )
    expected_blocks = image.blocks_per_channel
    parts = [
        _HEADER.pack(
            MAGIC, VERSION, image.width, image.height, image.channels, image.quality
        )
    ]
    for channel in image.streams:
        if len(channel) != expected_blocks:
            raise ValueError(
                f"expected {expected_blocks} blocks per channel, got {len(channel)}"
            )
        for symbols in channel:
            count = len(symbols)
            if count > 0xFFFF:
                raise ValueError(f"block has {count} symbols, limit is 65535")
            try:
                parts.append(struct.pack(f"<H{count}h", count, *symbols))
            except struct.error as exc:
                raise ValueError(f"symbol out of signed 16-bit range: {exc}") from exc
    return b"".join(parts)


def deserialize(data: bytes) -> CompressedImage:
    """Parse container bytes back into a CompressedImage.

    Exact inverse of serialize. Any malformed input raises a
    CorruptStreamError subclass carrying the byte offset of the problem;
    no input, however mangled, may crash with anything else.
    """
    data = bytes(data)
    if len(data) >= 4 and data[:4] != MAGIC:
        raise BadMagicError(f"bad magic {data[:4]!r}, expected {MAGIC!r}", offset=0)
    if len(data) < HEADER_SIZE:
        raise TruncatedFileError(
            f"header needs {HEADER_SIZE} bytes, got {len(data)}", offset=len(data)
        )
    _, version, width, height, channels, quality = _HEADER.unpack_from(data, 0)
    if version != VERSION:
        raise UnsupportedVersionError(
            f"unsupported version {version}, expected {VERSION}", offset=4
        )
    if width < 1:
        raise CorruptStreamError("width must be at least 1", offset=5)
    if height < 1:
        raise CorruptStreamError("height must be at least 1", offset=9)
    if channels not in (1, 3):
        raise CorruptStreamError(f"channels must be 1 or 3, got {channels}", offset=13)
    if not 1 <= quality <= 100:
        raise CorruptStreamError(
            f"quality must be in [1, 100], got {quality}", offset=14
        )

    blocks_per_channel = (-(-width // 8)) * (-(-height // 8))
    total_blocks = blocks_per_channel * channels
    # Every block costs at least 2 bytes, so absurd declared dimensions are
    # rejected up front instead of looping toward a truncation error.
    if len(data) < HEADER_SIZE + 2 * total_blocks:
        raise TruncatedFileError(
            f"{total_blocks} blocks declared but only {len(data) - HEADER_SIZE} "
            "bytes of block data present",
            offset=len(data),
        )

    pos = HEADER_SIZE
    streams = []
    for c in range(channels):
        channel = []
        for b in range(blocks_per_channel):
            block_start = pos
            if pos + 2 > len(data):
                raise TruncatedFileError(
                    f"channel {c} block {b}: symbol count missing", offset=pos
                )
            (count,) = struct.unpack_from("<H", data, pos)
            pos += 2
            end = pos + 2 * count
            if end > len(data):
                raise TruncatedFileError(
                    f"channel {c} block {b}: {count} symbols declared but the "
                    "file ends first",
                    offset=pos,
                )
            symbols = list(struct.unpack_from(f"<{count}h", data, pos))
            pos = end
            try:
                decoded = rle_decode(symbols, limit=BLOCK_VALUES)
            except CorruptStreamError as exc:
                raise MalformedBlockError(
                    f"channel {c} block {b}: {exc}", offset=block_start
                ) from exc
            if len(decoded) != BLOCK_VALUES:
                raise MalformedBlockError(
                    f"channel {c} block {b}: stream expands to {len(decoded)} "
                    f"values, expected {BLOCK_VALUES}",
                    offset=block_start,
                )
            channel.append(symbols)
        streams.append(channel)
    if pos != len(data):
        raise CorruptStreamError(
            f"{len(data) - pos} trailing bytes after the last block", offset=pos
        )
    return CompressedImage(
        width=width, height=height, channels=channels, quality=quality, streams=streams
    )
