"""8x8 block-DCT image codec with a bit-exact container and quality metrics.

The pipeline: level shift, 2-D DCT, scalar quantization, zigzag scan, run
length coding, BDC1 container bytes. Each stage is exposed on its own so it
can be tested, composed, or swapped independently; codec.encode/decode wire
them together over whole images.
"""

from .blocks import (
    BLOCK,
    TileGrid,
    level_shift_forward,
    level_shift_inverse,
    round_half_away,
    tile_plane,
    untile_plane,
)
from .codec import decode, encode, roundtrip_report
from .container import (
    HEADER_SIZE,
    MAGIC,
    VERSION,
    CompressedImage,
    deserialize,
    serialize,
)
from .errors import (
    BadMagicError,
    CodecError,
    CorruptStreamError,
    MalformedBlockError,
    PnmError,
    TruncatedFileError,
    UnsupportedVersionError,
)
from .metrics import CompressionReport, compression_ratio, mse_psnr, redundancy
from .netpbm import read_image, write_image
from .quantize import Q50, dequantize, quant_matrix, quantize
from .rle import rle_decode, rle_encode
from .transform import (
    DCT_MATRIX,
    build_dct_matrix,
    dct_forward,
    dct_forward_direct,
    dct_inverse,
)
from .zigzag import ZIGZAG_ORDER, inverse_zigzag, zigzag

__version__ = "0.1.0"

__all__ = [
    "BLOCK",
    "BadMagicError",
    "CodecError",
    "CompressedImage",
    "CompressionReport",
    "CorruptStreamError",
    "DCT_MATRIX",
    "HEADER_SIZE",
    "MAGIC",
    "MalformedBlockError",
    "PnmError",
    "Q50",
    "TileGrid",
    "TruncatedFileError",
    "UnsupportedVersionError",
    "VERSION",
    "ZIGZAG_ORDER",
    "build_dct_matrix",
    "compression_ratio",
    "dct_forward",
    "dct_forward_direct",
    "dct_inverse",
    "decode",
    "dequantize",
    "deserialize",
    "encode",
    "inverse_zigzag",
    "level_shift_forward",
    "level_shift_inverse",
    "mse_psnr",
    "quant_matrix",
    "quantize",
    "read_image",
    "redundancy",
    "rle_decode",
    "rle_encode",
    "roundtrip_report",
    "round_half_away",
    "serialize",
    "tile_plane",
    "untile_plane",
    "write_image",
    "zigzag",
]
