"""Binary PGM (P5) and PPM (P6) reading and writing, maxval 255 only.

The reader accepts any legal amount of header whitespace and '#' comments;
the writer always emits the canonical header "P5\\n{w} {h}\\n255\\n" (or P6)
followed by row-major samples, so equal images produce equal files.
"""

import numpy as np

from .errors import PnmError

_WHITESPACE = b" \t\n\r\x0b\x0c"


def _next_token(data: bytes, pos: int):
    """Return (token, position after it), skipping whitespace and comments."""
    n = len(data)
    while pos < n:
        byte = data[pos]
        if byte in _WHITESPACE:
            pos += 1
        elif byte == ord("#"):
            while pos < n and data[pos] not in b"\r\n":
                pos += 1
        else:
            break
    if pos >= n:
        raise PnmError("truncated header")
    start = pos
    while pos < n and data[pos] not in _WHITESPACE and data[pos] != ord("#"):
        pos += 1
    return data[start:pos], pos


def _int_token(data: bytes, pos: int, name: str):
    token, pos = _next_token(data, pos)
    if not token.isdigit():
        raise PnmError(f"{name} must be a decimal integer, got {token!r}")
    return int(token), pos


def read_image(data: bytes) -> np.ndarray:
    """Parse P5/P6 bytes into a (h, w) or (h, w, 3) uint8 array."""
    data = bytes(data)
    magic, pos = _next_token(data, 0)
    if magic not in (b"P5", b"P6"):
        raise PnmError(f"unsupported format {magic!r}, expected P5 or P6")
    channels = 1 if magic == b"P5" else 3
    width, pos = _int_token(data, pos, "width")
    height, pos = _int_token(data, pos, "height")
    maxval, pos = _int_token(data, pos, "maxval")
    if width < 1 or height < 1:
        raise PnmError(f"dimensions must be at least 1x1, got {width}x{height}")
    if maxval != 255:
        raise PnmError(f"unsupported maxval {maxval}, only 255 is handled")
    # Exactly one whitespace byte separates the header from the samples.
    if pos >= len(data) or data[pos] not in _WHITESPACE:
        raise PnmError("missing whitespace between header and samples")
    pos += 1
    need = width * height * channels
    samples = data[pos : pos + need]
    if len(samples) < need:
        raise PnmError(
            f"truncated samples: need {need} bytes, found {len(samples)}"
        )
    array = np.frombuffer(samples, dtype=np.uint8).copy()
    if channels == 1:
        return array.reshape(height, width)
    return array.reshape(height, width, 3)


def write_image(image) -> bytes:
    """Encode an image as canonical P5 (grayscale) or P6 (color) bytes."""
    image = np.asarray(image)
    if image.dtype != np.uint8:
        if not np.issubdtype(image.dtype, np.integer):
            raise ValueError(f"samples must be integers, got dtype {image.dtype}")
        if image.size == 0 or image.min() < 0 or image.max() > 255:
            raise ValueError("samples must lie in [0, 255]")
        image = image.astype(np.uint8)
    if image.ndim == 2:
        magic = b"P5"
    elif image.ndim == 3 and image.shape[2] == 3:
        magic = b"P6"
    else:
        raise ValueError(
            f"image must be (h, w) grayscale or (h, w, 3) color, got shape {image.shape}"
        )
    height, width = image.shape[:2]
    if height < 1 or width < 1:
        raise ValueError(f"dimensions must be at least 1x1, got {width}x{height}")
    header = magic + b"\n%d %d\n255\n" % (width, height)
    return header + np.ascontiguousarray(image).tobytes()
