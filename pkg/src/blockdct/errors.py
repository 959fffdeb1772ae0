"""Exception types shared across the codec."""


class CodecError(Exception):
    """Base class for every failure this package raises on bad data."""


class CorruptStreamError(CodecError):
    """Compressed data that cannot be decoded.

    ``offset`` is the byte position in the input at which the problem was
    detected, when one is known; it is appended to the message so command
    line diagnostics carry it for free.
    """

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)
        self.offset = offset


class BadMagicError(CorruptStreamError):
    """Input does not start with the container magic."""


class UnsupportedVersionError(CorruptStreamError):
    """Container version this build does not understand."""


class TruncatedFileError(CorruptStreamError):
    """Input ends before the declared content does."""


class MalformedBlockError(CorruptStreamError):
    """A block's symbol stream is self-inconsistent."""


class PnmError(CodecError):
    """Unreadable or unsupported PGM/PPM input."""
