"""Run-length coding of zigzag vectors.

Zeros dominate a quantized block, so each maximal run of k zeros is written
as the symbol pair (0, k) while nonzero values pass through verbatim. A
zero symbol therefore never stands for a sample by itself: it always
announces a run, and the next symbol is the run's length (a lone zero
encodes as 0, 1).
"""

from .errors import CorruptStreamError


def rle_encode(values) -> list:
    """Encode a nonempty sequence of ints, compressing runs of zeros."""
    values = [int(v) for v in values]
    if not values:
        raise ValueError("cannot encode an empty sequence")
    out = []
    run = 0
    for value in values:
        if value == 0:
            run += 1
        else:
            if run:
                out.append(0)
                out.append(run)
                run = 0
            out.append(value)
    if run:
        out.append(0)
        out.append(run)
    return out


def rle_decode(symbols, limit=None) -> list:
    """Expand (0, run) pairs back into zeros; other symbols pass through.

    When limit is given, decoding stops with CorruptStreamError as soon as
    the output would exceed that many values, so hostile run lengths cannot
    balloon memory.
    """
    symbols = [int(s) for s in symbols]
    out = []
    i = 0
    while i < len(symbols):
        value = symbols[i]
        if value == 0:
            if i + 1 >= len(symbols):
                raise CorruptStreamError(
                    f"zero symbol at position {i} has no run length after it"
                )
            run = symbols[i + 1]
            if run < 1:
                raise CorruptStreamError(
                    f"zero-run length at position {i + 1} must be positive, got {run}"
                )
            if limit is not None and len(out) + run > limit:
                raise CorruptStreamError(
                    f"stream expands past the {limit}-value limit"
                )
            out.extend([0] * run)
            i += 2
        else:
            if limit is not None and len(out) >= limit:
                raise CorruptStreamError(
                    f"stream expands past the {limit}-value limit"
                )
            out.append(value)
            i += 1
    return out
