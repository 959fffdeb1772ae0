"""Command-line front end: encode, decode, roundtrip, inspect.

Exit codes: 0 success, 1 usage error, 2 I/O error, 3 corrupt or unreadable
data. Output files are written atomically (temp file + rename), so a failed
command never leaves a partial file behind.
"""

import argparse
import os
import sys
import tempfile
from collections import Counter

from . import codec, container, metrics, netpbm
from .errors import CodecError
from .rle import rle_decode

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_CORRUPT = 3

_COLUMNS = (
    ("Quality", lambda r: f"{r.quality}"),
    ("Original (KB)", lambda r: f"{r.original_bytes / 1024:.2f}"),
    ("Compressed (KB)", lambda r: f"{r.compressed_bytes / 1024:.2f}"),
    ("Reduction (Percent)", lambda r: f"{r.reduction_percent:.2f}"),
    ("MSE", lambda r: f"{r.mse:.4f}"),
    ("PSNR (dB)", lambda r: f"{r.psnr:.2f}"),
)


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; this front end uses 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _quality_arg(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"quality must be an integer, got {text!r}")
    if not 1 <= value <= 100:
        raise argparse.ArgumentTypeError(f"quality must be in [1, 100], got {value}")
    return value


def _sweep_arg(text):
    low, sep, high = text.partition("..")
    try:
        if not sep:
            raise ValueError
        start, stop = int(low), int(high)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"sweep must look like 10..90, got {text!r}"
        )
    if not (1 <= start <= stop <= 100):
        raise argparse.ArgumentTypeError(
            f"sweep bounds must satisfy 1 <= a <= b <= 100, got {text!r}"
        )
    return start, stop


def _build_parser():
    parser = _Parser(prog="bdc", description="8x8 block-DCT image codec")
    commands = parser.add_subparsers(dest="command", required=True)

    enc = commands.add_parser("encode", help="compress a PGM/PPM image")
    enc.add_argument("input", help="source .pgm or .ppm file")
    enc.add_argument("output", help="destination .bdc file")
    enc.add_argument("--quality", type=_quality_arg, default=50, metavar="<1-100>")
    enc.add_argument("--format", choices=("table", "kv"), default="table")
    enc.set_defaults(func=_cmd_encode)

    dec = commands.add_parser("decode", help="reconstruct an image from a .bdc file")
    dec.add_argument("input", help="source .bdc file")
    dec.add_argument("output", help="destination .pgm or .ppm file")
    dec.set_defaults(func=_cmd_decode)

    rtr = commands.add_parser(
        "roundtrip", help="compress and reconstruct in memory, reporting quality"
    )
    rtr.add_argument("input", help="source .pgm or .ppm file")
    rtr.add_argument("--quality", type=_quality_arg, default=50, metavar="<1-100>")
    rtr.add_argument(
        "--sweep",
        type=_sweep_arg,
        metavar="<a>..<b>",
        help="report qualities a, a+10, ... up to b instead of a single quality",
    )
    rtr.add_argument("--format", choices=("table", "kv"), default="table")
    rtr.set_defaults(func=_cmd_roundtrip)

    ins = commands.add_parser("inspect", help="dump container header and block stats")
    ins.add_argument("input", help="source .bdc file")
    ins.set_defaults(func=_cmd_inspect)
    return parser


def _read_file(path) -> bytes:
    with open(path, "rb") as fh:
        return fh.read()


def _write_atomic(path, data: bytes) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".bdc-tmp-")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        # mkstemp files are 0600; give the finished file normal permissions.
        mask = os.umask(0)
        os.umask(mask)
        os.chmod(tmp, 0o666 & ~mask)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _print_reports(reports, fmt) -> None:
    if fmt == "kv":
        for i, r in enumerate(reports):
            if i:
                print()
            print(f"quality={r.quality}")
            print(f"original_bytes={r.original_bytes}")
            print(f"compressed_bytes={r.compressed_bytes}")
            print(f"compression_ratio={r.compression_ratio:.6f}")
            print(f"reduction_percent={r.reduction_percent:.4f}")
            print(f"mse={r.mse:.6f}")
            print(f"psnr_db={r.psnr:.4f}")
        return
    widths = [
        max(len(header), max(len(cell(r)) for r in reports))
        for header, cell in _COLUMNS
    ]
    print("  ".join(h.ljust(w) for (h, _), w in zip(_COLUMNS, widths)).rstrip())
    for r in reports:
        print(
            "  ".join(cell(r).ljust(w) for (_, cell), w in zip(_COLUMNS, widths)).rstrip()
        )


def _cmd_encode(args) -> int:
    image = netpbm.read_image(_read_file(args.input))
    compressed = codec.encode(image, args.quality)
    payload = container.serialize(compressed)
    _write_atomic(args.output, payload)
    restored = codec.decode(compressed)
    mse, psnr = metrics.mse_psnr(image, restored)
    ratio = metrics.compression_ratio(image.size, len(payload))
    report = metrics.CompressionReport(
        quality=args.quality,
        original_bytes=int(image.size),
        compressed_bytes=len(payload),
        compression_ratio=ratio,
        redundancy=metrics.redundancy(ratio),
        mse=mse,
        psnr=psnr,
    )
    _print_reports([report], args.format)
    return EXIT_OK


def _cmd_decode(args) -> int:
    compressed = container.deserialize(_read_file(args.input))
    image = codec.decode(compressed)
    _write_atomic(args.output, netpbm.write_image(image))
    return EXIT_OK


def _cmd_roundtrip(args) -> int:
    image = netpbm.read_image(_read_file(args.input))
    if args.sweep is not None:
        start, stop = args.sweep
        qualities = range(start, stop + 1, 10)
    else:
        qualities = [args.quality]
    reports = [codec.roundtrip_report(image, q) for q in qualities]
    _print_reports(reports, args.format)
    return EXIT_OK


def _cmd_inspect(args) -> int:
    data = _read_file(args.input)
    compressed = container.deserialize(data)
    blocks = compressed.blocks_per_channel
    print(f"magic={container.MAGIC.decode('ascii')}")
    print(f"version={container.VERSION}")
    print(f"width={compressed.width}")
    print(f"height={compressed.height}")
    print(f"channels={compressed.channels}")
    print(f"quality={compressed.quality}")
    print(f"blocks_per_channel={blocks}")
    print(f"total_blocks={blocks * compressed.channels}")
    print(f"file_bytes={len(data)}")

    all_streams = [s for channel in compressed.streams for s in channel]
    histogram = Counter(len(s) for s in all_streams)
    print("symbol count histogram:")
    for count in sorted(histogram):
        print(f"  {count:5d} symbols: {histogram[count]} blocks")

    nonzeros = [sum(1 for v in rle_decode(s) if v) for s in all_streams]
    total = sum(nonzeros)
    print("nonzero coefficients per block:")
    print(
        f"  min={min(nonzeros)} mean={total / len(nonzeros):.2f} "
        f"max={max(nonzeros)} total={total}"
    )
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except OSError as exc:
        print(f"bdc: i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except CodecError as exc:
        print(f"bdc: {exc}", file=sys.stderr)
        return EXIT_CORRUPT
    except ValueError as exc:
        print(f"bdc: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    """Console script entry point."""
    raise SystemExit(main())
