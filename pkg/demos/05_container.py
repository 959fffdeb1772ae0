"""Anatomy of a .bdc file, byte by byte, and how parsing refuses bad input.

The container is deliberately simple: a 15-byte header, then each block's
symbols with a 2-byte count in front. This script hexdumps a tiny file,
labels every field, then corrupts it in several ways to show the structured
errors the parser answers with.

Run:  python3 demos/05_container.py
"""

import numpy as np

from blockdct import CodecError, decode, deserialize, encode, serialize


def hexdump(data):
    for offset in range(0, len(data), 16):
        chunk = data[offset : offset + 16]
        hexes = " ".join(f"{b:02x}" for b in chunk)
        text = "".join(chr(b) if 32 <= b < 127 else "." for b in chunk)
        print(f"  {offset:04x}  {hexes:<47}  {text}")


def main():
    # Two blocks wide, one high: a 16x8 gradient.
    image = np.tile(np.arange(0, 256, 16, dtype=np.uint8), (8, 1))
    data = serialize(encode(image, 50))
    print(f"A 16x8 gradient compresses to {len(data)} bytes:\n")
    hexdump(data)

    print("\nHeader fields:")
    print(f"  bytes  0-3   magic     {data[0:4]!r}")
    print(f"  byte   4     version   {data[4]}")
    print(f"  bytes  5-8   width     {int.from_bytes(data[5:9], 'little')}")
    print(f"  bytes  9-12  height    {int.from_bytes(data[9:13], 'little')}")
    print(f"  byte   13    channels  {data[13]}")
    print(f"  byte   14    quality   {data[14]}")
    count = int.from_bytes(data[15:17], "little")
    print(f"  bytes 15-16  first block symbol count: {count}")

    parsed = deserialize(data)
    print(f"\nParsed back: {parsed.width}x{parsed.height}, "
          f"{parsed.blocks_per_channel} blocks, quality {parsed.quality}")
    print(f"Serialize(parse(bytes)) identical: {serialize(parsed) == data}")
    print(f"Decoded image shape: {decode(parsed).shape}")

    print("\nNow the abuse. Every failure is a structured error, never a crash:")
    victims = {
        "wrong magic": b"JUNK" + data[4:],
        "future version": data[:4] + b"\x07" + data[5:],
        "truncated mid-block": data[: len(data) - 3],
        "channels byte = 2": data[:13] + b"\x02" + data[14:],
        "quality byte = 0": data[:14] + b"\x00" + data[15:],
        "trailing garbage": data + b"\xff\xff",
    }
    for label, blob in victims.items():
        try:
            deserialize(blob)
            print(f"  {label:22s} -> parsed (unexpected!)")
        except CodecError as exc:
            print(f"  {label:22s} -> {type(exc).__name__}: {exc}")


if __name__ == "__main__":
    main()
