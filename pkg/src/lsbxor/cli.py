"""Command-line front end: ``lsbxor {embed,extract,share,analyze}``.

Exit status: 0 success, 1 usage, 2 data or authentication error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import pgm
from .bitcodec import bits_to_bytes, bytes_to_bits
from .errors import ShareMismatchError, StegoError
from .analysis import compare
from .image import GrayImage
from .payload import KIND_TEXT, frame_image, frame_text, reveal
from .sharing import PixelShares, merge_to_image, split_image
from .stego import capacity_bits, embed_bits, extract_bits

EXIT_USAGE, EXIT_DATA, EXIT_IO = 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _row_image(values) -> GrayImage:
    return GrayImage(len(values), 1, values)


def cmd_embed(args) -> None:
    key = pgm.load(args.key)
    if args.mode == "image":
        bits = bytes_to_bits(frame_image(pgm.load(args.secret)))
    else:
        secret = Path(args.secret).read_bytes()
        if args.mode == "raw":
            if args.raw_len is not None and args.raw_len != len(secret):
                raise UsageError(
                    f"--raw-len {args.raw_len} does not match the {len(secret)}-byte secret"
                )
            bits = bytes_to_bits(secret)
        else:
            bits = bytes_to_bits(frame_text(secret))
    stego = embed_bits(key, bits)
    pgm.save(stego, args.out)
    print(f"embedded {bits.size} of {capacity_bits(key)} bits")


def _load_key(args, stego: GrayImage) -> GrayImage:
    if args.key is not None:
        return pgm.load(args.key)
    s1 = pgm.load(args.key_share1).pixels
    s2 = pgm.load(args.key_share2).pixels
    if s1.size + s2.size != stego.size:
        raise ShareMismatchError(
            f"key shares hold {s1.size + s2.size} pixels, stego image has {stego.size}"
        )
    return merge_to_image(PixelShares(s1, s2, stego.size), stego.width, stego.height)


def cmd_extract(args) -> None:
    stego = pgm.load(args.stego)
    key = _load_key(args, stego)
    out = Path(args.out)
    if args.mode == "raw":
        if args.raw_len is None:
            raise UsageError("raw mode needs --raw-len")
        data = bits_to_bytes(extract_bits(key, stego, 8 * args.raw_len))
        out.write_bytes(data)
        print(f"recovered {len(data)} raw bytes")
        return
    frame = reveal(key, stego)
    if frame.kind == KIND_TEXT:
        out.write_bytes(frame.text)
        print(f"recovered text payload of {frame.length} bytes")
    else:
        img = frame.image
        pgm.save(img, out)
        print(f"recovered {img.width}x{img.height} image payload")


def cmd_share(args) -> None:
    shares = split_image(pgm.load(args.key))
    pgm.save(_row_image(shares.share1), args.out1)
    if shares.share2.size:
        pgm.save(_row_image(shares.share2), args.out2)
    else:
        print(f"share 2 is empty; {args.out2} not written", file=sys.stderr)
    print(f"wrote shares of {shares.share1.size} and {shares.share2.size} pixels")


def cmd_analyze(args) -> None:
    report = compare(pgm.load(args.key), pgm.load(args.stego))
    Path(args.csv).write_text(report.to_csv())
    print(
        f"changed_pixels={report.changed_pixels} "
        f"max_abs_pixel_delta={report.max_abs_pixel_delta} psnr_db={report.psnr:.4f}"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lsbxor", description="Share-based LSB-XOR steganography")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("embed", help="hide a secret in a key image")
    p.add_argument("--key", required=True)
    p.add_argument("--in", dest="secret", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--mode", choices=["text", "image", "raw"], default="text")
    p.add_argument("--raw-len", type=int)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("extract", help="recover a secret from a stego image")
    keys = p.add_mutually_exclusive_group(required=True)
    keys.add_argument("--key")
    keys.add_argument("--key-share1")
    p.add_argument("--key-share2")
    p.add_argument("--stego", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--mode", choices=["framed", "text", "image", "raw"], default="framed")
    p.add_argument("--raw-len", type=int)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("share", help="write the two pixel shares of a key image")
    p.add_argument("--key", required=True)
    p.add_argument("--out1", required=True)
    p.add_argument("--out2", required=True)
    p.set_defaults(func=cmd_share)

    p = sub.add_parser("analyze", help="histogram comparison report as CSV")
    p.add_argument("--key", required=True)
    p.add_argument("--stego", required=True)
    p.add_argument("--csv", required=True)
    p.set_defaults(func=cmd_analyze)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "key_share1", None) and not args.key_share2:
            parser.error("--key-share1 requires --key-share2")
        if getattr(args, "raw_len", None) is not None and args.raw_len < 0:
            parser.error("--raw-len must be non-negative")
    except SystemExit as e:
        return e.code
    try:
        args.func(args)
    except UsageError as e:
        print(f"lsbxor: {e}", file=sys.stderr)
        return EXIT_USAGE
    except StegoError as e:
        print(f"lsbxor: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_DATA
    except OSError as e:
        print(f"lsbxor: {e}", file=sys.stderr)
        return EXIT_IO
    return 0


if __name__ == "__main__":
    sys.exit(main())
