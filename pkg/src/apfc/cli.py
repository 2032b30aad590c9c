"""Command-line front end.

    apfc encode [--mode shannon|alphabetic] [--sigma fixed256|scan] INPUT OUTPUT
    apfc decode INPUT OUTPUT
    apfc stats  [--mode ...] [--sigma ...] INPUT

Symbols are bytes. Exit codes: 0 success, 2 usage error, 3 malformed or
corrupt container, 4 I/O error.
"""
import argparse
import os
import sys
import tempfile

import numpy as np

from .adaptive import CodingMode, decode_stream, encode_stream
from .container import StreamHeader, read_container, write_container
from .errors import CorruptStreamError, FormatError, UsageError
from .model import derive_params, empirical_entropy
from .oracle import DEFAULT_ALLOWANCE, verify_bound

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FORMAT = 3
EXIT_IO = 4


def _err(msg):
    print(f"apfc: {msg}", file=sys.stderr)


def _read_symbols(path):
    with open(path, "rb") as f:
        return np.frombuffer(f.read(), dtype=np.uint8)


def choose_sigma(symbols: np.ndarray, policy: str) -> int:
    if policy == "fixed256":
        return 256
    return max(2, int(symbols.max()) + 1) if symbols.size else 2


def _write_atomic(path, blob: bytes):
    # a failed run must not leave a partial output file behind
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".apfc-")
    try:
        with os.fdopen(fd, "wb") as f:
            f.write(blob)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _regime_warning(sigma, n):
    if n and not derive_params(sigma, n).bound_regime_ok:
        _err(f"warning: sigma^2*L^2 >= n (sigma={sigma}, n={n}); "
             "the H+1 / H+2 per-symbol bounds are not meaningful at this size")


def cmd_encode(args) -> int:
    symbols = _read_symbols(args.input)
    n = symbols.size
    sigma = choose_sigma(symbols, args.sigma)
    mode = CodingMode.parse(args.mode)
    payload = encode_stream(symbols, sigma, mode)
    _write_atomic(args.output, write_container(StreamHeader(mode, n, sigma), payload))
    stats = {"n": n, "sigma": sigma, "mode": mode.name.lower(), "payload_bits": payload.nbits}
    if n:
        stats["H"] = empirical_entropy(np.bincount(symbols, minlength=sigma), n)
        stats["bits_per_symbol"] = payload.nbits / n
    for key, value in stats.items():
        print(f"{key}={value}", file=sys.stderr)
    _regime_warning(sigma, n)
    return EXIT_OK


def cmd_decode(args) -> int:
    with open(args.input, "rb") as f:
        blob = f.read()
    header, source = read_container(blob)
    if header.sigma > 256:
        raise FormatError(f"sigma={header.sigma} cannot be written back as bytes")
    symbols = decode_stream(source, header.sigma, header.n, header.mode)
    _write_atomic(args.output, symbols.astype(np.uint8).tobytes())
    return EXIT_OK


def cmd_stats(args) -> int:
    symbols = _read_symbols(args.input)
    if symbols.size == 0:
        raise UsageError("stats needs a non-empty input")
    sigma = choose_sigma(symbols, args.sigma)
    report = verify_bound(symbols, sigma, args.mode, c=args.allowance)
    sys.stdout.write(report.to_text())
    _regime_warning(sigma, symbols.size)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="apfc", description="Block-adaptive prefix-free coder.")
    sub = parser.add_subparsers(dest="command", required=True)

    def coding_flags(p):
        p.add_argument("--mode", choices=["shannon", "alphabetic"], default="shannon")
        p.add_argument("--sigma", choices=["fixed256", "scan"], default="scan",
                       help="alphabet size: 256, or largest byte value + 1 (default)")

    p = sub.add_parser("encode", help="compress INPUT into an APFC container")
    coding_flags(p)
    p.add_argument("input")
    p.add_argument("output")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="restore the original bytes from a container")
    p.add_argument("input")
    p.add_argument("output")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("stats", help="report payload size against the entropy bound")
    coding_flags(p)
    p.add_argument("--allowance", type=float, default=DEFAULT_ALLOWANCE,
                   help="constant c in the c*sigma^2*L^2/n lower-order allowance")
    p.add_argument("input")
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        _err(str(exc))
        return EXIT_USAGE
    except (FormatError, CorruptStreamError) as exc:
        _err(str(exc))
        return EXIT_FORMAT
    except OSError as exc:
        _err(str(exc))
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
