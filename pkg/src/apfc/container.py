"""APFC v1 file envelope.

Layout, 18 header bytes then the payload::

    offset  size  field
    0       4     magic  b"APFC"
    4       1     version (1)
    5       1     mode (0 shannon, 1 alphabetic)
    6       8     n, big-endian unsigned
    14      4     sigma, big-endian unsigned
    18      ...   payload bits, MSB-first, zero-padded to a byte

The payload limit a reader sees is every bit after the header. The decoder
stops after ``n`` symbols, so pad bits are never inspected.
"""
from dataclasses import dataclass
import struct

from .adaptive import CodingMode
from .bitio import BitSource, Payload
from .errors import FormatError

MAGIC = b"APFC"
VERSION = 1
HEADER = struct.Struct(">4sBBQI")
HEADER_SIZE = HEADER.size  # 18


@dataclass(frozen=True)
class StreamHeader:
    mode: CodingMode
    n: int
    sigma: int
    version: int = VERSION
    magic: bytes = MAGIC

    def pack(self) -> bytes:
        return HEADER.pack(self.magic, self.version, self.mode.value, self.n, self.sigma)


def write_container(header: StreamHeader, payload: Payload) -> bytes:
    if header.sigma < 2:
        raise FormatError(f"sigma must be >= 2, got {header.sigma}")
    body = payload.data[: (payload.nbits + 7) >> 3]
    if payload.nbits & 7:
        # encoders must emit zero pad bits
        keep = 0xFF << (8 - (payload.nbits & 7)) & 0xFF
        body = body[:-1] + bytes([body[-1] & keep])
    return header.pack() + body


def read_container(blob: bytes):
    """Parse ``blob`` into ``(StreamHeader, BitSource over the payload)``."""
    if len(blob) < HEADER_SIZE:
        raise FormatError(f"file is {len(blob)} bytes, shorter than the {HEADER_SIZE}-byte header")
    magic, version, mode, n, sigma = HEADER.unpack_from(blob)
    if magic != MAGIC:
        raise FormatError(f"bad magic {magic!r}")
    if version != VERSION:
        raise FormatError(f"unsupported version {version}")
    try:
        mode = CodingMode(mode)
    except ValueError:
        raise FormatError(f"unknown mode byte 0x{mode:02x}") from None
    if sigma < 2:
        raise FormatError(f"sigma must be >= 2, got {sigma}")
    body = blob[HEADER_SIZE:]
    return StreamHeader(mode, n, sigma), BitSource(body, 8 * len(body))
