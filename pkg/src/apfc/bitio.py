"""MSB-first bit I/O over byte buffers.

Bits are packed most significant first inside each byte, so comparing two
zero-padded buffers byte by byte orders them the same way as comparing the
underlying bit strings.
"""
from typing import NamedTuple, Union

import numpy as np

from .errors import CorruptStreamError, UsageError

MAX_WIDTH = 64


class Payload(NamedTuple):
    """A finished bit string: ``data`` holds ``nbits`` bits, zero-padded."""

    data: bytes
    nbits: int

    def to_bitstring(self) -> str:
        if self.nbits == 0:
            return ""
        bits = np.unpackbits(np.frombuffer(self.data, dtype=np.uint8))[: self.nbits]
        return bits.tobytes().translate(bytes.maketrans(b"\x00\x01", b"01")).decode()

    @classmethod
    def from_bitstring(cls, bits: str) -> "Payload":
        sink = BitSink()
        for ch in bits:
            sink.write_bits(int(ch), 1)
        return sink.payload()

    def source(self) -> "BitSource":
        return BitSource(self.data, self.nbits)


class BitSink:
    """Growable bit buffer."""

    def __init__(self):
        self.buffer = bytearray()
        self.bit_position = 0

    def write_bits(self, value: int, width: int) -> "BitSink":
        if not 0 <= width <= MAX_WIDTH:
            raise UsageError(f"width must be in 0..{MAX_WIDTH}, got {width}")
        if value < 0 or value >> width:
            raise UsageError(f"value {value} does not fit in {width} bits")
        while width:
            used = self.bit_position & 7
            if used == 0:
                self.buffer.append(0)
            take = min(8 - used, width)
            chunk = (value >> (width - take)) & ((1 << take) - 1)
            self.buffer[-1] |= chunk << (8 - used - take)
            width -= take
            self.bit_position += take
        return self

    def payload(self) -> Payload:
        return Payload(bytes(self.buffer), self.bit_position)

    def getvalue(self) -> bytes:
        return bytes(self.buffer)


class BitSource:
    """Read cursor over ``limit`` bits of ``buffer``.

    Peeking past ``limit`` zero-fills; advancing past it raises
    :class:`CorruptStreamError`.
    """

    def __init__(self, buffer: Union[bytes, bytearray, memoryview], limit: int = None, cursor: int = 0):
        self.buffer = bytes(buffer)
        if limit is None:
            limit = 8 * len(self.buffer)
        if not 0 <= limit <= 8 * len(self.buffer):
            raise UsageError(f"limit {limit} outside buffer of {len(self.buffer)} bytes")
        if not 0 <= cursor <= limit:
            raise UsageError(f"cursor {cursor} outside 0..{limit}")
        self.limit = limit
        self.cursor = cursor

    @property
    def remaining(self) -> int:
        return self.limit - self.cursor

    def peek_bits(self, width: int) -> int:
        if not 0 <= width <= MAX_WIDTH:
            raise UsageError(f"width must be in 0..{MAX_WIDTH}, got {width}")
        if width == 0:
            return 0
        start = self.cursor
        end = start + width
        first, last = start >> 3, (end + 7) >> 3
        chunk = int.from_bytes(self.buffer[first:last], "big")
        # buffer may end before `end`; pad the missing bytes with zeros
        chunk <<= 8 * (last - first) - 8 * len(self.buffer[first:last])
        value = (chunk >> (8 * last - end)) & ((1 << width) - 1)
        if end > self.limit:
            cut = end - self.limit
            value = (value >> cut) << cut
        return value

    def advance(self, width: int) -> "BitSource":
        if width < 0:
            raise UsageError("cannot advance by a negative width")
        if self.cursor + width > self.limit:
            raise CorruptStreamError(
                f"advance by {width} at bit {self.cursor} overruns payload of {self.limit} bits")
        self.cursor += width
        return self

    def read_bits(self, width: int) -> int:
        value = self.peek_bits(width)
        self.advance(width)
        return value
