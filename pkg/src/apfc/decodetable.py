"""Dense W-bit lookup table for one-probe prefix-code decoding."""
from dataclasses import dataclass

import numpy as np

from .codebuilder import PrefixCode
from .errors import CorruptStreamError, UsageError

MAX_TABLE_WIDTH = 64
INVALID = -1


@dataclass(frozen=True)
class DecodeTable:
    """``symbols[s]`` / ``lengths[s]`` for every W-bit window ``s``.

    Windows that start with no codeword hold symbol ``-1`` and length 0.
    """

    width: int
    symbols: np.ndarray
    lengths: np.ndarray

    @property
    def valid_slots(self) -> int:
        return int(np.count_nonzero(self.lengths))


def build(code: PrefixCode, width: int) -> DecodeTable:
    """Fill ``2**(width - l)`` consecutive slots per codeword of length ``l``."""
    if width > MAX_TABLE_WIDTH:
        raise UsageError(f"table width {width} exceeds {MAX_TABLE_WIDTH}")
    if code.max_length > width:
        raise UsageError(f"code has a {code.max_length}-bit codeword, table width is {width}")
    symbols = np.full(1 << width, INVALID, dtype=np.int32)
    lengths = np.zeros(1 << width, dtype=np.uint8)
    for sym, (value, l) in enumerate(zip(code.values, code.lengths)):
        lo = value << (width - l)
        hi = (value + 1) << (width - l)
        symbols[lo:hi] = sym
        lengths[lo:hi] = l
    return DecodeTable(width, symbols, lengths)


def lookup(table: DecodeTable, window: int):
    """``(symbol, length)`` for a W-bit window."""
    if not 0 <= window < 1 << table.width:
        raise UsageError(f"window {window} is not a {table.width}-bit value")
    length = int(table.lengths[window])
    if length == 0:
        raise CorruptStreamError(f"no codeword is a prefix of {window:0{table.width}b}")
    return int(table.symbols[window]), length
