"""Block-adaptive prefix coding.

The first block of ``b = sigma * L`` symbols is sent with a fixed-length
code. After every ``k``-th block boundary, both sides rebuild the code from
the smoothed distribution of all symbols seen so far, and use it for the
next block. Counts change after every symbol, but the code changes only at
block boundaries.
"""
from dataclasses import dataclass
import enum
from typing import Callable, Optional

import numpy as np

from . import decodetable
from .bitio import BitSource, Payload
from .codebuilder import PrefixCode, fixed_length_code, gilbert_moore_code, shannon_code
from .errors import CorruptStreamError, UsageError
from .kernels import CORRUPT, MAX_CODEWORD, get_backend
from .model import AlphabetParams, FrequencyTable, ceil_log2, derive_params, smoothed_distribution

# the decode table has 2**W slots; past this it cannot be allocated anyway
MAX_TABLE_WIDTH = 32


class CodingMode(enum.Enum):
    SHANNON = 0
    ALPHABETIC = 1

    @classmethod
    def parse(cls, mode) -> "CodingMode":
        if isinstance(mode, cls):
            return mode
        try:
            return cls[str(mode).upper()]
        except KeyError:
            raise UsageError(f"unknown coding mode {mode!r}") from None


def table_width(params: AlphabetParams, mode: CodingMode) -> int:
    """Decode-table width: the longest codeword any block can use."""
    w = ceil_log2(params.sigma * params.L)
    if mode is CodingMode.ALPHABETIC:
        w += 1
    return max(w, params.first_width)


@dataclass
class CoderState:
    params: AlphabetParams
    mode: CodingMode
    freq: FrequencyTable
    current_code: PrefixCode
    current_table: Optional[decodetable.DecodeTable] = None
    position: int = 0
    k: int = 0
    width: int = 0

    @classmethod
    def start(cls, params: AlphabetParams, mode: CodingMode) -> "CoderState":
        return cls(params, mode, FrequencyTable(params.sigma),
                   fixed_length_code(params.sigma), width=table_width(params, mode))


def rebuild_code(state: CoderState, with_table: bool = False) -> CoderState:
    """Replace the code at a block boundary; decoders also want the table."""
    p = state.params
    if state.position == 0 or state.position % p.b:
        raise UsageError(f"position {state.position} is not a block boundary")
    state.k = state.position // p.b
    dist = smoothed_distribution(state.freq, p, state.k)
    if state.mode is CodingMode.SHANNON:
        state.current_code = shannon_code(dist)
    else:
        state.current_code = gilbert_moore_code(dist)
    if with_table:
        state.current_table = decodetable.build(state.current_code, state.width)
    return state


def _check_symbols(symbols, sigma: int) -> np.ndarray:
    s = np.asarray(symbols)
    if s.ndim != 1:
        raise UsageError("symbols must be a one-dimensional sequence")
    if s.size and (s.dtype.kind not in "iub"):
        raise UsageError(f"symbols must be integers, got dtype {s.dtype}")
    s = s.astype(np.int64, copy=False)
    if s.size and (s.min() < 0 or s.max() >= sigma):
        bad = s[(s < 0) | (s >= sigma)][0]
        raise UsageError(f"symbol {bad} outside alphabet of size {sigma}")
    return s


def _setup(sigma: int, n: int, mode) -> CoderState:
    params = derive_params(sigma, n)
    state = CoderState.start(params, CodingMode.parse(mode))
    if state.width > MAX_TABLE_WIDTH:
        raise UsageError(f"sigma={sigma}, n={n} need a {state.width}-bit decode table "
                         f"(limit {MAX_TABLE_WIDTH})")
    assert state.width <= MAX_CODEWORD
    return state


Trace = Callable[[CoderState, int, int], None]


def encode_stream(symbols, sigma: int, mode=CodingMode.SHANNON, *,
                  backend: str = None, trace: Trace = None) -> Payload:
    """Encode ``symbols`` (integers in ``0..sigma-1``) into a payload.

    ``trace(state, start, stop)`` is called before each block is coded, with
    the state whose code covers ``symbols[start:stop]``.
    """
    s = _check_symbols(symbols, sigma)
    n = s.shape[0]
    if n == 0:
        if sigma < 2:
            raise UsageError(f"alphabet size must be >= 2, got {sigma}")
        return Payload(b"", 0)
    state = _setup(sigma, n, mode)
    kern = get_backend(backend)
    b = state.params.b

    values = np.empty(n, dtype=np.int64)
    lengths = np.empty(n, dtype=np.uint8)
    for start in range(0, n, b):
        stop = min(start + b, n)
        if start:
            rebuild_code(state)
        if trace is not None:
            trace(state, start, stop)
        code_values, code_lengths = state.current_code.arrays()
        block = s[start:stop]
        values[start:stop] = code_values[block]
        lengths[start:stop] = code_lengths[block]
        state.freq.record_many(block)
        state.position = stop

    data, nbits = kern.pack(values, lengths)
    return Payload(data.tobytes(), nbits)


def decode_stream(payload, sigma: int, n: int, mode=CodingMode.SHANNON, *,
                  backend: str = None, trace: Trace = None) -> np.ndarray:
    """Decode ``n`` symbols; ``payload`` is a Payload, BitSource, or bytes.

    Raises :class:`CorruptStreamError` on an invalid table slot, an
    out-of-range fixed-width value, or a payload that ends too early.
    """
    if isinstance(payload, Payload):
        data, pos, limit = payload.data, 0, payload.nbits
    elif isinstance(payload, BitSource):
        data, pos, limit = payload.buffer, payload.cursor, payload.limit
    else:
        data = bytes(payload)
        pos, limit = 0, 8 * len(data)
    out = np.empty(n, dtype=np.int64)
    if n == 0:
        return out
    state = _setup(sigma, n, mode)
    kern = get_backend(backend)
    buf = np.frombuffer(data, dtype=np.uint8)
    b = state.params.b

    for start in range(0, n, b):
        stop = min(start + b, n)
        if start:
            rebuild_code(state, with_table=True)
        if trace is not None:
            trace(state, start, stop)
        if start == 0:
            pos = kern.decode_fixed(buf, limit, pos, stop, state.params.first_width,
                                    sigma, out, 0)
        else:
            t = state.current_table
            pos = kern.decode_table(buf, limit, pos, stop - start, t.symbols, t.lengths,
                                    t.width, out, start)
        if pos < 0:
            what = "invalid codeword" if pos == CORRUPT else "payload ends early"
            raise CorruptStreamError(f"{what} in block starting at symbol {start}")
        state.freq.record_many(out[start:stop])
        state.position = stop

    if isinstance(payload, BitSource):
        payload.cursor = pos
    return out
