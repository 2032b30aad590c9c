"""Per-symbol inner loops: codeword packing and table-driven decoding.

Two interchangeable backends share one calling convention:

``pack(values, lengths) -> (bytes_array, nbits)``
    Concatenate codewords MSB-first. ``values`` is int64 and ``lengths``
    is uint8, with one entry per emitted symbol.

``decode_fixed(data, limit, pos, count, width, sigma, out, start) -> pos``
    Read ``count`` raw ``width``-bit integers.

``decode_table(data, limit, pos, count, symbols, lengths, width, out, start) -> pos``
    Decode ``count`` symbols through a decode table.

The decoders write into ``out[start:start + count]`` and return the new bit
position, or ``CORRUPT`` / ``OVERRUN`` on error.

The numba backend uses plain loops. The numpy backend is vectorized: it
precomputes the table lookup at every bit offset of the block and follows
the codeword chain with pointer doubling.
"""
from types import SimpleNamespace

import numpy as np

from ._accel import DEFAULT_BACKEND, njit

CORRUPT = -1
OVERRUN = -2

# codeword lengths must leave room for 7 pending bits in a 64-bit accumulator
MAX_CODEWORD = 56


# --- numba -----------------------------------------------------------------

@njit(cache=True)
def _pack_loop(values, lengths, out):
    acc = 0
    nacc = 0
    o = 0
    for i in range(values.shape[0]):
        l = np.int64(lengths[i])
        acc = (acc << l) | values[i]
        nacc += l
        while nacc >= 8:
            nacc -= 8
            out[o] = (acc >> nacc) & 0xFF
            o += 1
        acc &= (np.int64(1) << nacc) - 1
    if nacc > 0:
        out[o] = (acc << (8 - nacc)) & 0xFF


@njit(cache=True)
def _peek(data, limit, pos, width):
    nbytes = data.shape[0]
    res = 0
    p = pos
    rem = width
    while rem > 0:
        bi = p >> 3
        o = p & 7
        take = min(8 - o, rem)
        byte = 0
        if bi < nbytes:
            byte = np.int64(data[bi])
        res = (res << take) | ((byte >> (8 - o - take)) & ((1 << take) - 1))
        rem -= take
        p += take
    end = pos + width
    if end > limit:
        cut = end - limit
        res = (res >> cut) << cut
    return res


@njit(cache=True)
def _decode_fixed_loop(data, limit, pos, count, width, sigma, out, start):
    for i in range(count):
        if pos + width > limit:
            return -2
        v = _peek(data, limit, pos, width)
        if v >= sigma:
            return -1
        out[start + i] = v
        pos += width
    return pos


@njit(cache=True)
def _decode_table_loop(data, limit, pos, count, symbols, lengths, width, out, start):
    for i in range(count):
        if pos >= limit:
            return -2
        w = _peek(data, limit, pos, width)
        l = np.int64(lengths[w])
        if l == 0:
            return -1
        if pos + l > limit:
            return -2
        out[start + i] = symbols[w]
        pos += l
    return pos


def _pack_numba(values, lengths):
    nbits = int(lengths.sum(dtype=np.int64))
    out = np.zeros((nbits + 7) >> 3, dtype=np.uint8)
    _pack_loop(values, lengths, out)
    return out, nbits


# --- numpy -----------------------------------------------------------------

_PACK_CHUNK = 1 << 16


def _pack_numpy(values, lengths):
    lens = lengths.astype(np.int64)
    nbits = int(lens.sum())
    bits = np.empty(nbits, dtype=np.uint8)
    base = 0
    for lo in range(0, len(lens), _PACK_CHUNK):
        l = lens[lo:lo + _PACK_CHUNK]
        v = values[lo:lo + _PACK_CHUNK]
        total = int(l.sum())
        owner = np.repeat(np.arange(len(l)), l)
        offset = np.arange(total) - (np.cumsum(l) - l)[owner]
        shift = l[owner] - 1 - offset
        bits[base:base + total] = (v[owner] >> shift) & 1
        base += total
    return np.packbits(bits), nbits


def _bit_window(data, limit, pos, nbits):
    """``nbits`` bits starting at ``pos`` as a 0/1 array, zero past ``limit``."""
    first = pos >> 3
    last = min(data.shape[0], (pos + nbits + 7) >> 3)
    raw = np.unpackbits(data[first:last]) if last > first else np.zeros(0, np.uint8)
    bits = np.zeros(nbits, dtype=np.int64)
    raw = raw[pos - 8 * first:]
    avail = max(0, min(nbits, limit - pos, raw.shape[0]))
    bits[:avail] = raw[:avail]
    return bits


def _windows(bits, offsets, width):
    w = np.zeros(offsets.shape[0], dtype=np.int64)
    for t in range(width):
        w = (w << 1) | bits[offsets + t]
    return w


def _decode_fixed_numpy(data, limit, pos, count, width, sigma, out, start):
    if count == 0:
        return pos
    if pos + count * width > limit:
        return OVERRUN
    bits = _bit_window(data, limit, pos, count * width)
    vals = _windows(bits, np.arange(count) * width, width)
    if np.any(vals >= sigma):
        return CORRUPT
    out[start:start + count] = vals
    return pos + count * width


def _decode_table_numpy(data, limit, pos, count, symbols, lengths, width, out, start):
    if count == 0:
        return pos
    # no codeword is longer than width, so the block starts within count*width bits
    span = min(limit - pos, count * width)
    if span <= 0:
        return OVERRUN
    bits = _bit_window(data, limit, pos, span + width)
    win = _windows(bits, np.arange(span), width)
    lens = lengths[win].astype(np.int64)
    dead = span
    nxt = np.arange(span) + lens
    nxt[(lens == 0) | (nxt >= span)] = dead
    jump = np.append(nxt, dead)
    seq = np.zeros(1, dtype=np.int64)
    while seq.shape[0] < count:
        step = jump[seq[:count - seq.shape[0]]]
        seq = np.concatenate((seq, step))
        if seq.shape[0] < count:
            jump = jump[jump]
    hit = np.flatnonzero(seq == dead)
    if hit.size:
        return CORRUPT if lens[seq[hit[0] - 1]] == 0 else OVERRUN
    used = lens[seq]
    if np.any(used == 0):
        return CORRUPT
    end = pos + int(seq[-1] + used[-1])
    if end > limit:
        return OVERRUN
    out[start:start + count] = symbols[win[seq]]
    return end


BACKENDS = {
    "numba": SimpleNamespace(name="numba", pack=_pack_numba,
                             decode_fixed=_decode_fixed_loop,
                             decode_table=_decode_table_loop),
    "numpy": SimpleNamespace(name="numpy", pack=_pack_numpy,
                             decode_fixed=_decode_fixed_numpy,
                             decode_table=_decode_table_numpy),
}


def get_backend(name=None):
    return BACKENDS[name or DEFAULT_BACKEND]
