"""Slow reference paths used to check the fast ones.

- :func:`tree_walk_decode` walks a code tree one bit at a time. It shares
  nothing with the decode table.
- :func:`verify_bound` compares the payload size with ``n(H+1)`` (Shannon)
  or ``n(H+2)`` (alphabetic) plus a lower-order allowance.
- :func:`per_symbol_length_audit` traces the encoder and reports the
  longest codeword it used.
"""
from dataclasses import asdict, dataclass

import numpy as np

from .adaptive import CodingMode, encode_stream
from .model import derive_params, empirical_entropy
from .bitio import BitSource, Payload
from .codebuilder import PrefixCode
from .errors import CorruptStreamError

DEFAULT_ALLOWANCE = 4


def _build_tree(code: PrefixCode):
    root = {}
    for sym in range(code.sigma):
        node = root
        word = code.codeword(sym)
        for bit in word[:-1]:
            node = node.setdefault(bit, {})
            if not isinstance(node, dict):
                raise ValueError(f"codeword {word} extends another codeword")
        if word[-1] in node:
            raise ValueError(f"codeword {word} is a prefix of another codeword")
        node[word[-1]] = sym
    return root


def tree_walk_decode(code: PrefixCode, payload, count: int) -> list:
    src = payload.source() if isinstance(payload, Payload) else payload
    if not isinstance(src, BitSource):
        src = BitSource(src)
    rest = src.remaining
    bits = Payload(src.buffer, src.limit).to_bitstring()[src.cursor:]
    root = _build_tree(code)
    out = []
    pos = 0
    for _ in range(count):
        node = root
        while isinstance(node, dict):
            if pos == rest:
                raise CorruptStreamError("payload ends inside a codeword")
            node = node.get(bits[pos])
            pos += 1
            if node is None:
                raise CorruptStreamError("bit sequence leaves the code tree")
        out.append(node)
    src.advance(pos)
    return out


@dataclass
class BoundReport:
    n: int
    sigma: int
    mode: str
    H: float
    payload_bits: int
    per_symbol: float
    target: float
    slack: float
    lower_order_allowance: float

    @property
    def passed(self) -> bool:
        return self.slack <= self.lower_order_allowance

    def to_text(self) -> str:
        fields = asdict(self)
        fields["target_formula"] = "H+1" if self.mode == "shannon" else "H+2"
        fields["pass"] = int(self.passed)
        return "".join(f"{k}={v}\n" for k, v in fields.items())


def verify_bound(symbols, sigma: int, mode=CodingMode.SHANNON, c: float = DEFAULT_ALLOWANCE,
                 backend: str = None) -> BoundReport:
    mode = CodingMode.parse(mode)
    s = np.asarray(symbols, dtype=np.int64)
    n = s.shape[0]
    payload = encode_stream(s, sigma, mode, backend=backend)
    H = empirical_entropy(np.bincount(s, minlength=sigma), n)
    L = derive_params(sigma, n).L
    per_symbol = payload.nbits / n
    target = H + (1 if mode is CodingMode.SHANNON else 2)
    return BoundReport(
        n=n, sigma=sigma, mode=mode.name.lower(), H=H, payload_bits=payload.nbits,
        per_symbol=per_symbol, target=target, slack=per_symbol - target,
        lower_order_allowance=c * sigma ** 2 * L ** 2 / n)


def per_symbol_length_audit(symbols, sigma: int, mode=CodingMode.SHANNON, backend: str = None):
    """Longest codeword emitted while encoding ``symbols``.

    The maximum is taken from the traced codes, and the payload size is
    checked against the sum of the traced lengths.
    """
    s = np.asarray(symbols, dtype=np.int64)
    longest = 0
    total = 0

    def trace(state, start, stop):
        nonlocal longest, total
        used = np.asarray(state.current_code.lengths)[s[start:stop]]
        longest = max(longest, int(used.max()))
        total += int(used.sum())

    payload = encode_stream(s, sigma, mode, backend=backend, trace=trace)
    if total != payload.nbits:
        raise AssertionError(f"traced {total} bits but payload has {payload.nbits}")
    return longest
