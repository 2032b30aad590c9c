"""Prefix-code construction: fixed-length, Shannon (canonical) and
Gilbert-Moore (alphabetic) codes, built from exact rational distributions."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import UsageError
from .model import SmoothedDistribution, ceil_log2

FIXED = "fixed"
SHANNON = "shannon"
GILBERT_MOORE = "gilbert_moore"


@dataclass(frozen=True)
class PrefixCode:
    """Codeword ``values[i]`` of ``lengths[i]`` bits for each symbol ``i``."""

    values: tuple
    lengths: tuple
    kind: str

    @property
    def sigma(self) -> int:
        return len(self.lengths)

    @property
    def max_length(self) -> int:
        return max(self.lengths)

    def codeword(self, symbol: int) -> str:
        n = self.lengths[symbol]
        return format(self.values[symbol], f"0{n}b") if n else ""

    def codewords(self) -> list:
        return [self.codeword(i) for i in range(self.sigma)]

    def arrays(self):
        """``(values, lengths)`` as int64 / uint8 arrays for the kernels."""
        return (np.array(self.values, dtype=np.int64),
                np.array(self.lengths, dtype=np.uint8))

    @classmethod
    def from_codewords(cls, words: Sequence[str], kind: str = "custom") -> "PrefixCode":
        return cls(tuple(int(w, 2) for w in words), tuple(len(w) for w in words), kind)


def fixed_length_code(sigma: int) -> PrefixCode:
    if sigma < 2:
        raise UsageError(f"alphabet size must be >= 2, got {sigma}")
    width = ceil_log2(sigma)
    return PrefixCode(tuple(range(sigma)), (width,) * sigma, FIXED)


def _check_positive(dist: SmoothedDistribution):
    if any(num <= 0 for num in dist.numerators):
        raise UsageError("every probability must be positive")


def shannon_lengths(dist: SmoothedDistribution) -> list:
    """``ceil(lg(1/p))`` per symbol, clamped to at least 1.

    ``2**l >= den/num`` holds exactly when ``2**l >= ceil(den/num)``, so the
    length is the bit length of ``ceil(den/num) - 1``.
    """
    _check_positive(dist)
    den = dist.denominator
    return [max(1, ceil_log2(-(-den // num))) for num in dist.numerators]


def canonical_assign(lengths: Sequence[int], kind: str = SHANNON) -> PrefixCode:
    """Canonical codewords for ``lengths``; ties broken by symbol index."""
    if any(l < 1 for l in lengths):
        raise UsageError("codeword lengths must be >= 1")
    order = sorted(range(len(lengths)), key=lambda i: (lengths[i], i))
    values = [0] * len(lengths)
    code = 0
    prev = lengths[order[0]]
    for i in order:
        code <<= lengths[i] - prev
        prev = lengths[i]
        values[i] = code
        code += 1
    if code > 1 << prev:
        raise AssertionError(f"lengths {list(lengths)} violate the Kraft inequality")
    return PrefixCode(tuple(values), tuple(lengths), kind)


def shannon_code(dist: SmoothedDistribution) -> PrefixCode:
    return canonical_assign(shannon_lengths(dist), SHANNON)


def gilbert_moore_code(dist: SmoothedDistribution) -> PrefixCode:
    """Alphabetic code: symbol ``i`` gets the first ``ceil(lg(1/p_i)) + 1``
    bits of the midpoint ``p_0 + ... + p_{i-1} + p_i/2``.

    Midpoints are kept over ``2*den`` so they stay integral; taking
    ``floor(mid * 2**l)`` equals ``l`` rounds of exact binary doubling.
    """
    lengths = [l + 1 for l in shannon_lengths(dist)]
    den2 = 2 * dist.denominator
    values = []
    cum = 0
    for num, l in zip(dist.numerators, lengths):
        mid = 2 * cum + num
        values.append((mid << l) // den2)
        cum += num
    return PrefixCode(tuple(values), tuple(lengths), GILBERT_MOORE)


def kraft_sum(lengths: Sequence[int]):
    return sum(Fraction(1, 1 << l) for l in lengths)
