"""Symbol statistics: block parameters, running counts, the smoothed
distribution used to build each block's code, and empirical entropy.

Everything feeding code construction is exact integer arithmetic. Python
ints are unbounded, so large ``sigma`` and ``n`` cannot overflow.
"""
from dataclasses import dataclass
import math
from typing import Sequence

import numpy as np

from .errors import UsageError


def ceil_log2(x: int) -> int:
    """Smallest ``e >= 0`` with ``2**e >= x`` (for ``x >= 1``)."""
    return (x - 1).bit_length()


@dataclass(frozen=True)
class AlphabetParams:
    sigma: int
    n: int
    L: int
    b: int

    @property
    def first_width(self) -> int:
        """Codeword width of the fixed-length first-block code."""
        return ceil_log2(self.sigma)

    @property
    def bound_regime_ok(self) -> bool:
        """False when ``sigma**2 * L**2 >= n``, where the length bounds say little."""
        return self.sigma ** 2 * self.L ** 2 < self.n


def derive_params(sigma: int, n: int) -> AlphabetParams:
    """``L = ceil(lg n)`` clamped to at least 1, and block size ``b = sigma * L``."""
    if sigma < 2:
        raise UsageError(f"alphabet size must be >= 2, got {sigma}")
    if n < 1:
        raise UsageError(f"input length must be >= 1, got {n}")
    L = max(1, ceil_log2(n))
    return AlphabetParams(sigma=sigma, n=n, L=L, b=sigma * L)


@dataclass
class FrequencyTable:
    sigma: int
    counts: np.ndarray = None
    processed: int = 0

    def __post_init__(self):
        if self.counts is None:
            self.counts = np.zeros(self.sigma, dtype=np.int64)

    def record(self, symbol: int) -> "FrequencyTable":
        if not 0 <= symbol < self.sigma:
            raise UsageError(f"symbol {symbol} outside alphabet of size {self.sigma}")
        self.counts[symbol] += 1
        self.processed += 1
        return self

    def record_many(self, symbols: np.ndarray) -> "FrequencyTable":
        """Bulk :meth:`record`; ``symbols`` must already be range-checked."""
        self.counts += np.bincount(symbols, minlength=self.sigma)
        self.processed += len(symbols)
        return self

    def copy(self) -> "FrequencyTable":
        return FrequencyTable(self.sigma, self.counts.copy(), self.processed)


@dataclass(frozen=True)
class SmoothedDistribution:
    """Probabilities ``numerators[i] / denominator`` as exact integers."""

    numerators: tuple
    denominator: int

    @property
    def sigma(self) -> int:
        return len(self.numerators)

    @classmethod
    def from_fractions(cls, probs: Sequence) -> "SmoothedDistribution":
        """Build from ``fractions.Fraction`` values over a common denominator."""
        den = math.lcm(*(p.denominator for p in probs))
        return cls(tuple(int(p * den) for p in probs), den)


def smoothed_distribution(table: FrequencyTable, params: AlphabetParams, k: int) -> SmoothedDistribution:
    """Mix the empirical distribution of the first ``k`` blocks with uniform.

    With ``L`` standing in for ``lg n``, symbol ``i`` gets probability
    ``(L-1)/L * counts[i]/(k*b) + 1/(sigma*L)``, which over the common
    denominator ``L*sigma*k*b`` has numerator ``(L-1)*sigma*counts[i] + k*b``.
    """
    if k < 1:
        raise UsageError("smoothed distribution needs at least one completed block")
    kb = k * params.b
    if table.processed != kb:
        raise UsageError(f"expected {kb} processed symbols at block boundary, have {table.processed}")
    scale = (params.L - 1) * params.sigma
    nums = tuple(scale * c + kb for c in table.counts.tolist())
    return SmoothedDistribution(nums, params.L * params.sigma * kb)


@dataclass(frozen=True)
class EntropyReport:
    H: float
    total_bits: int
    slack_per_symbol: float


def empirical_entropy(counts, n: int) -> float:
    """Empirical entropy of a string with symbol ``counts``, in bits per symbol."""
    counts = np.asarray(counts, dtype=np.float64)
    if n < 1 or counts.sum() != n:
        raise UsageError("counts must sum to n >= 1")
    c = counts[counts > 0]
    return float(np.sum(c / n * np.log2(n / c)))


def entropy_report(counts, n: int, total_bits: int) -> EntropyReport:
    H = empirical_entropy(counts, n)
    return EntropyReport(H=H, total_bits=total_bits, slack_per_symbol=total_bits / n - H)
