"""Independent checks shared by several test modules."""
from fractions import Fraction
import random

from apfc.codebuilder import PrefixCode


def is_prefix_free(words):
    words = sorted(words)
    # after sorting, any prefix relation shows up between neighbours
    return all(not b.startswith(a) for a, b in zip(words, words[1:])) and len(set(words)) == len(words)


def brute_shannon_length(num, den):
    l = 0
    while num * 2 ** l < den:
        l += 1
    return max(l, 1)


def doubling_bits(num, den, count):
    """First ``count`` binary digits of num/den by repeated doubling."""
    bits = []
    for _ in range(count):
        num *= 2
        if num >= den:
            bits.append("1")
            num -= den
        else:
            bits.append("0")
    return "".join(bits)


def random_prefix_code(rng: random.Random, sigma, max_depth=16, complete=None):
    """Random code built by splitting leaves of a binary tree.

    Codewords are arbitrary, not canonical. If ``complete`` is False, some
    leaves are dropped, so the Kraft sum is below one.
    """
    if complete is None:
        complete = rng.random() < 0.5
    leaves = [""]
    while len(leaves) < sigma + (0 if complete else rng.randint(1, 3)):
        candidates = [i for i, w in enumerate(leaves) if len(w) < max_depth]
        i = rng.choice(candidates)
        w = leaves.pop(i)
        leaves += [w + "0", w + "1"]
    if not complete:
        rng.shuffle(leaves)
        leaves = leaves[:sigma]
    rng.shuffle(leaves)
    return PrefixCode.from_codewords(leaves)


def random_distribution(rng: random.Random, sigma):
    return [Fraction(rng.randint(1, 1000)) for _ in range(sigma)]


CORPUS_KINDS = ("uniform", "zipf", "skew90", "single")


def synthetic(kind, sigma, n, rng):
    """Test strings: uniform, Zipf(1.0), 90% symbol 0 / 10% spread, one symbol."""
    import numpy as np
    if kind == "uniform":
        return rng.integers(0, sigma, n)
    if kind == "zipf":
        w = 1.0 / np.arange(1, sigma + 1)
        return rng.choice(sigma, size=n, p=w / w.sum())
    if kind == "skew90":
        rest = rng.integers(1, sigma, n) if sigma > 2 else np.ones(n, dtype=np.int64)
        return np.where(rng.random(n) < 0.9, 0, rest)
    if kind == "single":
        return np.zeros(n, dtype=np.int64)
    raise ValueError(kind)
